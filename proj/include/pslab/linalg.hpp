#pragma once

#include <optional>
#include <vector>

#include "pslab/prime_field.hpp"

namespace pslab {

using Vec = std::vector<Coef>;

bool is_zero(const Vec& v);
Vec add(const PrimeField& F, const Vec& a, const Vec& b);
Vec sub(const PrimeField& F, const Vec& a, const Vec& b);
Vec scale(const PrimeField& F, Coef c, const Vec& a);
/// a += c * b
void axpy(const PrimeField& F, Vec& a, Coef c, const Vec& b);

/// Subspace of F_ell^n kept as fully reduced row echelon rows.
class Subspace {
public:
    Subspace() = default;
    Subspace(int ambient, PrimeField F) : n_(ambient), F_(F) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const PrimeField& field() const { return F_; }

    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }
    /// True when v enlarged the subspace.
    bool insert(const Vec& v);
    /// c with v = sum c_j rows_j, or nothing when v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    bool operator==(const Subspace& other) const { return n_ == other.n_ && rows_ == other.rows_; }

private:
    int n_ = 0;
    PrimeField F_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

/// Dense matrix as a list of rows.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Vec> a;

    static Matrix zero(int r, int c) { return {r, c, std::vector<Vec>(r, Vec(c, 0))}; }
    static Matrix identity(int n);
    bool operator==(const Matrix&) const = default;
    Vec column(int j) const;
};

Matrix mat_mul(const PrimeField& F, const Matrix& x, const Matrix& y);
Vec mat_vec(const PrimeField& F, const Matrix& x, const Vec& v);
Matrix mat_sub(const PrimeField& F, const Matrix& x, const Matrix& y);
int rank(const PrimeField& F, const Matrix& x);
/// Nothing when x is singular.
std::optional<Matrix> inverse(const PrimeField& F, const Matrix& x);
Matrix block_diag(const Matrix& x, const Matrix& y);
/// Span of the columns.
Subspace column_space(const PrimeField& F, const Matrix& x);
/// Basis of {v : x v = 0}.
std::vector<Vec> nullspace(const PrimeField& F, const Matrix& x);

} // namespace pslab
