#include "pslab/linalg.hpp"

#include <algorithm>

#include "pslab/errors.hpp"

namespace pslab {

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; });
}

Vec add(const PrimeField& F, const Vec& a, const Vec& b)
{
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = F.add(a[k], b[k]);
    return out;
}

Vec sub(const PrimeField& F, const Vec& a, const Vec& b)
{
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = F.sub(a[k], b[k]);
    return out;
}

Vec scale(const PrimeField& F, Coef c, const Vec& a)
{
    Vec out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = F.mul(c, a[k]);
    return out;
}

void axpy(const PrimeField& F, Vec& a, Coef c, const Vec& b)
{
    if (c == 0) return;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] != 0) a[k] = F.add(a[k], F.mul(c, b[k]));
}

Vec Subspace::reduce(Vec v) const
{
    require(static_cast<int>(v.size()) == n_, "Subspace: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Coef c = v[pivots_[r]];
        if (c != 0) axpy(F_, v, F_.neg(c), rows_[r]);
    }
    return v;
}

bool Subspace::insert(const Vec& v)
{
    Vec x = reduce(v);
    int piv = -1;
    for (int k = 0; k < n_; ++k)
        if (x[k] != 0) {
            piv = k;
            break;
        }
    if (piv < 0) return false;
    x = scale(F_, F_.inv(x[piv]), x);
    for (auto& row : rows_)
        if (row[piv] != 0) axpy(F_, row, F_.neg(row[piv]), x);
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, piv);
    rows_.insert(rows_.begin() + pos, std::move(x));
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const
{
    Vec c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    Vec back(n_, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) axpy(F_, back, c[r], rows_[r]);
    if (back != v) return std::nullopt;
    return c;
}

bool Subspace::contains(const Subspace& other) const
{
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const
{
    Subspace out = *this;
    for (const auto& row : other.rows_) out.insert(row);
    return out;
}

Subspace Subspace::intersect(const Subspace& other) const
{
    // combinations of our rows whose residual modulo `other` vanishes
    Matrix res = Matrix::zero(n_, dim());
    for (int j = 0; j < dim(); ++j) {
        const Vec r = other.reduce(rows_[j]);
        for (int k = 0; k < n_; ++k) res.a[k][j] = r[k];
    }
    Subspace out(n_, F_);
    for (const auto& c : nullspace(F_, res)) {
        Vec v(n_, 0);
        for (int j = 0; j < dim(); ++j) axpy(F_, v, c[j], rows_[j]);
        out.insert(v);
    }
    return out;
}

Vec Matrix::column(int j) const
{
    Vec out(rows);
    for (int r = 0; r < rows; ++r) out[r] = a[r][j];
    return out;
}

Matrix Matrix::identity(int n)
{
    Matrix out = zero(n, n);
    for (int k = 0; k < n; ++k) out.a[k][k] = 1;
    return out;
}

Matrix mat_sub(const PrimeField& F, const Matrix& x, const Matrix& y)
{
    require(x.rows == y.rows && x.cols == y.cols, "mat_sub: shape mismatch");
    Matrix out = x;
    for (int r = 0; r < x.rows; ++r) out.a[r] = sub(F, x.a[r], y.a[r]);
    return out;
}

std::optional<Matrix> inverse(const PrimeField& F, const Matrix& x)
{
    require(x.rows == x.cols, "inverse: matrix must be square");
    const int n = x.rows;
    if (n == 0) return x;
    Subspace s(2 * n, F);
    for (int r = 0; r < n; ++r) {
        Vec row = x.a[r];
        row.resize(2 * n, 0);
        row[n + r] = 1;
        s.insert(row);
    }
    if (s.dim() != n || s.pivots().back() >= n) return std::nullopt;
    Matrix out = Matrix::zero(n, n);
    for (int r = 0; r < n; ++r) out.a[r] = Vec(s.rows()[r].begin() + n, s.rows()[r].end());
    return out;
}

Matrix block_diag(const Matrix& x, const Matrix& y)
{
    Matrix out = Matrix::zero(x.rows + y.rows, x.cols + y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int c = 0; c < x.cols; ++c) out.a[r][c] = x.a[r][c];
    for (int r = 0; r < y.rows; ++r)
        for (int c = 0; c < y.cols; ++c) out.a[x.rows + r][x.cols + c] = y.a[r][c];
    return out;
}

Subspace column_space(const PrimeField& F, const Matrix& x)
{
    Subspace s(x.rows, F);
    for (int c = 0; c < x.cols; ++c) s.insert(x.column(c));
    return s;
}

Matrix mat_mul(const PrimeField& F, const Matrix& x, const Matrix& y)
{
    require(x.cols == y.rows, "mat_mul: shape mismatch");
    Matrix out = Matrix::zero(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) axpy(F, out.a[r], x.a[r][k], y.a[k]);
    return out;
}

Vec mat_vec(const PrimeField& F, const Matrix& x, const Vec& v)
{
    require(static_cast<int>(v.size()) == x.cols, "mat_vec: shape mismatch");
    Vec out(x.rows, 0);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k)
            if (x.a[r][k] != 0 && v[k] != 0) out[r] = F.add(out[r], F.mul(x.a[r][k], v[k]));
    return out;
}

int rank(const PrimeField& F, const Matrix& x)
{
    Subspace s(x.cols, F);
    for (const auto& row : x.a) s.insert(row);
    return s.dim();
}

std::vector<Vec> nullspace(const PrimeField& F, const Matrix& x)
{
    Subspace s(x.cols, F);
    for (const auto& row : x.a) s.insert(row);
    std::vector<bool> is_pivot(x.cols, false);
    for (int p : s.pivots()) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int free = 0; free < x.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(x.cols, 0);
        v[free] = 1;
        for (int r = 0; r < s.dim(); ++r) v[s.pivots()[r]] = F.neg(s.rows()[r][free]);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace pslab
