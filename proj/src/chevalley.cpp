#include "pslab/chevalley.hpp"

#include <limits>

#include "pslab/errors.hpp"

namespace pslab {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow(std::uint64_t base, int e)
{
    std::uint64_t r = 1;
    for (int k = 0; k < e; ++k) r = sat_mul(r, base);
    return r;
}

} // namespace

Chevalley::Chevalley(std::shared_ptr<const FieldTower> field, std::shared_ptr<const RootSystem> roots)
    : field_(std::move(field)), roots_(std::move(roots)), n_(roots_->matrix_size())
{
    for (auto w : roots_->elements()) wdot_.push_back(word_product(roots_->word(w)));
}

Mat Chevalley::identity() const
{
    Mat m;
    m.n = n_;
    for (int k = 0; k < n_; ++k) m(k, k) = 1;
    return m;
}

Mat Chevalley::mul(const Mat& a, const Mat& b) const
{
    const FieldTower& F = *field_;
    Mat out;
    out.n = n_;
    for (int r = 0; r < n_; ++r) {
        for (int k = 0; k < n_; ++k) {
            const Elt ark = a(r, k);
            if (ark == 0) continue;
            for (int c = 0; c < n_; ++c) {
                const Elt bkc = b(k, c);
                if (bkc != 0) out(r, c) = F.add(out(r, c), F.mul(ark, bkc));
            }
        }
    }
    return out;
}

Mat Chevalley::mul(std::initializer_list<const Mat*> factors) const
{
    Mat out = identity();
    for (const Mat* f : factors) out = mul(out, *f);
    return out;
}

Mat Chevalley::inverse(const Mat& a) const
{
    const FieldTower& F = *field_;
    Mat m = a, inv = identity();
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        require(piv >= 0, "inverse: singular matrix");
        for (int k = 0; k < n_; ++k) {
            std::swap(m(c, k), m(piv, k));
            std::swap(inv(c, k), inv(piv, k));
        }
        const Elt s = F.inv(m(c, c));
        for (int k = 0; k < n_; ++k) {
            m(c, k) = F.mul(m(c, k), s);
            inv(c, k) = F.mul(inv(c, k), s);
        }
        for (int r = 0; r < n_; ++r) {
            if (r == c || m(r, c) == 0) continue;
            const Elt f = m(r, c);
            for (int k = 0; k < n_; ++k) {
                m(r, k) = F.sub(m(r, k), F.mul(f, m(c, k)));
                inv(r, k) = F.sub(inv(r, k), F.mul(f, inv(c, k)));
            }
        }
    }
    return inv;
}

Elt Chevalley::det(const Mat& a) const
{
    const FieldTower& F = *field_;
    Mat m = a;
    Elt d = 1;
    for (int c = 0; c < n_; ++c) {
        int piv = -1;
        for (int r = c; r < n_; ++r)
            if (m(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int k = 0; k < n_; ++k) std::swap(m(c, k), m(piv, k));
            d = F.neg(d);
        }
        d = F.mul(d, m(c, c));
        const Elt s = F.inv(m(c, c));
        for (int r = c + 1; r < n_; ++r) {
            if (m(r, c) == 0) continue;
            const Elt f = F.mul(m(r, c), s);
            for (int k = c; k < n_; ++k) m(r, k) = F.sub(m(r, k), F.mul(f, m(c, k)));
        }
    }
    return d;
}

Mat Chevalley::scalar(Elt z) const
{
    Mat m;
    m.n = n_;
    for (int k = 0; k < n_; ++k) m(k, k) = z;
    return m;
}

Mat Chevalley::diag(const Torus& t) const
{
    Mat m;
    m.n = n_;
    for (int k = 0; k < n_; ++k) m(k, k) = t[k];
    return m;
}

Torus Chevalley::diagonal(const Mat& a) const
{
    Torus t{};
    for (int k = 0; k < n_; ++k) t[k] = a(k, k);
    return t;
}

Mat Chevalley::eps(Root alpha, Elt c) const
{
    require(alpha.i != alpha.j && alpha.i >= 0 && alpha.j >= 0 && alpha.i < n_ && alpha.j < n_,
            "eps: invalid root");
    Mat m = identity();
    m(alpha.i, alpha.j) = c;
    return m;
}

Mat Chevalley::coroot(int i, Elt t) const
{
    require(t != 0, "coroot: parameter must be nonzero");
    require(i >= 1 && i < n_, "coroot: index out of range");
    Mat m = identity();
    m(i - 1, i - 1) = t;
    m(i, i) = field_->inv(t);
    return m;
}

Mat Chevalley::sdot(int i) const
{
    const Root a = roots_->simple_root(i);
    const Mat x = eps(a, 1);
    const Mat y = eps(a.negated(), field_->minus_one());
    return mul(mul(x, y), x);
}

Mat Chevalley::word_product(const Word& word) const
{
    Mat m = identity();
    for (int letter : word) m = mul(m, sdot(letter));
    return m;
}

Mat Chevalley::wdot_in(SubsetJ J, WeylElt w) const { return word_product(roots_->word_in(J, w)); }

BruhatForm Chevalley::bruhat_form(const Mat& g) const
{
    const FieldTower& F = *field_;
    Mat A = g, u = identity(), v = identity();
    Permutation perm{};
    for (int c = 0; c < n_; ++c) {
        int r = -1;
        for (int k = n_ - 1; k >= 0; --k)
            if (A(k, c) != 0) {
                r = k;
                break;
            }
        require(r >= 0, "bruhat_form: matrix is singular");
        perm[c] = static_cast<std::uint8_t>(r);
        const Elt pinv = F.inv(A(r, c));
        for (int i = 0; i < r; ++i) {
            if (A(i, c) == 0) continue;
            const Elt m = F.mul(A(i, c), pinv);
            for (int k = 0; k < n_; ++k) A(i, k) = F.sub(A(i, k), F.mul(m, A(r, k)));
            // u <- u (I + m E_{ir})
            for (int k = 0; k < n_; ++k) u(k, r) = F.add(u(k, r), F.mul(u(k, i), m));
        }
        for (int j = c + 1; j < n_; ++j) {
            if (A(r, j) == 0) continue;
            const Elt m = F.mul(A(r, j), pinv);
            for (int k = 0; k < n_; ++k) A(k, j) = F.sub(A(k, j), F.mul(m, A(k, c)));
            // v <- (I + m E_{cj}) v
            for (int k = 0; k < n_; ++k) v(c, k) = F.add(v(c, k), F.mul(m, v(j, k)));
        }
    }
    BruhatForm out;
    out.w = roots_->from_permutation(perm);
    const Mat& wd = wdot(out.w);
    for (int c = 0; c < n_; ++c) out.t[c] = F.div(A(perm[c], c), wd(perm[c], c));
    out.u = u;
    out.v = v;
    return out;
}

Mat Chevalley::reassemble(const BruhatForm& b) const
{
    return mul(mul(mul(b.u, wdot(b.w)), diag(b.t)), b.v);
}

Rank1Constants Chevalley::rank1_constants(int i, Elt x) const
{
    require(x != 0, "rank1_constants: x must be nonzero");
    const Mat s = sdot(i);
    const Mat lhs = mul(mul(s, eps(roots_->simple_root(i), x)), inverse(s));
    const BruhatForm b = bruhat_form(lhs);
    require(b.w == roots_->simple(i), "rank1_constants: unexpected Bruhat cell");
    Rank1Constants out;
    out.f = b.u(i - 1, i);
    out.h = b.t[i - 1];
    out.g = b.v(i - 1, i);
    return out;
}

bool Chevalley::is_unitriangular(const Mat& a) const
{
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c <= r; ++c)
            if (a(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

bool Chevalley::is_upper_triangular(const Mat& a) const
{
    for (int r = 1; r < n_; ++r)
        for (int c = 0; c < r; ++c)
            if (a(r, c) != 0) return false;
    return true;
}

bool Chevalley::is_scalar(const Mat& a) const
{
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (r != c ? a(r, c) != 0 : a(r, c) != a(0, 0)) return false;
    return true;
}

bool Chevalley::in_level(const Mat& a, int k) const
{
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
            if (!field_->in_level(a(r, c), k)) return false;
    return true;
}

bool Chevalley::supported_on(const Mat& a, const std::vector<Root>& support) const
{
    if (!is_unitriangular(a)) return false;
    for (int r = 0; r < n_; ++r)
        for (int c = r + 1; c < n_; ++c) {
            if (a(r, c) == 0) continue;
            bool found = false;
            for (Root x : support) found = found || (x.i == r && x.j == c);
            if (!found) return false;
        }
    return true;
}

Mat Chevalley::unipotent(const std::vector<Root>& support, const std::vector<Elt>& entries) const
{
    Mat m = identity();
    for (std::size_t k = 0; k < support.size(); ++k) m(support[k].i, support[k].j) = entries[k];
    return m;
}

std::vector<Mat> Chevalley::unipotents(const std::vector<Root>& support, int k) const
{
    const auto& members = field_->level_members(k);
    const std::uint64_t total = sat_pow(members.size(), static_cast<int>(support.size()));
    require_budget(total <= kGroupBudget, "unipotent enumeration exceeds budget");
    std::vector<Mat> out;
    out.reserve(total);
    std::vector<std::size_t> idx(support.size(), 0);
    std::vector<Elt> entries(support.size(), 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        for (std::size_t s = 0; s < support.size(); ++s) entries[s] = members[idx[s]];
        out.push_back(unipotent(support, entries));
        for (std::size_t s = support.size(); s-- > 0;) {
            if (++idx[s] < members.size()) break;
            idx[s] = 0;
        }
    }
    return out;
}

std::vector<Torus> Chevalley::torus(int k) const
{
    const auto& members = field_->level_members(k);
    const std::size_t units = members.size() - 1;
    const int r = n_ - 1;
    const std::uint64_t total = sat_pow(units, r);
    require_budget(total <= kGroupBudget, "torus enumeration exceeds budget");
    std::vector<Torus> out;
    out.reserve(total);
    std::vector<std::size_t> idx(r, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        Torus t{};
        Elt prod = 1;
        for (int s = 0; s < r; ++s) {
            t[s] = members[1 + idx[s]];
            prod = field_->mul(prod, t[s]);
        }
        t[r] = field_->inv(prod);
        out.push_back(t);
        for (int s = r; s-- > 0;) {
            if (++idx[s] < units) break;
            idx[s] = 0;
        }
    }
    return out;
}

std::uint64_t Chevalley::order(SubgroupKind kind, int k, WeylElt w, SubsetJ J) const
{
    const std::uint64_t qt = field_->level_size(k);
    const int npos = roots_->num_positive();
    const int r = n_ - 1;
    const std::uint64_t u = sat_pow(qt, npos), t = sat_pow(qt - 1, r);
    auto cells = [&](const std::vector<WeylElt>& ws) {
        std::uint64_t s = 0;
        for (auto x : ws) s += sat_pow(qt, roots_->length(x));
        return s;
    };
    switch (kind) {
    case SubgroupKind::U: return u;
    case SubgroupKind::T: return t;
    case SubgroupKind::B: return sat_mul(u, t);
    case SubgroupKind::G: return sat_mul(sat_mul(u, t), cells(roots_->elements()));
    case SubgroupKind::U_w: return sat_pow(qt, roots_->length(w));
    case SubgroupKind::U_prime_w: return sat_pow(qt, npos - roots_->length(w));
    case SubgroupKind::P_J: return sat_mul(sat_mul(u, t), cells(roots_->parabolic(J)));
    }
    return 0;
}

std::vector<Mat> Chevalley::enumerate(SubgroupKind kind, int k, WeylElt w, SubsetJ J) const
{
    require_budget(order(kind, k, w, J) <= kGroupBudget, "subgroup enumeration exceeds budget");
    const auto& positive = roots_->positive_roots();
    switch (kind) {
    case SubgroupKind::U: return unipotents(positive, k);
    case SubgroupKind::U_w: return unipotents(roots_->phi_minus(w), k);
    case SubgroupKind::U_prime_w: return unipotents(roots_->phi_plus(w), k);
    case SubgroupKind::T: {
        std::vector<Mat> out;
        for (const auto& t : torus(k)) out.push_back(diag(t));
        return out;
    }
    case SubgroupKind::B: {
        std::vector<Mat> out;
        const auto us = unipotents(positive, k);
        for (const auto& t : torus(k)) {
            const Mat d = diag(t);
            for (const auto& v : us) out.push_back(mul(d, v));
        }
        return out;
    }
    case SubgroupKind::G:
    case SubgroupKind::P_J: {
        const auto ws = kind == SubgroupKind::G ? roots_->elements() : roots_->parabolic(J);
        const auto us = unipotents(positive, k);
        const auto ts = torus(k);
        std::vector<Mat> out;
        for (auto x : ws) {
            const auto left = unipotents(roots_->phi_minus(roots_->inverse(x)), k);
            for (const auto& ul : left) {
                const Mat uw = mul(ul, wdot(x));
                for (const auto& t : ts) {
                    const Mat uwt = mul(uw, diag(t));
                    for (const auto& v : us) out.push_back(mul(uwt, v));
                }
            }
        }
        return out;
    }
    }
    return {};
}

std::vector<Mat> Chevalley::center(int k) const
{
    std::vector<Mat> out;
    for (Elt z : field_->level_members(k))
        if (z != 0 && field_->pow(z, n_) == 1) out.push_back(scalar(z));
    return out;
}

std::vector<Mat> Chevalley::generators(int k) const
{
    const auto basis = field_->level_basis(k);
    std::vector<Mat> out;
    for (int i = 1; i < n_; ++i) {
        const Root a = roots_->simple_root(i);
        for (Elt b : basis) {
            out.push_back(eps(a, b));
            out.push_back(eps(a.negated(), b));
        }
        out.push_back(coroot(i, field_->generator(k)));
    }
    return out;
}

std::vector<Mat> Chevalley::unipotent_generators(const std::vector<Root>& support, int k) const
{
    const auto basis = field_->level_basis(k);
    std::vector<Mat> out;
    for (Root a : support)
        for (Elt b : basis) out.push_back(eps(a, b));
    return out;
}

Torus Chevalley::random_torus(int k, std::mt19937_64& rng) const
{
    const auto& members = field_->level_members(k);
    std::uniform_int_distribution<std::size_t> pick(1, members.size() - 1);
    Torus t{};
    Elt prod = 1;
    for (int s = 0; s + 1 < n_; ++s) {
        t[s] = members[pick(rng)];
        prod = field_->mul(prod, t[s]);
    }
    t[n_ - 1] = field_->inv(prod);
    return t;
}

Mat Chevalley::random_unipotent(const std::vector<Root>& support, int k, std::mt19937_64& rng) const
{
    const auto& members = field_->level_members(k);
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    std::vector<Elt> entries(support.size());
    for (auto& x : entries) x = members[pick(rng)];
    return unipotent(support, entries);
}

Mat Chevalley::random_element(int k, std::mt19937_64& rng) const
{
    const std::uint64_t qt = field_->level_size(k);
    std::vector<double> weights;
    for (auto w : roots_->elements()) weights.push_back(static_cast<double>(sat_pow(qt, roots_->length(w))));
    std::discrete_distribution<int> cell(weights.begin(), weights.end());
    const WeylElt w{cell(rng)};
    const Mat u = random_unipotent(roots_->phi_minus(roots_->inverse(w)), k, rng);
    const Mat v = random_unipotent(roots_->positive_roots(), k, rng);
    return mul(mul(mul(u, wdot(w)), diag(random_torus(k, rng))), v);
}

} // namespace pslab
