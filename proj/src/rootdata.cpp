#include "pslab/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pslab/errors.hpp"

namespace pslab {

std::vector<int> SubsetJ::indices() const
{
    std::vector<int> out;
    for (int i = 1; i <= 32; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::vector<SubsetJ> subsets_of(SubsetJ s)
{
    std::vector<SubsetJ> out;
    for (std::uint32_t m = 0; m <= s.mask; ++m)
        if ((m & ~s.mask) == 0) out.push_back(SubsetJ{m});
    return out;
}

namespace {

int inversions(const Permutation& p, int n)
{
    int count = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p[a] > p[b]) ++count;
    return count;
}

Permutation compose(const Permutation& x, const Permutation& y, int n)
{
    Permutation out{};
    for (int k = 0; k < n; ++k) out[k] = x[y[k]];
    return out;
}

Permutation simple_perm(int i, int n)
{
    Permutation out{};
    for (int k = 0; k < n; ++k) out[k] = static_cast<std::uint8_t>(k);
    std::swap(out[i - 1], out[i]);
    return out;
}

} // namespace

RootSystem RootSystem::build_A(int r)
{
    require(r >= 1 && r <= 3, "build_A: rank must lie in 1..3");
    RootSystem R;
    R.r_ = r;
    const int n = r + 1;
    for (int h = 1; h <= r; ++h)
        for (int i = 0; i + h <= r; ++i) R.positive_.push_back({i, i + h});

    Permutation p{};
    for (int k = 0; k < n; ++k) p[k] = static_cast<std::uint8_t>(k);
    struct Entry {
        Permutation perm;
        Word word;
        int length;
    };
    std::vector<Entry> entries;
    do {
        Entry e{p, {}, inversions(p, n)};
        Permutation cur = p;
        while (inversions(cur, n) > 0) {
            // smallest left descent: value i-1 sits to the right of value i
            Permutation inv{};
            for (int k = 0; k < n; ++k) inv[cur[k]] = static_cast<std::uint8_t>(k);
            int letter = 0;
            for (int i = 1; i <= r; ++i) {
                if (inv[i - 1] > inv[i]) {
                    letter = i;
                    break;
                }
            }
            e.word.push_back(letter);
            cur = compose(simple_perm(letter, n), cur, n);
        }
        entries.push_back(std::move(e));
    } while (std::next_permutation(p.begin(), p.begin() + n));

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
    for (auto& e : entries) {
        R.perms_.push_back(e.perm);
        R.words_.push_back(e.word);
        R.lengths_.push_back(e.length);
    }
    const std::size_t m = R.perms_.size();
    std::map<Permutation, int> index;
    for (std::size_t k = 0; k < m; ++k) index[R.perms_[k]] = static_cast<int>(k);
    R.mult_.resize(m * m);
    R.inverse_.resize(m);
    Permutation id{};
    for (int k = 0; k < n; ++k) id[k] = static_cast<std::uint8_t>(k);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            const int z = index.at(compose(R.perms_[x], R.perms_[y], n));
            R.mult_[x * m + y] = z;
            if (R.perms_[z] == id) R.inverse_[x] = static_cast<int>(y);
        }
    }
    for (int i = 1; i <= r; ++i) R.simple_.push_back({index.at(simple_perm(i, n))});
    R.longest_ = {static_cast<int>(m - 1)};
    return R;
}

std::vector<int> RootSystem::simple_coordinates(Root a) const
{
    std::vector<int> out(r_, 0);
    const int sign = a.positive() ? 1 : -1;
    const int lo = std::min(a.i, a.j), hi = std::max(a.i, a.j);
    for (int k = lo; k < hi; ++k) out[k] = sign;
    return out;
}

int RootSystem::positive_index(Root a) const
{
    for (std::size_t k = 0; k < positive_.size(); ++k)
        if (positive_[k] == a) return static_cast<int>(k);
    return -1;
}

std::vector<WeylElt> RootSystem::elements() const
{
    std::vector<WeylElt> out(order());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = {static_cast<int>(k)};
    return out;
}

WeylElt RootSystem::from_word(const Word& word) const
{
    WeylElt w = identity();
    for (int letter : word) {
        require(letter >= 1 && letter <= r_, "from_word: letter out of range");
        w = multiply(w, simple(letter));
    }
    return w;
}

WeylElt RootSystem::from_permutation(const Permutation& p) const
{
    for (std::size_t k = 0; k < perms_.size(); ++k) {
        bool same = true;
        for (int c = 0; c < matrix_size(); ++c) same = same && perms_[k][c] == p[c];
        if (same) return {static_cast<int>(k)};
    }
    throw PreconditionError("from_permutation: not a permutation of the right size");
}

Root RootSystem::apply(WeylElt w, Root a) const
{
    const auto& p = perms_[w.id];
    return {p[a.i], p[a.j]};
}

std::string RootSystem::name(WeylElt w) const
{
    if (words_[w.id].empty()) return "e";
    std::string s;
    for (int letter : words_[w.id]) s += "s" + std::to_string(letter);
    return s;
}

std::vector<Root> RootSystem::phi_minus(WeylElt w) const
{
    std::vector<Root> out;
    for (Root a : positive_)
        if (!apply(w, a).positive()) out.push_back(a);
    return out;
}

std::vector<Root> RootSystem::phi_plus(WeylElt w) const
{
    std::vector<Root> out;
    for (Root a : positive_)
        if (apply(w, a).positive()) out.push_back(a);
    return out;
}

SubsetJ RootSystem::descents(WeylElt w) const
{
    SubsetJ out;
    for (int i = 1; i <= r_; ++i)
        if (length(multiply(w, simple(i))) < length(w)) out.mask |= 1u << (i - 1);
    return out;
}

SubsetJ RootSystem::left_descents(WeylElt w) const
{
    SubsetJ out;
    for (int i = 1; i <= r_; ++i)
        if (length(multiply(simple(i), w)) < length(w)) out.mask |= 1u << (i - 1);
    return out;
}

bool RootSystem::bruhat_leq(WeylElt x, WeylElt y) const
{
    const Word& wy = word(y);
    const std::size_t len = wy.size();
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        WeylElt z = identity();
        for (std::size_t k = 0; k < len; ++k)
            if ((mask >> k) & 1u) z = multiply(z, simple(wy[k]));
        if (z == x) return true;
    }
    return false;
}

bool RootSystem::in_parabolic(WeylElt w, SubsetJ J) const
{
    for (int letter : word(w))
        if (!J.contains(letter)) return false;
    return true;
}

std::vector<WeylElt> RootSystem::parabolic(SubsetJ J) const
{
    std::vector<WeylElt> out;
    for (auto w : elements())
        if (in_parabolic(w, J)) out.push_back(w);
    return out;
}

std::vector<WeylElt> RootSystem::min_coset_reps(SubsetJ J) const
{
    std::vector<WeylElt> out;
    for (auto w : elements()) {
        bool minimal = true;
        for (int j : J.indices()) minimal = minimal && length(multiply(w, simple(j))) > length(w);
        if (minimal) out.push_back(w);
    }
    return out;
}

WeylElt RootSystem::longest(SubsetJ J) const
{
    WeylElt best = identity();
    for (auto w : parabolic(J))
        if (length(w) > length(best)) best = w;
    return best;
}

Word RootSystem::word_in(SubsetJ J, WeylElt w) const
{
    require(in_parabolic(w, J), "word_in: element is not in W_J");
    Word out;
    WeylElt cur = w;
    while (length(cur) > 0) {
        int letter = 0;
        for (int i : J.indices()) {
            if (length(multiply(simple(i), cur)) < length(cur)) {
                letter = i;
                break;
            }
        }
        out.push_back(letter);
        cur = multiply(simple(letter), cur);
    }
    return out;
}

std::vector<WeylElt> RootSystem::z_set(SubsetJ J, SubsetJ Itheta) const
{
    require(J.subset_of(Itheta), "z_set: J must be a subset of I(theta)");
    require(Itheta.subset_of(all()), "z_set: I(theta) must be a subset of I");
    const SubsetJ allowed = J | all().minus(Itheta);
    const WeylElt wJ = longest(J);
    std::vector<WeylElt> out;
    for (auto w : min_coset_reps(J))
        if (descents(multiply(w, wJ)).subset_of(allowed)) out.push_back(w);
    return out;
}

} // namespace pslab
