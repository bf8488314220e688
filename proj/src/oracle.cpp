#include "wittkit/oracle.hpp"

#include "wittkit/errors.hpp"
#include "wittkit/snf.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace wittkit {

namespace {

using Bits = std::vector<uint64_t>;

struct BitsHash {
    size_t operator()(const Bits& b) const
    {
        uint64_t h = 1469598103934665603ULL;
        for (uint64_t w : b) h = (h ^ w) * 1099511628211ULL;
        return h;
    }
};

// Elements of a p-primary group in mixed radix, with pairing numerators.
class Group {
public:
    Group(const FiniteLinkingForm& f, long bound) : n_(f.rank()), p_(f.p)
    {
        BigInt order = f.group_order();
        if (order > bound) throw SearchSpaceTooLarge("|T| = " + to_string(order) + " exceeds the search bound");
        size_ = order.get_si();
        L_ = f.max_level();
        P_ = 1;
        for (int i = 0; i < L_; ++i) P_ *= p_;
        for (int l : f.orders) {
            long m = 1;
            for (int i = 0; i < l; ++i) m *= p_;
            mod_.push_back(m);
        }
        G_ = f.numerators();
        coords_.resize(size_ * n_);
        stride_.resize(n_);
        long s = 1;
        for (size_t i = 0; i < n_; ++i) {
            stride_[i] = s;
            s *= mod_[i];
        }
        for (long x = 0; x < size_; ++x)
            for (size_t i = 0; i < n_; ++i) coords_[x * n_ + i] = (x / stride_[i]) % mod_[i];
        // phi_x(j) = sum_i x_i G_ij mod P
        phi_.resize(size_ * n_);
        for (long x = 0; x < size_; ++x)
            for (size_t j = 0; j < n_; ++j) {
                long acc = 0;
                for (size_t i = 0; i < n_; ++i) acc = (acc + coords_[x * n_ + i] * G_[i][j]) % P_;
                phi_[x * n_ + j] = acc;
            }
    }

    long size() const { return size_; }
    size_t words() const { return (size_ + 63) / 64; }
    long pair(long x, long y) const
    {
        long acc = 0;
        for (size_t j = 0; j < n_; ++j) acc = (acc + phi_[x * n_ + j] * coords_[y * n_ + j]) % P_;
        return acc;
    }
    long add(long x, long y) const
    {
        long r = 0;
        for (size_t i = 0; i < n_; ++i) r += ((coords_[x * n_ + i] + coords_[y * n_ + i]) % mod_[i]) * stride_[i];
        return r;
    }
    long coord(long x, size_t i) const { return coords_[x * n_ + i]; }
    size_t rank() const { return n_; }

    // Closure of the subgroup H (element list + bitset) with x adjoined.
    void adjoin(std::vector<long>& elems, Bits& bits, long x) const
    {
        if (test(bits, x)) return;
        std::vector<long> base = elems;
        long m = x;
        while (!test(bits, m)) {
            for (long h : base) {
                long y = add(h, m);
                set(bits, y);
                elems.push_back(y);
            }
            m = add(m, x);
        }
    }

    static bool test(const Bits& b, long x) { return (b[x >> 6] >> (x & 63)) & 1; }
    static void set(Bits& b, long x) { b[x >> 6] |= 1ULL << (x & 63); }

private:
    size_t n_;
    long p_, size_ = 0, P_ = 1;
    int L_ = 0;
    std::vector<long> mod_, stride_, coords_, phi_;
    std::vector<std::vector<long>> G_;
};

struct Sub {
    std::vector<long> elems;
    Bits bits;
    std::vector<long> gens;
};

// One frontier step: every isotropic extension of every subgroup in cur by one element.
std::vector<Sub> extend(const Group& g, const std::vector<Sub>& cur, long target, bool parallel)
{
    std::vector<std::vector<Sub>> local(cur.size());
    auto work = [&](size_t k) {
        const Sub& h = cur[k];
        std::unordered_set<Bits, BitsHash> seen;
        for (long x = 1; x < g.size(); ++x) {
            if (Group::test(h.bits, x)) continue;
            if (g.pair(x, x) != 0) continue;
            bool iso = true;
            for (long y : h.gens)
                if (g.pair(x, y) != 0) {
                    iso = false;
                    break;
                }
            if (!iso) continue;
            Sub s = h;
            g.adjoin(s.elems, s.bits, x);
            if (static_cast<long>(s.elems.size()) > target) continue;
            if (!seen.insert(s.bits).second) continue;
            s.gens.push_back(x);
            local[k].push_back(std::move(s));
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < static_cast<long>(cur.size()); ++k) work(static_cast<size_t>(k));
    } else {
        for (size_t k = 0; k < cur.size(); ++k) work(k);
    }
    std::vector<Sub> out;
    std::unordered_set<Bits, BitsHash> seen;
    for (auto& v : local)
        for (auto& s : v)
            if (seen.insert(s.bits).second) out.push_back(std::move(s));
    return out;
}

long isqrt_exact(long n)
{
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n ? r : -1;
}

std::vector<Sub> lagrangian_subs(const Group& g, bool parallel)
{
    long target = isqrt_exact(g.size());
    std::vector<Sub> out;
    if (target < 0) return out;
    Sub zero;
    zero.bits.assign(g.words(), 0);
    Group::set(zero.bits, 0);
    zero.elems = {0};
    std::vector<Sub> frontier = {zero};
    std::unordered_set<Bits, BitsHash> found, visited;
    while (!frontier.empty()) {
        std::vector<Sub> keep;
        for (auto& s : frontier) {
            if (static_cast<long>(s.elems.size()) == target) {
                if (found.insert(s.bits).second) out.push_back(std::move(s));
            } else {
                keep.push_back(std::move(s));
            }
        }
        frontier.clear();
        for (auto& s : extend(g, keep, target, parallel))
            if (visited.insert(s.bits).second) frontier.push_back(std::move(s));
    }
    return out;
}

MatZ witness_matrix(const Group& g, const FiniteLinkingForm& f, const Sub& s)
{
    size_t n = g.rank();
    MatZ gens(n, s.gens.size());
    for (size_t c = 0; c < s.gens.size(); ++c)
        for (size_t i = 0; i < n; ++i) gens(i, c) = g.coord(s.gens[c], i);
    // Canonical form: HNF of the lattice spanned by gens and the relations.
    MatZ rows(gens.cols() + n, n);
    for (size_t c = 0; c < gens.cols(); ++c)
        for (size_t i = 0; i < n; ++i) rows(c, i) = gens(i, c);
    for (size_t i = 0; i < n; ++i) rows(gens.cols() + i, i) = ipow(BigInt(f.p), static_cast<unsigned>(f.orders[i]));
    MatZ h = hermite_normal_form(rows);
    std::vector<size_t> nonzero;
    MatZ red(n, h.rows());
    for (size_t r = 0; r < h.rows(); ++r) {
        bool any = false;
        for (size_t i = 0; i < n; ++i) {
            red(i, r) = mod_pos(h(r, i), ipow(BigInt(f.p), static_cast<unsigned>(f.orders[i])));
            if (red(i, r) != 0) any = true;
        }
        if (any) nonzero.push_back(r);
    }
    return red.columns(nonzero);
}

std::vector<BigInt> key_of(const MatZ& m)
{
    std::vector<BigInt> k;
    for (size_t j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < m.rows(); ++i) k.push_back(m(i, j));
    return k;
}

// Is there a subgroup C with C + L = T and C meet L = 0?
bool has_complement(const Group& g, const Sub& l)
{
    long target = g.size() / static_cast<long>(l.elems.size());
    Sub zero;
    zero.bits.assign(g.words(), 0);
    Group::set(zero.bits, 0);
    zero.elems = {0};
    std::vector<Sub> frontier = {zero};
    std::unordered_set<Bits, BitsHash> seen;
    while (!frontier.empty()) {
        std::vector<Sub> next;
        for (const auto& h : frontier) {
            if (static_cast<long>(h.elems.size()) == target) return true;
            for (long x = 1; x < g.size(); ++x) {
                if (Group::test(h.bits, x) || Group::test(l.bits, x)) continue;
                Sub s = h;
                g.adjoin(s.elems, s.bits, x);
                if (static_cast<long>(s.elems.size()) > target) continue;
                bool meets = false;
                for (long y : s.elems)
                    if (y != 0 && Group::test(l.bits, y)) {
                        meets = true;
                        break;
                    }
                if (meets) continue;
                if (!seen.insert(s.bits).second) continue;
                next.push_back(std::move(s));
            }
        }
        frontier = std::move(next);
    }
    return false;
}

OracleResult run(const FiniteLinkingForm& f, OracleMode mode, long bound, bool parallel)
{
    f.validate();
    Group g(f, bound);
    auto subs = lagrangian_subs(g, parallel);
    std::vector<std::pair<std::vector<BigInt>, size_t>> order;
    std::vector<MatZ> mats;
    for (size_t i = 0; i < subs.size(); ++i) {
        mats.push_back(witness_matrix(g, f, subs[i]));
        order.push_back({key_of(mats.back()), i});
    }
    std::sort(order.begin(), order.end());

    OracleResult r;
    r.mode = mode;
    r.lagrangian_count = subs.size();
    if (mode == OracleMode::Any) {
        if (!order.empty()) {
            r.found = true;
            r.witnesses.push_back(mats[order[0].second]);
        }
    } else if (mode == OracleMode::Split) {
        for (auto& [k, i] : order)
            if (has_complement(g, subs[i])) {
                r.found = true;
                r.witnesses.push_back(mats[i]);
                break;
            }
    } else {
        for (size_t a = 0; a < order.size() && !r.found; ++a)
            for (size_t b = a + 1; b < order.size() && !r.found; ++b) {
                const Sub& x = subs[order[a].second];
                const Sub& y = subs[order[b].second];
                bool meet = false;
                for (long e : x.elems)
                    if (e != 0 && Group::test(y.bits, e)) {
                        meet = true;
                        break;
                    }
                if (!meet) {
                    r.found = true;
                    r.witnesses.push_back(mats[order[a].second]);
                    r.witnesses.push_back(mats[order[b].second]);
                }
            }
        // The zero group is hyperbolic with the zero pair.
        if (!r.found && g.size() == 1) r.found = true;
    }
    return r;
}

}  // namespace

OracleResult brute_force_lagrangians(const FiniteLinkingForm& f, OracleMode mode, long bound)
{
    return run(f, mode, bound, true);
}

OracleResult brute_force_lagrangians_serial(const FiniteLinkingForm& f, OracleMode mode, long bound)
{
    return run(f, mode, bound, false);
}

std::vector<std::vector<int>> enumerate_lagrangians(const FiniteLinkingForm& f, bool parallel, long bound)
{
    f.validate();
    Group g(f, bound);
    std::vector<std::vector<int>> out;
    for (auto& s : lagrangian_subs(g, parallel)) {
        std::vector<int> e(s.elems.begin(), s.elems.end());
        std::sort(e.begin(), e.end());
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool brute_force_isomorphic(const FiniteLinkingForm& f, const FiniteLinkingForm& h, long bound)
{
    if (f.p != h.p || f.epsilon != h.epsilon) return false;
    auto a = f.orders, b = h.orders;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    if (f.rank() == 0) return true;
    Group gh(h, bound);
    auto G = f.numerators();  // same max level as h
    size_t n = f.rank();
    std::vector<long> mod(n);
    for (size_t i = 0; i < n; ++i) {
        mod[i] = 1;
        for (int k = 0; k < f.orders[i]; ++k) mod[i] *= f.p;
    }
    // Candidates for each generator image: elements y with mod[i] * y = 0.
    std::vector<std::vector<long>> cand(n);
    for (size_t i = 0; i < n; ++i)
        for (long y = 0; y < gh.size(); ++y) {
            long m = 0;
            for (long k = 0; k < mod[i]; ++k) m = gh.add(m, y);
            if (m == 0 && gh.pair(y, y) == G[i][i]) cand[i].push_back(y);
        }
    std::vector<long> img(n);
    auto rec = [&](auto&& self, size_t i) -> bool {
        if (i == n) {
            std::vector<long> elems = {0};
            Bits bits(gh.words(), 0);
            Group::set(bits, 0);
            for (long y : img) gh.adjoin(elems, bits, y);
            return static_cast<long>(elems.size()) == gh.size();
        }
        for (long y : cand[i]) {
            bool ok = true;
            for (size_t j = 0; j < i && ok; ++j) ok = gh.pair(img[j], y) == G[j][i] && gh.pair(y, img[j]) == G[i][j];
            if (!ok) continue;
            img[i] = y;
            if (self(self, i + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

}  // namespace wittkit
