#include "wittkit/enumeration.hpp"

#include "wittkit/errors.hpp"
#include "wittkit/oracle.hpp"

#include <algorithm>
#include <map>

namespace wittkit {

namespace {

long md(long a, long m)
{
    a %= m;
    return a < 0 ? a + m : a;
}

long pw(long p, int e)
{
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

long primitive_root_mod_p2(long p)
{
    long m = p * p, phi = p * (p - 1);
    for (long g = 2; g < m; ++g) {
        if (g % p == 0) continue;
        long x = 1;
        long ord = 0;
        do {
            x = x * g % m;
            ++ord;
        } while (x != 1);
        if (ord == phi) return g;
    }
    return 1;
}

void partitions(int left, int minv, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = minv; v <= left; ++v) {
        cur.push_back(v);
        partitions(left - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> group_types(int max_total)
{
    std::vector<std::vector<int>> out;
    for (int t = 1; t <= max_total; ++t) {
        std::vector<int> cur;
        partitions(t, 1, cur, out);
    }
    return out;
}

FormSpace::FormSpace(long p, std::vector<int> levels, int epsilon)
    : p_(p), levels_(std::move(levels)), eps_(epsilon)
{
    if (p == 2) throw EvenPrimeUnsupported("enumeration is for odd primes");
    std::sort(levels_.begin(), levels_.end());
    L_ = levels_.empty() ? 0 : levels_.back();
    P_ = pw(p, L_);
    size_t n = levels_.size();
    size_ = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            if (i == j && eps_ == -1) continue;  // 2 lambda(x, x) = 0 forces 0 at odd p
            int m = std::min(levels_[i], levels_[j]);
            free_.push_back({static_cast<int>(i), static_cast<int>(j)});
            radix_.push_back(pw(p, m));
            scale_.push_back(pw(p, L_ - m));
            if (size_ > (1ULL << 40) / static_cast<uint64_t>(radix_.back()))
                throw SearchSpaceTooLarge("too many pairings to enumerate");
            size_ *= static_cast<uint64_t>(radix_.back());
        }
    for (size_t i = 0; i < n; ++i)
        if (i == 0 || levels_[i] != levels_[i - 1]) distinct_.push_back(levels_[i]);

    long g = primitive_root_mod_p2(p);
    std::vector<size_t> first;
    for (size_t i = 0; i < n; ++i)
        if (i == 0 || levels_[i] != levels_[i - 1]) first.push_back(i);
    for (size_t b = 0; b < first.size(); ++b) {
        int s = static_cast<int>(first[b]);
        int e = static_cast<int>(b + 1 < first.size() ? first[b + 1] : n);
        gens_.push_back({Op::Scale, s, s, g});
        if (e - s >= 2) {
            gens_.push_back({Op::Swap, s, s + 1, 0});
            gens_.push_back({Op::Transvect, s, s + 1, 1});
        }
        if (e - s >= 3) gens_.push_back({Op::Cycle, s, e, 0});
    }
    for (size_t a = 0; a < first.size(); ++a)
        for (size_t b = 0; b < first.size(); ++b) {
            if (a == b) continue;
            int i = static_cast<int>(first[a]), j = static_cast<int>(first[b]);
            long c = pw(p, std::max(levels_[j] - levels_[i], 0));
            gens_.push_back({Op::Transvect, i, j, c});
        }
}

void FormSpace::decode(uint64_t idx, std::vector<long>& G) const
{
    size_t n = levels_.size();
    G.assign(n * n, 0);
    for (size_t k = 0; k < free_.size(); ++k) {
        long a = static_cast<long>(idx % static_cast<uint64_t>(radix_[k]));
        idx /= static_cast<uint64_t>(radix_[k]);
        auto [i, j] = free_[k];
        long v = a * scale_[k];
        G[i * n + j] = v;
        G[j * n + i] = md(eps_ * v, P_);
    }
}

uint64_t FormSpace::encode(const std::vector<long>& G) const
{
    size_t n = levels_.size();
    uint64_t idx = 0;
    for (size_t k = free_.size(); k-- > 0;) {
        auto [i, j] = free_[k];
        long v = md(G[i * n + j], P_);
        idx = idx * static_cast<uint64_t>(radix_[k]) + static_cast<uint64_t>(v / scale_[k]);
    }
    return idx;
}

FiniteLinkingForm FormSpace::form(uint64_t idx) const
{
    std::vector<long> G;
    decode(idx, G);
    size_t n = levels_.size();
    FiniteLinkingForm f;
    f.p = p_;
    f.orders = levels_;
    f.epsilon = eps_;
    f.gram = MatQ(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) f.gram(i, j) = mod_one(BigRat(BigInt(G[i * n + j]), BigInt(P_)));
    return f;
}

uint32_t FormSpace::invariant_code(const std::vector<long>& G) const
{
    size_t n = levels_.size();
    uint32_t code = 0;
    for (size_t d = 0; d < distinct_.size(); ++d) {
        int l = distinct_[d];
        long shift = pw(p_, L_ - l);
        std::vector<size_t> idx;
        for (size_t i = 0; i < n; ++i)
            if (levels_[i] == l) idx.push_back(i);
        std::vector<std::vector<long>> b(idx.size(), std::vector<long>(idx.size()));
        for (size_t x = 0; x < idx.size(); ++x)
            for (size_t y = 0; y < idx.size(); ++y) b[x][y] = (G[idx[x] * n + idx[y]] / shift) % p_;
        try {
            auto [r, disc] = iso_invariants_fp(b, eps_, p_);
            (void)r;
            if (disc == -1) code |= 1u << d;
        } catch (const SingularForm&) {
            return 0;
        }
    }
    return code + 1;
}

void FormSpace::apply(const Gen& g, std::vector<long>& G) const
{
    size_t n = levels_.size();
    auto at = [&](size_t i, size_t j) -> long& { return G[i * n + j]; };
    switch (g.op) {
    case Op::Scale:
        for (size_t k = 0; k < n; ++k) at(g.i, k) = md(at(g.i, k) * g.c, P_);
        for (size_t k = 0; k < n; ++k) at(k, g.i) = md(at(k, g.i) * g.c, P_);
        break;
    case Op::Swap:
        for (size_t k = 0; k < n; ++k) std::swap(at(g.i, k), at(g.j, k));
        for (size_t k = 0; k < n; ++k) std::swap(at(k, g.i), at(k, g.j));
        break;
    case Op::Cycle: {
        // e_s -> e_{s+1} -> ... -> e_{e-1} -> e_s
        std::vector<size_t> perm(n);
        for (size_t k = 0; k < n; ++k) perm[k] = k;
        for (int k = g.i; k < g.j; ++k) perm[k] = (k + 1 < g.j) ? k + 1 : g.i;
        std::vector<long> H(n * n);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) H[a * n + b] = G[perm[a] * n + perm[b]];
        G.swap(H);
        break;
    }
    case Op::Transvect:
        // e_i -> e_i + c e_j
        for (size_t k = 0; k < n; ++k) at(k, g.i) = md(at(k, g.i) + g.c * at(k, g.j), P_);
        for (size_t k = 0; k < n; ++k) at(g.i, k) = md(at(g.i, k) + g.c * at(g.j, k), P_);
        break;
    }
}

std::vector<uint32_t> invariant_codes(const FormSpace& s)
{
    std::vector<uint32_t> codes(s.size());
    const long total = static_cast<long>(s.size());
#pragma omp parallel
    {
        std::vector<long> G;
#pragma omp for schedule(static)
        for (long i = 0; i < total; ++i) {
            s.decode(static_cast<uint64_t>(i), G);
            codes[i] = s.invariant_code(G);
        }
    }
    return codes;
}

std::vector<uint32_t> invariant_codes_serial(const FormSpace& s)
{
    std::vector<uint32_t> codes(s.size());
    std::vector<long> G;
    for (uint64_t i = 0; i < s.size(); ++i) {
        s.decode(i, G);
        codes[i] = s.invariant_code(G);
    }
    return codes;
}

TypeReport analyze_type(long p, const std::vector<int>& levels, int epsilon, bool parallel, long bound)
{
    FormSpace s(p, levels, epsilon);
    TypeReport r;
    r.p = p;
    r.levels = s.levels();
    r.pairings = s.size();
    std::vector<uint32_t> codes = parallel ? invariant_codes(s) : invariant_codes_serial(s);
    std::vector<uint64_t> seen((s.size() + 63) / 64, 0);
    auto test = [&](uint64_t x) { return (seen[x >> 6] >> (x & 63)) & 1; };
    auto mark = [&](uint64_t x) { seen[x >> 6] |= 1ULL << (x & 63); };
    std::vector<long> G, G0;
    std::vector<uint64_t> queue;
    for (uint64_t start = 0; start < s.size(); ++start) {
        if (codes[start] == 0) continue;
        ++r.nonsingular;
        if (test(start)) continue;
        OrbitSummary o{start, codes[start], 0};
        queue.assign(1, start);
        mark(start);
        while (!queue.empty()) {
            uint64_t x = queue.back();
            queue.pop_back();
            ++o.size;
            if (codes[x] != o.code) ++r.code_changes_in_orbit;
            s.decode(x, G0);
            for (const auto& g : s.generators()) {
                G = G0;
                s.apply(g, G);
                uint64_t y = s.encode(G);
                if (!test(y)) {
                    mark(y);
                    queue.push_back(y);
                }
            }
        }
        r.orbits.push_back(o);
    }
    std::map<uint32_t, int> per_code;
    for (auto& o : r.orbits) ++per_code[o.code];
    for (auto& [c, k] : per_code)
        if (k > 1) r.codes_split_over_orbits += k - 1;

    for (auto& o : r.orbits) {
        FiniteLinkingForm f = s.form(o.rep);
        bool met = classify(f, Question::Metabolic);
        bool hyp = classify(f, Question::Hyperbolic);
        auto any = brute_force_lagrangians(f, OracleMode::Any, bound);
        auto pair = brute_force_lagrangians(f, OracleMode::ComplementaryPair, bound);
        r.oracle_calls += 2;
        if (met != any.found) ++r.oracle_disagreements;
        if (hyp != pair.found) ++r.oracle_disagreements;
    }
    return r;
}

DevissageReport devissage_check(long p, int level, int rank_, bool parallel, long bound)
{
    FormSpace s(p, std::vector<int>(rank_, level), 1);
    std::vector<uint32_t> codes = parallel ? invariant_codes(s) : invariant_codes_serial(s);
    std::vector<uint64_t> idx;
    for (uint64_t i = 0; i < s.size(); ++i)
        if (codes[i] != 0) idx.push_back(i);
    std::vector<char> witt(idx.size()), orc(idx.size());
    auto work = [&](size_t k) {
        FiniteLinkingForm f = s.form(idx[k]);
        witt[k] = classify(f, Question::Metabolic);
        orc[k] = brute_force_lagrangians_serial(f, OracleMode::Any, bound).found;
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < static_cast<long>(idx.size()); ++k) work(static_cast<size_t>(k));
    } else {
        for (size_t k = 0; k < idx.size(); ++k) work(k);
    }
    DevissageReport r;
    r.forms = idx.size();
    for (size_t k = 0; k < idx.size(); ++k) {
        r.witt_metabolic += witt[k];
        r.oracle_metabolic += orc[k];
    }
    return r;
}

}  // namespace wittkit
