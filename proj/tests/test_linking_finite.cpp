#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wittkit/enumeration.hpp"
#include "wittkit/errors.hpp"
#include "wittkit/oracle.hpp"
#include "wittkit/snf.hpp"

#include <random>

using namespace wittkit;

namespace {

BigRat q(long a, long b) { return mod_one(BigRat(a, b)); }

FiniteLinkingForm form(long p, std::vector<int> orders, std::vector<std::vector<BigRat>> g, int eps = 1)
{
    FiniteLinkingForm f;
    f.p = p;
    f.orders = std::move(orders);
    f.epsilon = eps;
    f.gram = MatQ(g.size(), g.size());
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) f.gram(i, j) = mod_one(g[i][j]);
    return f;
}

long ipw(long p, int e)
{
    long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

// Elements of sum Z/p^{l_i} as coordinate vectors.
std::vector<std::vector<long>> elements(long p, const std::vector<int>& orders)
{
    std::vector<std::vector<long>> out = {{}};
    for (int l : orders) {
        std::vector<std::vector<long>> next;
        for (auto& v : out)
            for (long c = 0; c < ipw(p, l); ++c) {
                auto w = v;
                w.push_back(c);
                next.push_back(w);
            }
        out = next;
    }
    return out;
}

// Cyclic summand multiplicities from kernel sizes |ker p^m|.
std::map<int, int> multiplicities_by_kernels(long p, const std::vector<int>& orders)
{
    auto els = elements(p, orders);
    int top = 0;
    for (int l : orders) top = std::max(top, l);
    std::vector<long> logk(top + 2, 0);
    for (int m = 0; m <= top + 1; ++m) {
        long cnt = 0;
        for (auto& v : els) {
            bool zero = true;
            for (size_t i = 0; i < v.size(); ++i)
                if ((v[i] * ipw(p, m)) % ipw(p, orders[i]) != 0) zero = false;
            cnt += zero;
        }
        long lg = 0;
        while (cnt > 1) {
            cnt /= p;
            ++lg;
        }
        logk[m] = lg;
    }
    std::map<int, int> r;
    for (int l = 1; l <= top; ++l) {
        long k = (logk[l] - logk[l - 1]) - (logk[l + 1] - logk[l]);
        if (k) r[l] = static_cast<int>(k);
    }
    return r;
}

// Adjoint injectivity by enumeration.
bool nonsingular_by_enumeration(const FiniteLinkingForm& f)
{
    auto els = elements(f.p, f.orders);
    for (auto& x : els) {
        bool nz = false;
        for (long c : x) nz |= c != 0;
        if (!nz) continue;
        bool radical = true;
        for (size_t j = 0; j < f.rank() && radical; ++j) {
            BigRat s = 0;
            for (size_t i = 0; i < f.rank(); ++i) s += BigRat(x[i]) * f.gram(i, j);
            radical = is_integer(s);
        }
        if (radical) return false;
    }
    return true;
}

FiniteLinkingForm random_automorph(const FiniteLinkingForm& f, std::mt19937_64& rng)
{
    FormSpace s(f.p, f.orders, f.epsilon);
    std::vector<long> G;
    FiniteLinkingForm sorted = s.form(0);
    REQUIRE(sorted.orders == f.orders);  // callers pass sorted orders
    auto num = f.numerators();
    G.clear();
    for (auto& row : num) G.insert(G.end(), row.begin(), row.end());
    std::uniform_int_distribution<size_t> pick(0, s.generators().size() - 1);
    for (int k = 0; k < 30; ++k) s.apply(s.generators()[pick(rng)], G);
    return s.form(s.encode(G));
}

}  // namespace

TEST_CASE("primary decomposition")
{
    MixedLinkingForm m;
    m.orders = {BigInt(6)};
    m.gram = MatQ{{q(1, 6)}};
    auto parts = primary_decompose(m);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2).orders == std::vector<int>{1});
    CHECK(parts.at(2).gram(0, 0) == q(1, 2));
    // 3-part generated by 2 in Z/6: lambda(2, 2) = 4/6.
    CHECK(parts.at(3).gram(0, 0) == q(2, 3));

    FiniteLinkingForm f = form(3, {2}, {{q(1, 9)}});
    auto single = primary_decompose(to_mixed(f));
    REQUIRE(single.size() == 1);
    CHECK(single.at(3).gram == f.gram);

    m.orders = {BigInt(4), BigInt(9)};
    m.gram = MatQ{{q(1, 4), BigRat(0)}, {BigRat(0), q(1, 9)}};
    parts = primary_decompose(m);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2).orders == std::vector<int>{2});
    CHECK(parts.at(3).orders == std::vector<int>{2});
    CHECK(parts.at(2).gram(0, 0) == q(1, 4));
    CHECK(parts.at(3).gram(0, 0) == q(1, 9));

    m.orders = {BigInt(3)};
    m.gram = MatQ{{BigRat(0)}};
    CHECK_THROWS_AS(primary_decompose(m), SingularForm);
}

TEST_CASE("homogeneous split")
{
    FiniteLinkingForm f = form(2, {1, 2, 5}, {{q(1, 2), 0, 0}, {0, q(1, 4), 0}, {0, 0, q(1, 32)}});
    auto pieces = homogeneous_split(f);
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0].level == 5);
    CHECK(pieces[1].level == 2);
    CHECK(pieces[2].level == 1);
    BigInt total = 1;
    for (auto& pc : pieces) {
        CHECK(pc.form.rank() == 1);
        total *= pc.form.group_order();
    }
    CHECK(total == f.group_order());

    FiniteLinkingForm g = form(3, {1, 1}, {{q(1, 3), 0}, {0, q(1, 3)}});
    CHECK(homogeneous_split(g).size() == 1);

    FiniteLinkingForm h = form(3, {1, 2}, {{q(1, 3), q(1, 3)}, {q(1, 3), q(1, 9)}});
    pieces = homogeneous_split(h);
    REQUIRE(pieces.size() == 2);
    CHECK(pieces[0].level == 2);
    CHECK(pieces[1].level == 1);
    FiniteLinkingForm sum = pieces[1].form.direct_sum(pieces[0].form);
    CHECK(brute_force_isomorphic(sum, h));
    CHECK(brute_force_isomorphic(h, sum));
    // The split is not the naive diagonal part.
    FiniteLinkingForm naive = form(3, {1, 2}, {{q(2, 3), 0}, {0, q(1, 9)}});
    CHECK_FALSE(brute_force_isomorphic(naive, h));

    // Random forms: pieces are homogeneous and sum back to the input.
    std::mt19937_64 rng(4);
    for (auto lv : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 2}, {1, 3}, {2, 2}}) {
        FormSpace s(3, lv, 1);
        std::uniform_int_distribution<uint64_t> d(0, s.size() - 1);
        int done = 0;
        while (done < 5) {
            FiniteLinkingForm x = s.form(d(rng));
            if (!x.is_nonsingular()) continue;
            ++done;
            auto ps = homogeneous_split(x);
            FiniteLinkingForm acc;
            acc.p = 3;
            for (auto it = ps.rbegin(); it != ps.rend(); ++it) {
                for (int l : it->form.orders) CHECK(l == it->level);
                CHECK(it->form.is_nonsingular());
                acc = acc.direct_sum(it->form);
            }
            CHECK(brute_force_isomorphic(acc, x));
        }
    }
    // Skew form at an odd prime splits into planes.
    FiniteLinkingForm sk = form(3, {1, 1}, {{0, q(1, 3)}, {q(-1, 3), 0}}, -1);
    pieces = homogeneous_split(sk);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].form.rank() == 2);
}

TEST_CASE("auxiliary modules and forms")
{
    FiniteLinkingForm f = form(2, {1, 2, 5}, {{q(1, 2), 0, 0}, {0, q(1, 4), 0}, {0, 0, q(1, 32)}});
    CHECK(auxiliary_modules(f) == std::map<int, int>{{1, 1}, {2, 1}, {5, 1}});
    CHECK(multiplicities_by_kernels(2, {1, 2, 5}) == auxiliary_modules(f));
    FiniteLinkingForm h = form(3, {1, 1, 3}, {{q(1, 3), 0, 0}, {0, q(1, 3), 0}, {0, 0, q(1, 27)}});
    CHECK(auxiliary_modules(h) == std::map<int, int>{{1, 2}, {3, 1}});
    CHECK(multiplicities_by_kernels(3, {1, 1, 3}) == auxiliary_modules(h));
    CHECK(multiplicities_by_kernels(5, {2, 2}) == std::map<int, int>{{2, 2}});

    auto a = auxiliary_form(form(3, {2}, {{q(1, 9)}}), 2);
    CHECK(a.gram == std::vector<std::vector<long>>{{1}});
    CHECK(a.symmetry == 1);
    CHECK(auxiliary_form(form(3, {1}, {{q(1, 3)}}), 2).gram.empty());
    auto b = auxiliary_form(form(3, {1, 2}, {{q(1, 3), q(1, 3)}, {q(1, 3), q(1, 9)}}), 1);
    CHECK(b.gram.size() == 1);
    CHECK(b.gram[0][0] == 1);
    CHECK_THROWS_AS(auxiliary_form(form(2, {1}, {{q(1, 2)}}), 1), EvenPrimeUnsupported);
}

TEST_CASE("witt classes over F_p")
{
    WittClassFp a = witt_class_fp({{1}}, 1, 5);
    CHECK(a.rank_mod_2 == 1);
    CHECK(a.disc == 1);
    CHECK(a.name() == "A_5");
    WittClassFp b = witt_class_fp({{2}}, 1, 5);
    CHECK(b.disc == -1);
    CHECK(b.name() == "B_5");
    WittClassFp m = witt_class_fp({{1, 0}, {0, 2}}, 1, 3);
    CHECK(m.is_zero());
    // x^2 - y^2 over F_3 has the isotropic line (1, 1): agrees with enumeration.
    CHECK((witt_class_fp({{1}}, 1, 3) + witt_class_fp({{2}}, 1, 3)).is_zero());
    // Group structure: Z/4 at p = 3 mod 4, Klein four at p = 1 mod 4.
    WittClassFp a3 = witt_class_fp({{1}}, 1, 3);
    CHECK((a3 + a3).name() == "2A_3");
    CHECK((a3 + a3 + a3 + a3).is_zero());
    CHECK((a + a).is_zero());
    CHECK((a + b).name() == "A_5+B_5");
    CHECK(witt_class_fp({{0, 1}, {2, 0}}, 2, 3).is_zero());
    CHECK_THROWS_AS(witt_class_fp({{0}}, 1, 3), SingularForm);
    CHECK_THROWS_AS(witt_class_fp({{1}}, 1, 2), EvenPrimeUnsupported);
}

TEST_CASE("multisignature and classification")
{
    FiniteLinkingForm plus = form(3, {1}, {{q(1, 3)}});
    FiniteLinkingForm minus = form(3, {1}, {{q(-1, 3)}});
    auto ms = dw_multisignature(plus.direct_sum(minus));
    REQUIRE(ms.size() == 1);
    CHECK(ms.at({3, 1}).is_zero());
    FiniteLinkingForm nine = form(3, {2}, {{q(1, 9)}});
    ms = dw_multisignature(nine);
    REQUIRE(ms.size() == 1);
    CHECK(ms.count({3, 2}) == 1);
    CHECK(dw_multisignature(MixedLinkingForm{}).empty());

    CHECK(forgetful_witt(dw_multisignature(nine)).at(3).is_zero());
    CHECK(forgetful_witt(dw_multisignature(plus)).at(3) == witt_class_fp({{1}}, 1, 3));

    CHECK(classify(nine, Question::Metabolic));
    CHECK_FALSE(classify(nine, Question::Hyperbolic));
    auto orc = brute_force_lagrangians(nine, OracleMode::Any);
    CHECK(orc.found);
    REQUIRE(orc.witnesses.size() == 1);
    CHECK(orc.witnesses[0] == MatZ{{BigInt(3)}});
    CHECK_FALSE(brute_force_lagrangians(nine, OracleMode::ComplementaryPair).found);
    CHECK(classify(plus.direct_sum(minus), Question::Hyperbolic));
    CHECK(brute_force_lagrangians(plus.direct_sum(minus), OracleMode::ComplementaryPair).found);
    CHECK_FALSE(classify(plus, Question::Metabolic));
    CHECK_FALSE(brute_force_lagrangians(plus, OracleMode::Any).found);

    MixedLinkingForm two;
    two.orders = {BigInt(2)};
    two.gram = MatQ{{q(1, 2)}};
    CHECK_THROWS_AS(dw_multisignature(two), EvenPrimeUnsupported);

    // Isomorphism invariance and additivity on random forms.
    std::mt19937_64 rng(8);
    for (auto lv : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2}, {2, 2}, {1, 3}}) {
        for (long p : {3L, 5L}) {
            FormSpace s(p, lv, 1);
            std::uniform_int_distribution<uint64_t> d(0, s.size() - 1);
            for (int k = 0; k < 6; ++k) {
                FiniteLinkingForm x = s.form(d(rng)), y = s.form(d(rng));
                if (!x.is_nonsingular() || !y.is_nonsingular()) continue;
                CHECK(dw_multisignature(random_automorph(x, rng)) == dw_multisignature(x));
                CHECK(dw_multisignature(x.direct_sum(y)) ==
                      multisignature_sum(dw_multisignature(x), dw_multisignature(y)));
                CHECK(classify(x.direct_sum(x.negated()), Question::Hyperbolic));
            }
        }
    }
}

TEST_CASE("nonsingularity agrees with enumeration")
{
    std::mt19937_64 rng(12);
    for (long p : {2L, 3L, 5L}) {
        for (auto lv : std::vector<std::vector<int>>{{1, 2}, {1, 1, 2}, {2, 3}, {1, 1}}) {
            if (p == 5 && lv.size() == 3) continue;
            int n = static_cast<int>(lv.size());
            for (int k = 0; k < 20; ++k) {
                FiniteLinkingForm f;
                f.p = p;
                f.orders = lv;
                f.gram = MatQ(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) {
                        long m = ipw(p, std::min(lv[i], lv[j]));
                        std::uniform_int_distribution<long> d(0, m - 1);
                        f.gram(i, j) = f.gram(j, i) = BigRat(d(rng), m);
                    }
                f.gram = f.gram.map([](const BigRat& x) { BigRat y = x; y.canonicalize(); return y; });
                CHECK(f.is_nonsingular() == nonsingular_by_enumeration(f));
            }
        }
    }
}

TEST_CASE("brute force oracle")
{
    FiniteLinkingForm z4 = form(2, {2}, {{q(1, 4)}});
    auto r = brute_force_lagrangians(z4, OracleMode::Any);
    REQUIRE(r.found);
    CHECK(r.witnesses[0] == MatZ{{BigInt(2)}});
    CHECK_FALSE(brute_force_lagrangians(z4, OracleMode::Split).found);
    CHECK(r.exhausted);

    r = brute_force_lagrangians(form(3, {1}, {{q(1, 3)}}), OracleMode::Any);
    CHECK_FALSE(r.found);
    CHECK(r.exhausted);
    CHECK(r.lagrangian_count == 0);

    FiniteLinkingForm hyp = form(3, {2, 2}, {{0, q(1, 9)}, {q(1, 9), 0}});
    r = brute_force_lagrangians(hyp, OracleMode::ComplementaryPair);
    REQUIRE(r.found);
    REQUIRE(r.witnesses.size() == 2);
    CHECK(is_lagrangian(hyp, r.witnesses[0]));
    CHECK(is_lagrangian(hyp, r.witnesses[1]));
    // <e1> and <e2> are among the lagrangians found.
    auto lags = enumerate_lagrangians(hyp, false);
    bool e1 = false, e2 = false;
    for (auto& l : lags) {
        if (l.size() != 9) continue;
        std::vector<int> a, b;
        for (int k = 0; k < 9; ++k) {
            a.push_back(k);
            b.push_back(9 * k);
        }
        e1 |= l == a;
        e2 |= l == b;
    }
    CHECK(e1);
    CHECK(e2);
    CHECK(brute_force_lagrangians(hyp, OracleMode::Split).found);

    FiniteLinkingForm big = form(3, {5, 5}, {{q(1, 243), 0}, {0, q(1, 243)}});
    CHECK_THROWS_AS(brute_force_lagrangians(big, OracleMode::Any), SearchSpaceTooLarge);
    CHECK_NOTHROW(brute_force_lagrangians(big, OracleMode::Any, 100000));

    // Serial reference and parallel kernel agree.
    std::mt19937_64 rng(2);
    for (auto lv : std::vector<std::vector<int>>{{1, 1, 1, 1}, {2, 2}, {1, 1, 2}}) {
        FormSpace s(3, lv, 1);
        std::uniform_int_distribution<uint64_t> d(0, s.size() - 1);
        for (int k = 0; k < 4; ++k) {
            FiniteLinkingForm x = s.form(d(rng));
            CHECK(enumerate_lagrangians(x, true) == enumerate_lagrangians(x, false));
            auto a = brute_force_lagrangians(x, OracleMode::ComplementaryPair);
            auto b = brute_force_lagrangians_serial(x, OracleMode::ComplementaryPair);
            CHECK(a.found == b.found);
            CHECK(a.witnesses == b.witnesses);
        }
    }
}

TEST_CASE("boundary forms")
{
    auto b = boundary_of_form(MatZ{{BigInt(4)}}, 1);
    CHECK(b.form.orders == std::vector<BigInt>{4});
    CHECK(b.form.gram(0, 0) == q(1, 4));
    CHECK(boundary_of_form(MatZ{{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(-1)}}, 1).form.orders.empty());

    auto c = boundary_of_form(MatZ{{BigInt(2), BigInt(1)}, {BigInt(1), BigInt(2)}}, 1);
    REQUIRE(c.form.orders == std::vector<BigInt>{3});
    auto parts = primary_decompose(c.form);
    CHECK(brute_force_isomorphic(parts.at(3), form(3, {1}, {{q(2, 3)}})));
    CHECK_FALSE(brute_force_isomorphic(parts.at(3), form(3, {1}, {{q(1, 3)}})));
    CHECK_THROWS_AS(boundary_of_form(MatZ{{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(1)}}, 1),
                    SingularOverFractionField);

    MatZ h = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}};
    CHECK(verify_boundary_complementary(h, MatZ{{BigInt(1)}, {BigInt(0)}}, MatZ{{BigInt(0)}, {BigInt(1)}}));
    CHECK_THROWS_AS(verify_boundary_complementary(MatZ{{BigInt(4)}}, MatZ{{BigInt(1)}}, MatZ{{BigInt(1)}}),
                    NotAnSLagrangian);
    MatZ hh = h.block_sum(h);
    MatZ lp(4, 2), lm(4, 2);
    lp(0, 0) = 2;
    lp(2, 1) = 1;
    lm(1, 0) = 1;
    lm(3, 1) = 1;
    CHECK_FALSE(verify_boundary_complementary(hh, lp, lm));
    lp(0, 0) = 1;
    CHECK(verify_boundary_complementary(hh, lp, lm));

    // alpha = F^T alpha' F with alpha' unimodular: images of F^T K'* give a lagrangian.
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-3, 3);
    int checked = 0;
    for (int it = 0; it < 60 && checked < 20; ++it) {
        size_t n = 2 + it % 2;
        MatZ ap = MatZ::identity(n);
        ap(n - 1, n - 1) = -1;
        for (int k = 0; k < 4; ++k) {
            MatZ e = MatZ::identity(n);
            e(k % n, (k + 1) % n) = d(rng);
            ap = e.transpose() * ap * e;
        }
        MatZ F(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) F(i, j) = d(rng);
        MatZ alpha = F.transpose() * ap * F;
        if (determinant(to_q(alpha)) == 0) continue;
        auto bd = boundary_of_form(alpha, 1);
        if (bd.form.orders.empty()) continue;
        auto parts2 = primary_decompose(bd.form);
        MatZ gens = bd.to_coker * F.transpose();
        // Restrict to each primary part and check the lagrangian there.
        for (auto& [p, part] : parts2) {
            std::vector<size_t> idx;
            std::vector<BigInt> mult;
            for (size_t i = 0; i < bd.form.orders.size(); ++i) {
                int v = valuation(bd.form.orders[i], p);
                if (v == 0) continue;
                idx.push_back(i);
                mult.push_back(bd.form.orders[i] / ipow(BigInt(p), static_cast<unsigned>(v)));
            }
            // Project onto the p-part: multiply by the cofactor of p in the exponent.
            BigInt e = 1;
            for (auto& o : bd.form.orders) e = lcm(e, o);
            BigInt pp = ipow(BigInt(p), static_cast<unsigned>(valuation(e, p)));
            BigInt cof = e / pp;
            MatZ pg(idx.size(), gens.cols());
            for (size_t a = 0; a < idx.size(); ++a) {
                BigInt inv = inv_mod(BigInt(mult[a] % pp), pp);
                for (size_t c = 0; c < gens.cols(); ++c)
                    pg(a, c) = mod_pos(gens(idx[a], c) * cof * inv_mod(BigInt(cof % pp), pp) * inv, pp);
            }
            CHECK(is_lagrangian(part, pg));
        }
        ++checked;
    }
    CHECK(checked >= 10);
}
