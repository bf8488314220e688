#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wittkit/random_forms.hpp"

#include <Eigen/Dense>

#include <complex>

using namespace wittkit;
using cd = std::complex<double>;

namespace {

RatFunc inv_linear(const BigRat& a)  // 1 / (a - z)
{
    return RatFunc(LaurentPoly(BigRat(1)), LaurentPoly(a) - LaurentPoly::z(1));
}

MatQ Q(std::initializer_list<std::initializer_list<long>> rows)
{
    MatQ m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (auto& r : rows) {
        size_t j = 0;
        for (long x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

cd eval_c(const LaurentPoly& p, cd z)
{
    cd r = 0;
    for (auto& [d, c] : p.terms()) r += c.get_d() * std::pow(z, d);
    return r;
}

// chi(f) = -sum over roots a of den of Res_a f(z)/z (simple roots).
double chi_by_residues(const RatFunc& f)
{
    const Poly& d = f.den();
    int n = d.degree();
    if (n <= 0) return 0;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -BigRat(d.coeff(i) / d.lead()).get_d();
    Eigen::VectorXcd roots = comp.eigenvalues();
    LaurentPoly dd = LaurentPoly::from_poly(d.derivative());
    cd s = 0;
    for (int i = 0; i < n; ++i) s += eval_c(f.num(), roots(i)) / (roots(i) * eval_c(dd, roots(i)));
    return -s.real();
}

}  // namespace

TEST_CASE("trace function")
{
    for (BigRat a : {BigRat(1), BigRat(2), BigRat(-3), BigRat(1, 2)}) CHECK(trace_chi(inv_linear(a)) == 1 / a);
    CHECK(trace_chi(RatFunc()) == 0);
    CHECK(trace_chi(RatFunc(LaurentPoly::z(3) - LaurentPoly::z(-2))) == 0);
    for (BigRat a : {BigRat(2), BigRat(-5, 3)}) {
        RatFunc f(LaurentPoly::z(1), LaurentPoly::z(1) - LaurentPoly(a));
        CHECK(trace_chi(f) == -1);
    }

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<long> c(-4, 4);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        LaurentPoly num, den;
        for (int k = -2; k <= 2; ++k) num += LaurentPoly::monomial(BigRat(c(rng)), k);
        for (int k = 0; k <= 3; ++k) den += LaurentPoly::monomial(BigRat(c(rng)), k);
        if (den.coeff(0) == 0 || den.coeff(3) == 0 || num.is_zero()) continue;
        Poly dp = den.to_poly();
        if (gcd(dp, dp.derivative()).degree() > 0) continue;
        RatFunc f(num, den);
        BigRat x = trace_chi(f);
        CHECK(std::abs(x.get_d() - chi_by_residues(f)) < 1e-8 * (1 + std::abs(x.get_d())));
        // Well defined on classes, Q-linear, and chi(bar f) = -chi(f).
        RatFunc g = f + RatFunc(LaurentPoly::monomial(BigRat(c(rng)), static_cast<int>(c(rng))));
        CHECK(trace_chi(g) == x);
        CHECK(trace_chi(f * RatFunc(BigRat(3, 7))) == x * BigRat(3, 7));
        CHECK(trace_chi(f.bar()) == -x);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("seifert coverings")
{
    auto tre = make_seifert_form(Q({{-1, 1}, {0, -1}}), -1, true);
    CHECK(tre.e() == Q({{0, 1}, {-1, 1}}));
    CHECK(tre.symmetrized() * tre.e() == tre.psi);
    auto c = covering_seifert(tre);
    CHECK(c.epsilon == 1);
    REQUIRE(c.module.divisors.size() == 1);
    CHECK(c.module.divisors[0] == Poly({BigRat(1), BigRat(-1), BigRat(1)}));
    CHECK(c.is_nonsingular());
    // Symmetry oracle on the constructed pairing.
    CHECK(c.pairing(0, 0).equal_mod_laurent(c.pairing(0, 0).bar()));

    CHECK_THROWS_AS(make_seifert_form(Q({{1, 1}, {1, 1}}), -1, false), SingularSeifertForm);
    CHECK_THROWS_AS(make_seifert_form(Q({{1, 0}, {0, 1}}), 1, true), SingularSeifertForm);

    // Kernel of the covering: zero module iff e(1 - e) nilpotent.
    std::mt19937_64 rng(7);
    int zero = 0, nonzero = 0;
    for (int it = 0; it < 60; ++it) {
        size_t g = 1 + it % 2;
        MatQ psi(2 * g, 2 * g);
        for (size_t i = 0; i < 2 * g; ++i)
            for (size_t j = 0; j < 2 * g; ++j) psi(i, j) = random_rational(rng, 2);
        if (it % 3 == 0)
            for (size_t i = g; i < 2 * g; ++i)
                for (size_t j = 0; j < g; ++j) psi(i, j) = 0;
        int eps = it % 2 ? 1 : -1;
        SeifertForm f{psi, eps, false};
        if (determinant(f.symmetrized()) == 0) continue;
        auto cov = covering_seifert(f);
        CHECK(cov.epsilon == -eps);
        MatQ e = f.e();
        bool nil = is_nilpotent(e * (MatQ::identity(e.rows()) - e));
        CHECK((cov.module.dimension() == 0) == nil);
        (nil ? zero : nonzero)++;
    }
    CHECK(zero > 5);
    CHECK(nonzero > 5);

    // Functoriality on sums.
    auto f1 = random_seifert(rng, 2, -1, 3, 1), f2 = random_seifert(rng, 2, -1, 3, 2);
    auto s = covering_seifert(f1.block_sum(f2));
    auto d = covering_seifert(f1).direct_sum(covering_seifert(f2));
    CHECK(s.input_pairing == d.input_pairing);
    CHECK(s.module.presentation == d.module.presentation);
}

TEST_CASE("autometric coverings and monodromy")
{
    auto f = make_autometric_form(Q({{1}}), Q({{-1}}), 1);
    auto c = covering_autometric(f);
    REQUIRE(c.module.divisors.size() == 1);
    CHECK(c.module.divisors[0] == Poly({BigRat(1), BigRat(1)}));
    RatFunc expected(LaurentPoly::z(-1).scaled(BigRat(-1)), LaurentPoly::z(1) + LaurentPoly(BigRat(1)));
    CHECK(c.pairing(0, 0).equal_mod_laurent(expected));
    CHECK(c.epsilon == -1);
    auto m = monodromy(c);
    CHECK(m.theta == f.theta);
    CHECK(m.h == f.h);
    CHECK(verify_roundtrip(f));

    auto id = make_autometric_form(Q({{1}}), Q({{1}}), 1);
    auto ci = covering_autometric(id);
    CHECK(ci.module.divisors[0] == Poly({BigRat(-1), BigRat(1)}));
    CHECK_THROWS_AS(decompose_module(ci.module.presentation, TorsionMode::P), NotPTorsion);

    CHECK_THROWS_AS(make_autometric_form(Q({{0, 1}, {1, 0}}), Q({{2, 0}, {0, 1}}), 1), SingularAutometricForm);
    CHECK_THROWS_AS(make_autometric_form(Q({{1, 1}, {0, 1}}), Q({{1, 0}, {0, 1}}), 1), SingularAutometricForm);

    // (z - 2)(z - 1/2) with its standard pairing: char poly of h.
    LaurentPoly t = LaurentPoly::z(1) + LaurentPoly::z(-1) - LaurentPoly(BigRat(5, 2));
    MatLaurent a = {{t}};
    auto g = make_laurent_form(a, MatRatFunc{{RatFunc(LaurentPoly(BigRat(1)), t)}}, 1, TorsionMode::Q);
    auto mg = monodromy(g);
    MatPoly zh(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) zh(i, j) = Poly(-mg.h(i, j)) + (i == j ? Poly::z() : Poly());
    CHECK(determinant_poly(zh) == Poly({BigRat(1), BigRat(-5, 2), BigRat(1)}));
    CHECK(mg.epsilon == -1);

    // Sums go to block sums.
    std::mt19937_64 rng(9);
    auto x = random_autometric(rng, 2, 1, 3), y = random_autometric(rng, 2, -1, 3);
    auto xx = random_autometric(rng, 1, 1, 3);
    auto cs = covering_autometric(x.block_sum(xx));
    auto cd2 = covering_autometric(x).direct_sum(covering_autometric(xx));
    CHECK(cs.input_pairing == cd2.input_pairing);
    CHECK(verify_roundtrip(x.block_sum(xx)));
    CHECK(verify_roundtrip(y));

    // Negative control: a corrupted pairing fails.
    auto cx = covering_autometric(x);
    auto bad = make_laurent_form(cx.module.presentation, cx.input_pairing.scaled(RatFunc(BigRat(2))), cx.epsilon,
                                 TorsionMode::Q);
    CHECK_FALSE(verify_roundtrip(x, bad));
}

TEST_CASE("round trip on random autometric forms")
{
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        int eps = it % 2 ? 1 : -1;
        size_t rank = eps == 1 ? 1 + it % 4 : 2 * (1 + it % 2);
        auto f = random_autometric(rng, rank, eps, 5);
        CHECK(verify_roundtrip(f));
    }
}

TEST_CASE("seifert lagrangians")
{
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        int eps = it % 2 ? 1 : -1;
        bool integral = it % 4 < 2;
        size_t rank = eps == 1 ? 1 + it % 4 : 2 + 2 * (it % 2);
        SeifertForm f;
        if (integral && eps == -1 && rank % 2 == 0) f = make_seifert_form(random_knot_matrix(rng, rank / 2, 3), -1, true);
        else f = random_seifert(rng, rank, eps, 4, integral ? 1 : 3);
        if (integral && abs(determinant(f.symmetrized())) != 1) f.integral = false;
        auto sum = f.block_sum(f.negated());
        auto [L1, L2] = hyperbolic_witness_sum(f);
        CHECK(verify_seifert_lagrangian(sum, L1) == LagrangianStatus::SplitLagrangian);
        CHECK(verify_seifert_lagrangian(sum, L2) == LagrangianStatus::SplitLagrangian);
        CHECK(complementary(sum, L1, L2));
        // Transport to the covering, where both are lagrangians and complementary.
        auto cov = covering_seifert(sum);
        CHECK(covering_lagrangian(cov, L1));
        CHECK(covering_lagrangian(cov, L2));
        CHECK(submodule_dimension(cov.module, L1.hstack(L2).map([](const BigRat& x) { return LaurentPoly(x); })) ==
              cov.module.dimension());
        CHECK(is_hyperbolic_over_R(cov));
        if (sum.integral) {
            MatQ L3 = L1.scaled(BigRat(2));
            CHECK(verify_seifert_lagrangian(sum, L3) == LagrangianStatus::Lagrangian);
        }
    }
    SeifertForm empty = make_seifert_form(MatQ(), -1, true);
    auto [E1, E2] = hyperbolic_witness_sum(empty);
    CHECK(E1.cols() == 0);
    CHECK(complementary(empty.block_sum(empty.negated()), E1, E2));

    auto diag = make_seifert_form(Q({{1, 0}, {0, 1}}), 1, false);
    CHECK(verify_seifert_lagrangian(diag, Q({{1}, {0}})) == LagrangianStatus::NotLagrangian);
    auto tre = make_seifert_form(Q({{-1, 1}, {0, -1}}), -1, true);
    CHECK_THROWS_AS(verify_seifert_lagrangian(tre, Q({{1}, {0}})), NotEInvariant);
}

TEST_CASE("near projections")
{
    auto z = near_projection_decompose(MatQ(2, 2));
    CHECK(z.plus.cols() == 0);
    CHECK(z.minus.cols() == 2);
    auto i = near_projection_decompose(MatQ::identity(3));
    CHECK(i.plus.cols() == 3);
    CHECK(i.minus.cols() == 0);
    MatQ e = Q({{1, 1}, {0, 0}});
    auto s = near_projection_decompose(e);
    REQUIRE(s.plus.cols() == 1);
    REQUIRE(s.minus.cols() == 1);
    CHECK(rank(s.plus.hstack(e.column(0))) == 1);
    CHECK((e * s.minus).is_zero_matrix());
    CHECK_THROWS_AS(near_projection_decompose(Q({{2, 0}, {0, 0}})), NotNearProjection);

    // Random near projections: P diag(1 + N1, N2) P^-1.
    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        size_t a = 1 + it % 2, b = 1 + (it / 2) % 2, n = a + b;
        MatQ D(n, n);
        for (size_t k = 0; k < a; ++k) D(k, k) = 1;
        for (size_t k = 0; k + 1 < a; ++k) D(k, k + 1) = random_rational(rng, 3);
        for (size_t k = a; k + 1 < n; ++k) D(k, k + 1) = random_rational(rng, 3);
        MatQ P(n, n);
        do {
            for (size_t r = 0; r < n; ++r)
                for (size_t c = 0; c < n; ++c) P(r, c) = random_rational(rng, 3);
        } while (determinant(P) == 0);
        MatQ en = P * D * inverse(P);
        auto sp = near_projection_decompose(en);
        REQUIRE(sp.plus.cols() == a);
        REQUIRE(sp.minus.cols() == b);
        CHECK(determinant(sp.plus.hstack(sp.minus)) != 0);
        MatQ X;
        CHECK(solve(sp.plus, en * sp.plus, X));
        CHECK(is_nilpotent(MatQ::identity(a) - X));
        CHECK(solve(sp.minus, en * sp.minus, X));
        CHECK(is_nilpotent(X));
    }
}
