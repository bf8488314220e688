#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wittkit/knot.hpp"
#include "wittkit/random_forms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>

using namespace wittkit;
using cd = std::complex<double>;

namespace {

MatQ Q(std::initializer_list<std::initializer_list<long>> rows)
{
    MatQ m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    size_t i = 0;
    for (auto& r : rows) {
        size_t j = 0;
        for (long x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

Poly P(std::initializer_list<long> c)  // low degree first
{
    std::vector<BigRat> v;
    for (long x : c) v.emplace_back(x);
    return Poly(v);
}

KnotInput trefoil() { return make_knot_input("trefoil", Q({{-1, 1}, {0, -1}}), -1, 1); }
KnotInput figure_eight() { return make_knot_input("figure-eight", Q({{1, 1}, {0, -1}}), -1, 1); }
KnotInput unknot() { return make_knot_input("unknot", MatQ(0, 0), -1); }

// Alexander polynomial by interpolating det(t psi + eps psi^T) at integers.
LaurentPoly alexander_oracle(const MatQ& psi, int eps)
{
    size_t n = psi.rows();
    std::vector<BigRat> xs, ys;
    for (size_t t = 0; t <= n; ++t) {
        xs.emplace_back(long(t));
        ys.push_back(determinant(psi.scaled(BigRat(long(t))) + psi.transpose().scaled(BigRat(eps))));
    }
    Poly r;
    for (size_t i = 0; i <= n; ++i) {
        Poly li = Poly::one();
        for (size_t j = 0; j <= n; ++j)
            if (j != i) li = li * (Poly::z() - Poly(xs[j])).scaled(1 / (xs[i] - xs[j]));
        r += li.scaled(ys[i]);
    }
    return alexander_normalize(LaurentPoly::from_poly(r));
}

// Floating-point signature of (1 - w) psi + (1 - conj w) psi^T (eps = -1)
// or i((1 - w) psi - (1 - conj w) psi^T) (eps = +1). Returns false when the
// matrix is numerically too close to singular.
bool lt_eigen(const MatQ& psi, int eps, double turn, int& sig)
{
    size_t n = psi.rows();
    cd w = std::polar(1.0, 2 * M_PI * turn);
    Eigen::MatrixXcd H(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            double a = psi(i, j).get_d(), b = psi(j, i).get_d();
            if (eps == -1) H(i, j) = (1.0 - w) * a + (1.0 - std::conj(w)) * b;
            else H(i, j) = cd(0, 1) * ((1.0 - w) * a - (1.0 - std::conj(w)) * b);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    sig = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double l = es.eigenvalues()[i];
        if (std::abs(l) < 1e-7) return false;
        sig += l > 0 ? 1 : -1;
    }
    return true;
}

// Even unimodular +1-symmetric Seifert matrices: S = G^T (H + H) G with G
// unimodular, psi = upper(S) with half diagonal plus an antisymmetric part.
MatQ random_plus_knot_matrix(std::mt19937_64& rng, size_t genus, long bound)
{
    size_t n = 2 * genus;
    MatQ h(n, n);
    for (size_t k = 0; k < genus; ++k) h(2 * k, 2 * k + 1) = h(2 * k + 1, 2 * k) = 1;
    MatQ g = MatQ::identity(n);
    std::uniform_int_distribution<size_t> pick(0, n - 1);
    for (int step = 0; step < 6; ++step) {
        size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        BigRat c = random_rational(rng, 2);
        for (size_t r = 0; r < n; ++r) g(r, i) += c * g(r, j);
    }
    MatQ s = g.transpose() * h * g;
    MatQ psi(n, n);
    for (size_t i = 0; i < n; ++i) {
        psi(i, i) = s(i, i) / 2;
        for (size_t j = i + 1; j < n; ++j) {
            BigRat k = random_rational(rng, bound);
            psi(i, j) = s(i, j) + k;
            psi(j, i) = -k;
        }
    }
    return psi;
}

MatQ e8_seifert()
{
    // E8 Gram matrix (Bourbaki labelling), psi upper triangular with 1 on
    // the diagonal so that psi + psi^T = E8.
    MatQ e = MatQ::identity(8).scaled(BigRat(2));
    int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (auto& ed : edges) e(ed[0], ed[1]) = e(ed[1], ed[0]) = -1;
    MatQ psi(8, 8);
    for (size_t i = 0; i < 8; ++i) {
        psi(i, i) = 1;
        for (size_t j = i + 1; j < 8; ++j) psi(i, j) = e(i, j);
    }
    return psi;
}

int forgetful_at(const std::vector<ForgetfulEntry>& fs, const CertifiedRoot& r)
{
    int v = 0;
    for (const auto& f : fs)
        if (f.factor == r.factor && same_root(f.root, r)) v += f.value;
    return v;
}

void check_lt_cross_oracle(const KnotInput& k)
{
    auto ms = dw_multisignature_laurent(blanchfield_form(k));
    auto fs = witt_forgetful_laurent(ms);
    auto jumps = levine_tristram_jumps(k);
    for (const auto& j : jumps) CHECK(j.jump() == 2 * kSignatureOrientation * forgetful_at(fs, j.root));
    // Every odd-level value sits at some jump.
    for (const auto& f : fs) {
        if (f.value == 0) continue;
        bool found = false;
        for (const auto& j : jumps) found = found || (f.factor == j.root.factor && same_root(f.root, j.root));
        CHECK(found);
    }
}

}  // namespace

TEST_CASE("knot input validation")
{
    CHECK_THROWS_AS(make_knot_input("s", Q({{1, 0}, {0, 1}}), -1), NotAKnotForm);
    CHECK_THROWS_AS(make_knot_input("s", Q({{1, 2}}), -1), ParseError);
    CHECK_THROWS_AS(make_knot_input("s", Q({{-1, 1}, {0, -1}}), 1), NotAKnotForm);
    CHECK_THROWS_AS(make_knot_input("s", Q({{-1, 1}, {0, -1}}), -1, 3), ParseError);
    CHECK_THROWS_AS(make_knot_input("s", Q({{-1, 1}, {0, -1}}), -1, 2), ParseError);
    CHECK_THROWS_AS(make_knot_input("s", Q({{-1, 1}, {0, -1}}), 0), ParseError);
    MatQ half = Q({{-1, 1}, {0, -1}});
    half(0, 0) = BigRat(1, 2);
    CHECK_THROWS_AS(make_knot_input("s", half, -1), ParseError);
    CHECK_NOTHROW(make_knot_input("s", Q({{-1, 1}, {0, -1}}), -1, 5));
    CHECK_NOTHROW(make_knot_input("e8", e8_seifert(), 1, 3));
}

TEST_CASE("alexander polynomial")
{
    CHECK(alexander_polynomial(trefoil()) == LaurentPoly::from_poly(P({1, -1, 1})));
    CHECK(alexander_polynomial(figure_eight()) == LaurentPoly::from_poly(P({1, -3, 1})));
    CHECK(alexander_polynomial(unknot()) == LaurentPoly(BigRat(1)));
    CHECK(alexander_polynomial(connected_sum(trefoil(), trefoil())) ==
          LaurentPoly::from_poly(P({1, -1, 1}) * P({1, -1, 1})));

    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        size_t g = 1 + it % 3;
        bool plus = it % 4 == 3;
        MatQ psi = plus ? random_plus_knot_matrix(rng, g, 2) : random_knot_matrix(rng, g, 2);
        auto k = make_knot_input("r", psi, plus ? 1 : -1);
        auto a = alexander_polynomial(k);
        CHECK(a == alexander_oracle(psi, k.epsilon));
        BigRat one = a.eval(BigRat(1));
        CHECK((one == 1 || one == -1));
        CHECK(is_self_conjugate(a).has_value());
    }
}

TEST_CASE("blanchfield form")
{
    auto b = blanchfield_form(trefoil());
    CHECK(b.epsilon == 1);
    CHECK(b.module.mode == TorsionMode::P);
    REQUIRE(b.module.size() == 1);
    CHECK(b.module.divisors[0] == P({1, -1, 1}));
    CHECK(b.is_nonsingular());

    auto u = blanchfield_form(unknot());
    CHECK(u.module.size() == 0);

    auto granny = blanchfield_form(connected_sum(trefoil(), trefoil()));
    CHECK(granny.module.size() == 2);
    auto ms1 = dw_multisignature_laurent(b);
    auto ms2 = dw_multisignature_laurent(granny);
    REQUIRE(ms1.entries.size() == 1);
    REQUIRE(ms2.entries.size() == 1);
    CHECK(ms2.entries[0].signature == 2 * ms1.entries[0].signature);
    CHECK(ms2.entries[0].level == 1);

    auto e8 = blanchfield_form(make_knot_input("e8", e8_seifert(), 1));
    CHECK(e8.epsilon == -1);
}

TEST_CASE("levine-tristram signature")
{
    auto t = trefoil();
    CHECK(levine_tristram_signature(t, BigRat(2, 5)) == -2);
    CHECK(levine_tristram_signature(t, BigRat(1, 10)) == 0);
    CHECK(levine_tristram_signature(t, BigRat(1, 2)) == -2);
    CHECK(levine_tristram_signature(t, BigRat(3, 5)) == -2);
    CHECK_THROWS_AS(levine_tristram_signature(t, BigRat(1, 6)), SingularAtRoot);
    CHECK_THROWS_AS(levine_tristram_signature(t, BigRat(5, 6)), SingularAtRoot);
    CHECK_THROWS_AS(levine_tristram_signature(t, BigRat(0)), SingularAtRoot);
    CHECK_THROWS_AS(levine_tristram_signature(t, BigRat(1)), SingularAtRoot);
    CHECK(levine_tristram_signature(unknot(), BigRat(1, 3)) == 0);
    // Close to the root pi/3 on both sides.
    CHECK(levine_tristram_signature(t, BigRat(1, 6) - BigRat(1, 1000000)) == 0);
    CHECK(levine_tristram_signature(t, BigRat(1, 6) + BigRat(1, 1000000)) == -2);
    // Figure-eight: no unit-circle roots, signature 0 everywhere.
    for (int j = 1; j < 10; ++j) CHECK(levine_tristram_signature(figure_eight(), BigRat(j, 10)) == 0);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int compared = 0;
    for (int it = 0; it < 60; ++it) {
        size_t g = 1 + it % 2;
        bool plus = it % 3 == 2;
        MatQ psi = plus ? random_plus_knot_matrix(rng, g, 3) : random_knot_matrix(rng, g, 3);
        auto k = make_knot_input("r", psi, plus ? 1 : -1);
        long num = 1 + static_cast<long>(U(rng) * 998);
        BigRat x(num, 1000);
        int sig = 0;
        if (!lt_eigen(psi, k.epsilon, x.get_d(), sig)) continue;
        int exact = levine_tristram_signature(k, x);
        CHECK(exact == sig);
        CHECK(levine_tristram_signature(k, 1 - x) == exact);
        ++compared;
    }
    CHECK(compared > 50);
}

TEST_CASE("lt jumps against multisignature")
{
    auto t = trefoil();
    auto jumps = levine_tristram_jumps(t);
    REQUIRE(jumps.size() == 1);
    CHECK(jumps[0].before == 0);
    CHECK(jumps[0].after == -2);
    CHECK(jumps[0].root.factor == P({1, -1, 1}));

    check_lt_cross_oracle(t);
    check_lt_cross_oracle(figure_eight());
    check_lt_cross_oracle(connected_sum(t, t));
    CHECK(levine_tristram_jumps(figure_eight()).empty());

    std::mt19937_64 rng(23);
    for (int it = 0; it < 30; ++it) {
        size_t g = 1 + it % 2;
        check_lt_cross_oracle(make_knot_input("r", random_knot_matrix(rng, g, 3), -1));
    }
    size_t plus_jumps = 0;
    for (int it = 0; it < 60; ++it) {
        size_t g = 1 + it % 2;
        auto k = make_knot_input("r", random_plus_knot_matrix(rng, g, 3), 1);
        plus_jumps += levine_tristram_jumps(k).size();
        check_lt_cross_oracle(k);
    }
    CHECK(plus_jumps >= 5);
}

TEST_CASE("slice and doubly-slice obstructions")
{
    auto t = trefoil();
    CHECK(slice_obstruction(t));
    CHECK(doubly_slice_obstruction(t));
    CHECK_FALSE(slice_obstruction(unknot()));
    CHECK_FALSE(doubly_slice_obstruction(unknot()));
    CHECK_FALSE(slice_obstruction(figure_eight()));
    CHECK_FALSE(doubly_slice_obstruction(figure_eight()));
    auto tm = connected_sum(t, concordance_inverse(t));
    CHECK_FALSE(slice_obstruction(tm));
    CHECK_FALSE(doubly_slice_obstruction(tm));

    // Level 2 only: pairing 1 / (p pbar) on Q[z,z^-1]/(p^2).
    Poly p = P({1, -1, 1});
    LaurentPoly pp = LaurentPoly::from_poly(p) * LaurentPoly::from_poly(p).bar();
    MatLaurent pres = {{LaurentPoly::from_poly(p * p)}};
    MatRatFunc lam = {{RatFunc(LaurentPoly(BigRat(1)), pp)}};
    auto f = make_laurent_form(pres, lam, 1, TorsionMode::P);
    auto ms = dw_multisignature_laurent(f);
    REQUIRE(ms.entries.size() == 1);
    CHECK(ms.entries[0].level == 2);
    CHECK_FALSE(slice_obstructed(ms));
    CHECK(doubly_slice_obstructed(ms));

    // Hierarchy on random knots.
    std::mt19937_64 rng(3);
    for (int it = 0; it < 20; ++it) {
        auto k = make_knot_input("r", random_knot_matrix(rng, 1 + it % 2, 3), -1);
        auto m = dw_multisignature_laurent(blanchfield_form(k));
        if (slice_obstructed(m)) CHECK(doubly_slice_obstructed(m));
    }
}

TEST_CASE("rochlin invariant")
{
    auto e8 = make_knot_input("e8", e8_seifert(), 1);
    // Oracle: eigenvalues of E8.
    {
        MatQ s = e8.psi + e8.psi.transpose();
        Eigen::MatrixXd m(8, 8);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(i, j) = s(i, j).get_d();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
        CHECK(es.eigenvalues().minCoeff() > 0);
    }
    CHECK(rochlin_invariant(e8) == 1);
    CHECK(rochlin_invariant(connected_sum(e8, e8)) == 0);
    CHECK(rochlin_invariant(concordance_inverse(e8)) == 1);
    auto hyp = make_knot_input("h", Q({{0, 1}, {0, 0}}), 1);
    CHECK(rochlin_invariant(hyp) == 0);
    CHECK_THROWS_AS(rochlin_invariant(trefoil()), NotSymmetricCase);
    KnotInput bad;
    bad.psi = Q({{1}});
    bad.epsilon = 1;
    CHECK_THROWS_AS(rochlin_invariant(bad), SignatureNotDivisibleBy8);
    auto r = analyze(e8);
    REQUIRE(r.rochlin.has_value());
    CHECK(*r.rochlin == 1);
}

TEST_CASE("connected sum")
{
    auto t = trefoil();
    auto tu = connected_sum(t, unknot());
    CHECK(tu.psi == t.psi);
    CHECK(alexander_polynomial(tu) == alexander_polynomial(t));
    CHECK_THROWS_AS(connected_sum(t, make_knot_input("e8", e8_seifert(), 1)), MixedSymmetry);

    std::mt19937_64 rng(17);
    for (int it = 0; it < 8; ++it) {
        auto a = make_knot_input("a", random_knot_matrix(rng, 1, 3), -1);
        auto b = make_knot_input("b", random_knot_matrix(rng, 1, 3), -1);
        auto ab = connected_sum(a, b);
        auto ra = analyze(a), rb = analyze(b), rab = analyze(ab);
        CHECK(rab.alexander == alexander_normalize(ra.alexander * rb.alexander));
        // Signatures add per (factor, root, level).
        std::vector<SignatureEntry> all = ra.multisignature.entries;
        all.insert(all.end(), rb.multisignature.entries.begin(), rb.multisignature.entries.end());
        for (const auto& e : rab.multisignature.entries) {
            int sum = 0;
            for (const auto& x : all)
                if (x.factor == e.factor && x.level == e.level && same_root(x.root, e.root)) sum += x.signature;
            CHECK(e.signature == sum);
        }
        CHECK(rab.slice_obstructed == (ra.slice_obstructed || rb.slice_obstructed ||
                                       rab.slice_obstructed));
    }
}

TEST_CASE("analyze")
{
    auto rt = analyze(trefoil());
    CHECK(rt.alexander == LaurentPoly::from_poly(P({1, -1, 1})));
    REQUIRE(rt.multisignature.entries.size() == 1);
    const auto& e = rt.multisignature.entries[0];
    CHECK(e.factor == P({1, -1, 1}));
    CHECK(e.level == 1);
    CHECK(std::abs(e.root.approx() - M_PI / 3) < 1e-12);
    CHECK(std::abs(e.signature) == 1);
    CHECK(rt.slice_obstructed);
    CHECK(rt.doubly_slice_obstructed);
    CHECK_FALSE(rt.witnesses.has_value());
    CHECK_FALSE(rt.notes.empty());

    auto rf = analyze(figure_eight());
    CHECK(rf.alexander == LaurentPoly::from_poly(P({1, -3, 1})));
    CHECK(rf.multisignature.entries.empty());
    CHECK_FALSE(rf.slice_obstructed);
    CHECK_FALSE(rf.doubly_slice_obstructed);
    bool caveat = false;
    for (const auto& n : rf.notes) caveat = caveat || n.find("no R-level obstruction") != std::string::npos;
    CHECK(caveat);

    auto tm = connected_sum(trefoil(), concordance_inverse(trefoil()));
    auto rm = analyze(tm);
    CHECK_FALSE(rm.slice_obstructed);
    CHECK_FALSE(rm.doubly_slice_obstructed);
    REQUIRE(rm.witnesses.has_value());
    CHECK(rm.witnesses->verified());
    CHECK(covering_lagrangian(blanchfield_form(tm), rm.witnesses->first));
    CHECK(covering_lagrangian(blanchfield_form(tm), rm.witnesses->second));

    auto ru = analyze(unknot());
    CHECK(ru.alexander == LaurentPoly(BigRat(1)));
    CHECK_FALSE(ru.slice_obstructed);

    // Random K # -K.
    std::mt19937_64 rng(41);
    for (int it = 0; it < 10; ++it) {
        auto k = make_knot_input("r", random_knot_matrix(rng, 1 + it % 2, 3), -1);
        auto r = analyze(connected_sum(k, concordance_inverse(k)));
        CHECK_FALSE(r.doubly_slice_obstructed);
        REQUIRE(r.witnesses.has_value());
        CHECK(r.witnesses->verified());
    }
}
