#include "wittkit/selftest.hpp"

#include "wittkit/oracle.hpp"
#include "wittkit/series.hpp"

#include <functional>

namespace wittkit {

namespace {

MatQ trefoil_psi()
{
    MatQ m(2, 2);
    m(0, 0) = -1;
    m(0, 1) = 1;
    m(1, 1) = -1;
    return m;
}

RatFunc inv_linear(const BigRat& a)  // 1 / (a - z)
{
    return RatFunc(LaurentPoly(BigRat(1)), LaurentPoly(a) - LaurentPoly::z(1));
}

FiniteLinkingForm z4_form()
{
    FiniteLinkingForm f;
    f.p = 2;
    f.orders = {2};
    f.gram = MatQ(1, 1);
    f.gram(0, 0) = BigRat(1, 4);
    return f;
}

using Check = std::function<bool(std::string&)>;

}  // namespace

std::vector<AnchorResult> run_selftest(const SelftestOptions& opts)
{
    const BigRat prec = opts.precision;
    std::vector<std::pair<std::string, Check>> anchors;

    anchors.emplace_back("series 1/(a-z) ascending window [0,2]", [](std::string& d) {
        for (BigRat a : {BigRat(2), BigRat(-3), BigRat(1, 2)}) {
            auto s = series_expand(inv_linear(a), NovikovSide::Plus, 0, 2);
            if (s[0] != 1 / a || s[1] != 1 / (a * a) || s[2] != 1 / (a * a * a)) {
                d = "a = " + to_string(a);
                return false;
            }
        }
        return true;
    });
    anchors.emplace_back("series 1/(a-z) descending window [-3,-1]", [](std::string& d) {
        for (BigRat a : {BigRat(2), BigRat(-3), BigRat(1, 2)}) {
            auto s = series_expand(inv_linear(a), NovikovSide::Minus, -3, -1);
            if (s[-3] != -a * a || s[-2] != -a || s[-1] != -1) {
                d = "a = " + to_string(a);
                return false;
            }
        }
        return true;
    });
    anchors.emplace_back("trace of [(a-z)^-1] is 1/a", [](std::string& d) {
        for (BigRat a : {BigRat(1), BigRat(2), BigRat(-3), BigRat(1, 2)})
            if (trace_chi(inv_linear(a)) != 1 / a) {
                d = "a = " + to_string(a);
                return false;
            }
        return true;
    });
    anchors.emplace_back("auxiliary modules of Z/2 + Z/4 + Z/32", [](std::string& d) {
        FiniteLinkingForm f;
        f.p = 2;
        f.orders = {1, 2, 5};
        f.gram = MatQ(3, 3);
        f.gram(0, 0) = BigRat(1, 2);
        f.gram(1, 1) = BigRat(1, 4);
        f.gram(2, 2) = BigRat(1, 32);
        auto m = auxiliary_modules(f);
        d = "levels:";
        for (auto [l, r] : m) d += " " + std::to_string(l) + ":" + std::to_string(r);
        return m == std::map<int, int>{{1, 1}, {2, 1}, {5, 1}};
    });
    anchors.emplace_back("<1> over F_5 has rank 1 and square discriminant", [](std::string& d) {
        auto inv = iso_invariants_fp({{1}}, 1, 5);
        auto c = witt_class_fp({{1}}, 1, 5);
        d = c.name();
        return inv.first == 1 && inv.second == 1 && c.rank_mod_2 == 1 && c.disc == 1;
    });
    anchors.emplace_back("(Z/4, xy/4): lagrangian <2>, no split lagrangian", [](std::string& d) {
        auto any = brute_force_lagrangians(z4_form(), OracleMode::Any);
        auto split = brute_force_lagrangians(z4_form(), OracleMode::Split);
        bool w = any.found && any.witnesses.size() == 1 && any.witnesses[0].rows() == 1 &&
                 any.witnesses[0].cols() == 1 && any.witnesses[0](0, 0) == 2;
        d = "lagrangians " + std::to_string(any.lagrangian_count) + ", split " + (split.found ? "yes" : "no");
        return w && !split.found && split.exhausted;
    });
    anchors.emplace_back("boundary of (4) is (Z/4, xy/4)", [](std::string& d) {
        MatZ a(1, 1);
        a(0, 0) = 4;
        auto b = boundary_of_form(a, 1).form;
        d = b.orders.empty() ? "trivial" : "order " + to_string(b.orders[0]);
        return b.orders.size() == 1 && b.orders[0] == 4 && b.gram(0, 0) == BigRat(1, 4);
    });
    anchors.emplace_back("real factor with pairing 1/g(z+1/z) is <1> on the residue field", [](std::string& d) {
        Poly p(std::vector<BigRat>{1, -1, 1});
        MatLaurent pres = {{LaurentPoly::from_poly(p)}};
        MatRatFunc lam = {{RatFunc(LaurentPoly::z(1), LaurentPoly::from_poly(p))}};
        auto f = make_laurent_form(pres, lam, 1, TorsionMode::P);
        auto aux = auxiliary_hermitian(f, p, 1);
        d = "gram " + (aux.rank() ? aux.gram(0, 0).to_string() : std::string("empty"));
        return aux.rank() == 1 && aux.hermitian() && (aux.gram(0, 0) % p) == Poly::one();
    });
    anchors.emplace_back("e(1-e) nilpotent gives the zero module", [](std::string& d) {
        MatQ psi(2, 2);
        psi(0, 1) = 1;
        auto f = make_seifert_form(psi, -1, true);
        auto cov = covering_seifert(f);
        d = "module size " + std::to_string(cov.module.size());
        return is_nilpotent(f.e() * (MatQ::identity(2) - f.e())) && cov.module.size() == 0;
    });
    anchors.emplace_back("(1 1) and ((1-e) -e) are complementary split lagrangians of psi + -psi",
                         [](std::string& d) {
        auto f = make_seifert_form(trefoil_psi(), -1, true);
        auto sum = f.block_sum(f.negated());
        auto [l1, l2] = hyperbolic_witness_sum(f);
        auto s1 = verify_seifert_lagrangian(sum, l1), s2 = verify_seifert_lagrangian(sum, l2);
        d = std::string(to_string(s1)) + ", " + to_string(s2);
        return s1 == LagrangianStatus::SplitLagrangian && s2 == LagrangianStatus::SplitLagrangian &&
               complementary(sum, l1, l2);
    });
    anchors.emplace_back("covering of psi + -psi carries both lagrangians", [](std::string& d) {
        auto f = make_seifert_form(trefoil_psi(), -1, true);
        auto cov = covering_seifert(f.block_sum(f.negated()));
        auto [l1, l2] = hyperbolic_witness_sum(f);
        bool a = covering_lagrangian(cov, l1), b = covering_lagrangian(cov, l2);
        d = std::string(a ? "yes" : "no") + ", " + (b ? "yes" : "no");
        return a && b;
    });
    anchors.emplace_back("trefoil # inverse: no obstructions, verified witnesses", [prec](std::string& d) {
        auto t = make_knot_input("trefoil", trefoil_psi(), -1, 1);
        auto r = analyze(connected_sum(t, concordance_inverse(t)), prec);
        d = std::string("slice ") + (r.slice_obstructed ? "yes" : "no") + ", doubly " +
            (r.doubly_slice_obstructed ? "yes" : "no");
        return !r.slice_obstructed && !r.doubly_slice_obstructed && r.witnesses && r.witnesses->verified();
    });
    anchors.emplace_back("(Z/4, xy/4) is metabolic and not split metabolic", [](std::string& d) {
        auto c = brute_force_lagrangians(z4_form(), OracleMode::ComplementaryPair);
        auto any = brute_force_lagrangians(z4_form(), OracleMode::Any);
        d = std::string("metabolic ") + (any.found ? "yes" : "no") + ", hyperbolic " + (c.found ? "yes" : "no");
        return any.found && !c.found;
    });
    int cal = opts.calibration;
    anchors.emplace_back("LT jump equals twice the odd-level sum on the trefoil", [cal, prec](std::string& d) {
        auto t = make_knot_input("trefoil", trefoil_psi(), -1, 1);
        auto jumps = levine_tristram_jumps(t, prec);
        auto fs = witt_forgetful_laurent(dw_multisignature_laurent(blanchfield_form(t), prec));
        if (jumps.size() != 1 || fs.size() != 1) {
            d = "unexpected root count";
            return false;
        }
        d = "jump " + std::to_string(jumps[0].jump()) + ", sum " + std::to_string(fs[0].value) +
            ", calibration " + std::to_string(cal);
        return jumps[0].jump() == 2 * cal * fs[0].value;
    });

    std::vector<AnchorResult> out;
    for (auto& [name, check] : anchors) {
        AnchorResult r;
        r.name = name;
        try {
            r.pass = check(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace wittkit
