#include "wittkit/laurent_linking.hpp"

#include "wittkit/factor.hpp"
#include "wittkit/snf.hpp"

#include <algorithm>

namespace wittkit {

namespace {

// u * x mod Q[z,z^-1], reducing u modulo the denominator first.
RatFunc times_reduced(const LaurentPoly& u, const RatFunc& x)
{
    if (x.is_zero() || u.is_zero()) return RatFunc();
    RatFunc f = x.frac_part();
    if (f.is_zero()) return f;
    Poly um = laurent_mod(u, f.den());
    Poly n = laurent_mod(LaurentPoly::from_poly(um) * f.num(), f.den());
    return RatFunc(LaurentPoly::from_poly(n), LaurentPoly::from_poly(f.den()));
}

MatRatFunc conj_rf(const MatRatFunc& m) { return conj_entries(m); }

bool all_laurent(const MatRatFunc& m)
{
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_laurent()) return false;
    return true;
}

// Rank over K = Q[z]/(p).
size_t rank_mod(const ResidueField& K, MatPoly m)
{
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, r);
        Poly inv = K.inv(m(r, c));
        for (size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            Poly f = K.mul(m(i, c), inv);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) = K.reduce(m(i, j) - K.mul(f, m(r, j)));
        }
        ++r;
    }
    return r;
}

struct LevelGens {
    std::vector<size_t> idx;
    std::vector<RatFunc> cof;  // d_i / p^l
};

LevelGens level_generators(const LaurentLinkingForm& f, const Poly& p, int level)
{
    LevelGens g;
    const auto& d = f.module.divisors;
    Poly pl = pow(p, static_cast<unsigned>(level));
    for (size_t i = 0; i < d.size(); ++i)
        if (poly_valuation(d[i], p) == level) {
            g.idx.push_back(i);
            g.cof.push_back(RatFunc::from_poly(d[i] / pl));
        }
    return g;
}

// p^l lambda(x_i, y_j) mod p, x_i of level l at p and y_j of level l at pc.
// For self-conjugate p, pc = p.
MatPoly raw_auxiliary(const LaurentLinkingForm& f, const ResidueField& K, const Poly& p, const Poly& pc,
                      int level)
{
    LevelGens rows = level_generators(f, p, level);
    LevelGens cols = pc == p ? rows : level_generators(f, pc, level);
    RatFunc plr = RatFunc::from_poly(pow(p, static_cast<unsigned>(level)));
    MatPoly g(rows.idx.size(), cols.idx.size());
    for (size_t a = 0; a < rows.idx.size(); ++a)
        for (size_t b = 0; b < cols.idx.size(); ++b) {
            RatFunc v = plr * rows.cof[a] * cols.cof[b].bar() * f.pairing(rows.idx[a], cols.idx[b]);
            Poly den = K.reduce(v.den());
            if (den.is_zero()) throw InternalError("pairing not p-integral at its level");
            g(a, b) = K.mul(K.reduce(v.num()), K.inv(den));
        }
    return g;
}

Poly conjugate_factor(const Poly& p) { return LaurentPoly::from_poly(p).bar().lowered().monic(); }

}  // namespace

int LaurentModule::dimension() const
{
    int n = 0;
    for (const auto& d : divisors) n += d.degree();
    return n;
}

std::vector<Poly> LaurentModule::prime_factors() const
{
    std::vector<Poly> out;
    if (divisors.empty()) return out;
    for (auto& [p, e] : factor_rational_poly(LaurentPoly::from_poly(divisors.back())).factors) {
        (void)e;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int poly_valuation(Poly d, const Poly& p)
{
    if (p.degree() < 1) throw InternalError("valuation at a constant");
    int v = 0;
    for (;;) {
        Poly q, r;
        Poly::divmod(d, p, q, r);
        if (!r.is_zero()) return v;
        d = q;
        ++v;
    }
}

LaurentModule decompose_module(const MatLaurent& presentation, TorsionMode mode)
{
    if (!presentation.is_square()) throw ParseError("presentation must be square");
    LaurentModule m;
    m.presentation = presentation;
    m.mode = mode;
    MatPoly a = clear_negative_powers(presentation);
    Poly det = determinant_poly(a);
    if (det.is_zero()) throw NotTorsion("presentation has zero determinant");
    if (mode == TorsionMode::P && det.eval(BigRat(1)) == 0)
        throw NotPTorsion("determinant vanishes at z = 1");
    auto s = smith_normal_form(a, &det);
    m.U = s.U;
    m.Uinv = s.Uinv;
    for (size_t k = 0; k < s.divisors.size(); ++k) {
        Poly d = s.divisors[k];
        int low = d.low_degree();
        if (low > 0) d = d / Poly::monomial(BigRat(1), low);
        if (d.degree() < 1) continue;
        m.kept.push_back(k);
        m.divisors.push_back(d.monic());
    }
    return m;
}

std::map<int, int> level_multiplicities(const LaurentModule& m, const Poly& p)
{
    std::map<int, int> r;
    for (const auto& d : m.divisors) {
        int v = poly_valuation(d, p);
        if (v > 0) ++r[v];
    }
    return r;
}

LaurentLinkingForm make_laurent_form(const MatLaurent& presentation, const MatRatFunc& pairing,
                                     int epsilon, TorsionMode mode, bool require_nonsingular)
{
    if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    size_t n = presentation.rows();
    if (pairing.rows() != n || pairing.cols() != n) throw ParseError("pairing shape mismatch");
    LaurentLinkingForm f;
    f.epsilon = epsilon;
    f.module = decompose_module(presentation, mode);
    f.input_pairing = pairing;

    // Reduction mod Q[z,z^-1] commutes with multiplying by Laurent entries.
    MatRatFunc red = pairing.map([](const RatFunc& x) { return x.frac_part(); });
    MatRatFunc A = to_ratfunc(presentation);
    if (!all_laurent(A.transpose() * red) || !all_laurent(red * conj_rf(A)))
        throw ParseError("pairing is not well defined on the module");
    MatRatFunc sym = red.transpose() - conj_rf(red).scaled(RatFunc(BigRat(epsilon)));
    if (!all_laurent(sym)) throw ParseError("pairing is not epsilon-hermitian");
    MatPoly ui = f.module.Uinv.columns(f.module.kept);
    size_t r = ui.cols();
    MatRatFunc left(r, n);
    for (size_t a = 0; a < r; ++a)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                left(a, j) += times_reduced(LaurentPoly::from_poly(ui(k, a)), red(k, j));
    f.pairing = MatRatFunc(r, r);
    for (size_t a = 0; a < r; ++a)
        for (size_t b = 0; b < r; ++b)
            for (size_t k = 0; k < n; ++k)
                f.pairing(a, b) += times_reduced(LaurentPoly::from_poly(ui(k, b)).bar(), left(a, k));

    if (require_nonsingular && !f.is_nonsingular()) throw SingularForm("adjoint is not injective");
    return f;
}

LaurentLinkingForm LaurentLinkingForm::direct_sum(const LaurentLinkingForm& o) const
{
    if (epsilon != o.epsilon) throw MixedSymmetry("direct sum of forms with different symmetry");
    TorsionMode mode = module.mode == TorsionMode::P && o.module.mode == TorsionMode::P ? TorsionMode::P
                                                                                      : TorsionMode::Q;
    return make_laurent_form(module.presentation.block_sum(o.module.presentation),
                             input_pairing.block_sum(o.input_pairing), epsilon, mode, false);
}

LaurentLinkingForm LaurentLinkingForm::negated() const
{
    LaurentLinkingForm g = *this;
    g.input_pairing = -input_pairing;
    g.pairing = pairing.map([](const RatFunc& x) { return (-x).frac_part(); });
    return g;
}

bool LaurentLinkingForm::is_nonsingular() const
{
    for (const auto& p : module.prime_factors()) {
        ResidueField K(p);
        Poly pc = conjugate_factor(p);
        for (auto [l, mult] : level_multiplicities(module, p)) {
            auto raw = raw_auxiliary(*this, K, p, pc, l);
            if (raw.rows() != raw.cols() || rank_mod(K, raw) != static_cast<size_t>(mult)) return false;
        }
    }
    return true;
}

AuxiliaryHermitian auxiliary_hermitian(const LaurentLinkingForm& f, const Poly& p, int level)
{
    if (level < 1) throw ParseError("level must be positive");
    Poly pm = p.monic();
    auto u = is_self_conjugate(LaurentPoly::from_poly(pm));
    if (!u) throw NotSelfConjugate(pm.to_string() + " pairs with its conjugate");
    ResidueField K(pm);
    AuxiliaryHermitian a;
    a.factor = pm;
    a.level = level;
    a.raw = raw_auxiliary(f, K, pm, pm, level);

    // raw^T = eps * (p / pbar)^l * conj(raw), and p / pbar = u.
    LaurentPoly s = LaurentPoly(BigRat(f.epsilon));
    for (int k = 0; k < level; ++k) s = s * u->value();
    a.symmetry = K.reduce(s);

    int n = pm.degree();
    if (n == 1) {
        // Real residue field: symmetric or skew, nothing to normalize.
        if (a.symmetry == Poly::one()) a.normalizer = Poly::one();
    } else {
        // c = z^{-nl/2} g'(z + 1/z)^l, times (z - 1/z) in the skew case.
        Poly dg = trace_polynomial(pm).derivative();
        LaurentPoly t = LaurentPoly::z(1) + LaurentPoly::z(-1);
        LaurentPoly dgt;
        for (int k = dg.degree(); k >= 0; --k) dgt = dgt * t + LaurentPoly(dg.coeff(k));
        LaurentPoly c = LaurentPoly::z(-(n * level) / 2);
        for (int k = 0; k < level; ++k) c = c * dgt;
        if (f.epsilon == -1) c = c * (LaurentPoly::z(1) - LaurentPoly::z(-1));
        a.normalizer = K.reduce(c);
    }
    if (a.hermitian()) {
        a.gram = a.raw.map([&](const Poly& x) { return K.mul(a.normalizer, x); });
        for (size_t i = 0; i < a.gram.rows(); ++i)
            for (size_t j = 0; j < a.gram.cols(); ++j)
                if (a.gram(j, i) != K.conj(a.gram(i, j)))
                    throw InternalError("normalized auxiliary form is not hermitian");
    }
    return a;
}

bool same_root(const CertifiedRoot& a, const CertifiedRoot& b)
{
    return a.factor == b.factor && !(a.t_hi < b.t_lo || b.t_hi < a.t_lo);
}

DWMultiSignatureLaurent dw_multisignature_laurent(const LaurentLinkingForm& f, const BigRat& precision)
{
    DWMultiSignatureLaurent ms;
    for (const auto& p : f.module.prime_factors()) {
        if (!is_self_conjugate(LaurentPoly::from_poly(p))) {
            Poly pc = conjugate_factor(p);
            ms.conjugate_pairs.push_back(p < pc ? std::make_pair(p, pc) : std::make_pair(pc, p));
            continue;
        }
        auto roots = unit_circle_roots(p, precision);
        auto levels = level_multiplicities(f.module, p);
        if (roots.empty()) {
            ms.off_circle.push_back(p);
            continue;
        }
        for (auto [l, mult] : levels) {
            auto a = auxiliary_hermitian(f, p, l);
            if (!a.hermitian()) {
                ms.rank_only.push_back({p, l, mult});
                continue;
            }
            for (const auto& r : roots)
                ms.entries.push_back({p, r, l, kSignatureOrientation * hermitian_signature_at_root(a.gram, r)});
        }
    }
    std::stable_sort(ms.entries.begin(), ms.entries.end(), [](const SignatureEntry& a, const SignatureEntry& b) {
        if (a.factor != b.factor) return a.factor < b.factor;
        if (!same_root(a.root, b.root)) return a.root.t_lo > b.root.t_lo;
        return a.level < b.level;
    });
    std::sort(ms.conjugate_pairs.begin(), ms.conjugate_pairs.end());
    ms.conjugate_pairs.erase(std::unique(ms.conjugate_pairs.begin(), ms.conjugate_pairs.end()),
                             ms.conjugate_pairs.end());
    return ms;
}

bool is_hyperbolic_over_R(const DWMultiSignatureLaurent& ms)
{
    for (const auto& e : ms.entries)
        if (e.signature != 0) return false;
    return true;
}

bool is_hyperbolic_over_R(const LaurentLinkingForm& f)
{
    return is_hyperbolic_over_R(dw_multisignature_laurent(f));
}

std::vector<ForgetfulEntry> witt_forgetful_laurent(const DWMultiSignatureLaurent& ms)
{
    std::vector<ForgetfulEntry> out;
    for (const auto& e : ms.entries) {
        ForgetfulEntry* slot = nullptr;
        for (auto& o : out)
            if (same_root(o.root, e.root)) slot = &o;
        if (!slot) {
            out.push_back({e.factor, e.root, 0});
            slot = &out.back();
        }
        if (e.level % 2 == 1) slot->value += e.signature;
    }
    return out;
}

}  // namespace wittkit
