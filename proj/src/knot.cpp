#include "wittkit/knot.hpp"

#include <algorithm>

namespace wittkit {

namespace {

// +1-symmetric forms use i((1 - w) psi - (1 - conj w) psi^T); the overall
// sign is pinned against the multisignature in the test suite.
constexpr int kPlusSymmetricLtSign = -1;

BigRat t_of(const BigRat& s) { return BigRat(2 * (1 - s * s)) / (1 + s * s); }

// Rational s >= 0 with 2(1 - s^2)/(1 + s^2) strictly inside (a, b).
BigRat point_in(const BigRat& a, const BigRat& b)
{
    BigRat lo = 0, hi = 1;
    while (t_of(hi) >= b) hi *= 2;
    for (;;) {
        BigRat mid = (lo + hi) / 2;
        BigRat t = t_of(mid);
        if (t >= b) lo = mid;
        else if (t <= a) hi = mid;
        else return mid;
    }
}

Poly alexander_poly_part(const KnotInput& k) { return alexander_polynomial(k).lowered(); }

// Unit-circle roots of all self-conjugate factors, sorted by theta, with
// pairwise disjoint t-intervals.
std::vector<CertifiedRoot> circle_roots(const Poly& delta, const BigRat& precision)
{
    std::vector<CertifiedRoot> roots;
    if (delta.degree() < 1) return roots;
    for (const auto& [p, mult] : factor_rational_poly(LaurentPoly::from_poly(delta)).factors) {
        (void)mult;
        if (!is_self_conjugate(LaurentPoly::from_poly(p))) continue;
        for (auto& r : unit_circle_roots(p, precision)) roots.push_back(r);
    }
    auto mid = [](const CertifiedRoot& r) -> BigRat { return (r.t_lo + r.t_hi) / 2; };
    for (;;) {
        std::sort(roots.begin(), roots.end(),
                  [&](const CertifiedRoot& x, const CertifiedRoot& y) { return mid(x) > mid(y); });
        bool clean = true;
        for (size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i + 1].t_hi < roots[i].t_lo) continue;
            roots[i] = roots[i].bisected();
            roots[i + 1] = roots[i + 1].bisected();
            clean = false;
        }
        if (clean) return roots;
    }
}

// Sample parameters s for the arcs between consecutive roots: arc k lies
// between roots k-1 and k (arc 0 starts at theta = 0). Empty arcs get no
// sample.
std::vector<std::optional<BigRat>> arc_samples(const std::vector<CertifiedRoot>& roots)
{
    std::vector<std::optional<BigRat>> out;
    BigRat upper = 2;
    for (size_t k = 0; k <= roots.size(); ++k) {
        BigRat lower = k < roots.size() ? roots[k].t_hi : BigRat(-2);
        if (lower < upper) out.push_back(point_in(lower, upper));
        else out.push_back(std::nullopt);
        if (k < roots.size()) upper = roots[k].t_lo;
    }
    return out;
}

int euler_phi(long n)
{
    long r = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return static_cast<int>(r);
}

}  // namespace

KnotInput make_knot_input(const std::string& name, const MatQ& psi, int epsilon,
                          std::optional<int> dimension_hint)
{
    if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    if (!psi.is_square()) throw ParseError("Seifert matrix must be square");
    if (!is_integral(psi)) throw ParseError("knot Seifert matrix must be integral");
    if (dimension_hint) {
        int n = *dimension_hint;
        if (n < 1 || n % 2 == 0) throw ParseError("dimension_hint must be odd and positive");
        int kk = (n - 1) / 2;
        int expect = (kk % 2 == 0) ? -1 : 1;  // (-1)^(k+1)
        if (expect != epsilon) throw ParseError("epsilon does not match dimension_hint");
    }
    MatQ s = psi + psi.transpose().scaled(BigRat(epsilon));
    if (psi.rows() > 0) {
        BigRat d = determinant(s);
        if (d != 1 && d != -1) throw NotAKnotForm("psi + eps psi^T has determinant " + to_string(d));
    }
    KnotInput k;
    k.name = name;
    k.psi = psi;
    k.epsilon = epsilon;
    k.dimension_hint = dimension_hint;
    return k;
}

SeifertForm seifert_form(const KnotInput& k) { return make_seifert_form(k.psi, k.epsilon, true); }

LaurentPoly alexander_polynomial(const KnotInput& k)
{
    size_t n = k.rank();
    if (n == 0) return LaurentPoly(BigRat(1));
    MatQ e = seifert_form(k).e();
    MatPoly P(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            P(i, j) = Poly(BigRat((i == j ? 1 : 0) - e(i, j))) + Poly::monomial(e(i, j), 1);
    return alexander_normalize(LaurentPoly::from_poly(determinant_poly(P)));
}

LaurentLinkingForm blanchfield_form(const KnotInput& k) { return covering_seifert(seifert_form(k)); }

int levine_tristram_at_point(const MatQ& psi, int epsilon, const BigRat& s)
{
    size_t n = psi.rows();
    if (n == 0) return 0;
    MatQ A, B;
    if (epsilon == -1) {
        A = (psi + psi.transpose()).scaled(s);
        B = psi.transpose() - psi;
    } else {
        A = (psi + psi.transpose()).scaled(BigRat(kPlusSymmetricLtSign));
        B = (psi - psi.transpose()).scaled(s * kPlusSymmetricLtSign);
    }
    MatQ M(2 * n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            M(i, j) = A(i, j);
            M(n + i, n + j) = A(i, j);
            M(i, n + j) = -B(i, j);
            M(n + i, j) = B(i, j);
        }
    try {
        return signature_rational(M) / 2;
    } catch (const SingularForm&) {
        throw SingularAtRoot("hermitian matrix singular at the sample point");
    }
}

int levine_tristram_signature(const KnotInput& k, const BigRat& turn, const BigRat& precision)
{
    BigRat x = mod_one(turn);
    if (x > BigRat(1, 2)) x = 1 - x;
    if (sgn(x) == 0) throw SingularAtRoot("omega = 1");
    if (k.rank() == 0) return 0;
    Poly delta = alexander_poly_part(k);
    x.canonicalize();
    BigInt q = x.get_den();
    if (q.fits_slong_p() && euler_phi(q.get_si()) <= delta.degree() &&
        cyclotomic(static_cast<int>(q.get_si())).divides(delta))
        throw SingularAtRoot("omega is a root of the Alexander polynomial");

    auto roots = circle_roots(delta, precision);
    long bits = 64;
    for (;;) {
        BigRat pi_lo, pi_hi;
        acos_enclosure(BigRat(-1), BigRat(-1), bits, pi_lo, pi_hi);
        BigRat th_lo = 2 * x * pi_lo, th_hi = 2 * x * pi_hi;
        bool clear = true;
        size_t arc = 0;
        for (auto& r : roots) {
            if (r.theta_hi < th_lo) { ++arc; continue; }
            if (r.theta_lo > th_hi) continue;
            clear = false;
            r = r.bisected();
        }
        if (clear) {
            auto samples = arc_samples(roots);
            if (!samples[arc]) throw InternalError("empty arc around omega");
            return levine_tristram_at_point(k.psi, k.epsilon, *samples[arc]);
        }
        bits *= 2;
        if (bits > (1L << 20)) throw SingularAtRoot("cannot separate omega from the Alexander roots");
    }
}

std::vector<SignatureJump> levine_tristram_jumps(const KnotInput& k, const BigRat& precision)
{
    std::vector<SignatureJump> out;
    if (k.rank() == 0) return out;
    auto roots = circle_roots(alexander_poly_part(k), precision);
    auto samples = arc_samples(roots);
    std::vector<std::optional<int>> sig(samples.size());
    for (size_t a = 0; a < samples.size(); ++a)
        if (samples[a]) sig[a] = levine_tristram_at_point(k.psi, k.epsilon, *samples[a]);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (!sig[i] || !sig[i + 1]) continue;  // theta = 0 or pi
        SignatureJump j;
        j.root = roots[i].refined(precision);
        j.before = *sig[i];
        j.after = *sig[i + 1];
        out.push_back(j);
    }
    return out;
}

bool slice_obstructed(const DWMultiSignatureLaurent& ms)
{
    for (const auto& f : witt_forgetful_laurent(ms))
        if (f.value != 0) return true;
    return false;
}

bool doubly_slice_obstructed(const DWMultiSignatureLaurent& ms)
{
    for (const auto& e : ms.entries)
        if (e.signature != 0) return true;
    return false;
}

bool slice_obstruction(const KnotInput& k, const BigRat& precision)
{
    return slice_obstructed(dw_multisignature_laurent(blanchfield_form(k), precision));
}

bool doubly_slice_obstruction(const KnotInput& k, const BigRat& precision)
{
    return doubly_slice_obstructed(dw_multisignature_laurent(blanchfield_form(k), precision));
}

int rochlin_invariant(const KnotInput& k)
{
    if (k.epsilon != 1) throw NotSymmetricCase("Rochlin invariant needs eps = +1");
    if (k.rank() == 0) return 0;
    int sig = signature_rational(k.psi + k.psi.transpose());
    if (sig % 8 != 0) throw SignatureNotDivisibleBy8("signature " + std::to_string(sig));
    return ((sig / 8) % 2 + 2) % 2;
}

KnotInput connected_sum(const KnotInput& a, const KnotInput& b)
{
    if (a.epsilon != b.epsilon) throw MixedSymmetry("summands have different epsilon");
    KnotInput k;
    k.name = a.name + "#" + b.name;
    k.psi = a.psi.block_sum(b.psi);
    k.epsilon = a.epsilon;
    if (a.dimension_hint == b.dimension_hint) k.dimension_hint = a.dimension_hint;
    return k;
}

KnotInput concordance_inverse(const KnotInput& k)
{
    KnotInput r = k;
    r.name = "-" + k.name;
    r.psi = -k.psi;
    return r;
}

bool HyperbolicWitnesses::verified() const
{
    return first_status == LagrangianStatus::SplitLagrangian &&
           second_status == LagrangianStatus::SplitLagrangian && complementary;
}

std::optional<HyperbolicWitnesses> mirror_witnesses(const KnotInput& k)
{
    size_t n = k.rank();
    if (n == 0 || n % 2 != 0) return std::nullopt;
    size_t m = n / 2;
    MatQ A(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (!is_zero(k.psi(i, m + j)) || !is_zero(k.psi(m + i, j))) return std::nullopt;
            if (k.psi(m + i, m + j) != -k.psi(i, j)) return std::nullopt;
            A(i, j) = k.psi(i, j);
        }
    SeifertForm whole = seifert_form(k);
    auto [L1, L2] = hyperbolic_witness_sum(make_seifert_form(A, k.epsilon, true));
    HyperbolicWitnesses w;
    w.split_index = m;
    w.first = L1;
    w.second = L2;
    w.first_status = verify_seifert_lagrangian(whole, L1);
    w.second_status = verify_seifert_lagrangian(whole, L2);
    w.complementary = complementary(whole, L1, L2);
    return w;
}

ObstructionReport analyze(const KnotInput& k, const BigRat& precision)
{
    ObstructionReport r;
    r.name = k.name;
    r.epsilon = k.epsilon;
    r.dimension_hint = k.dimension_hint;
    r.precision = precision;
    r.alexander = alexander_polynomial(k);
    r.factorization = factor_rational_poly(r.alexander);
    r.multisignature = dw_multisignature_laurent(blanchfield_form(k), precision);
    r.forgetful = witt_forgetful_laurent(r.multisignature);
    r.lt_jumps = levine_tristram_jumps(k, precision);
    r.slice_obstructed = slice_obstructed(r.multisignature);
    r.doubly_slice_obstructed = doubly_slice_obstructed(r.multisignature);
    r.witnesses = mirror_witnesses(k);

    auto& notes = r.notes;
    notes.push_back("completeness: invariants are computed over R; no_obstruction_found does not "
                    "imply the knot is slice or doubly slice");
    const auto& ms = r.multisignature;
    if (ms.entries.empty() && ms.rank_only.empty())
        notes.push_back("no R-level obstruction: the multisignature is empty");
    for (const auto& [p, q] : ms.conjugate_pairs)
        notes.push_back("factors " + p.to_string() + " and " + q.to_string() +
                        " are conjugate: hyperbolic contribution, no invariant");
    for (const auto& p : ms.off_circle)
        notes.push_back("factor " + p.to_string() + " has no unit-circle roots: no R-level invariant");
    if (!ms.rank_only.empty())
        notes.push_back("skew residue forms over R at z = 1 or z = -1 are reported by rank only");
    if (r.doubly_slice_obstructed && !r.slice_obstructed)
        notes.push_back("odd-level sums vanish but some signature is nonzero: not hyperbolic over R");
    if (k.epsilon == 1) {
        try {
            r.rochlin = rochlin_invariant(k);
        } catch (const SignatureNotDivisibleBy8& e) {
            notes.push_back(std::string("rochlin unavailable: ") + e.what());
        }
    }
    if (r.witnesses) {
        if (r.witnesses->verified())
            notes.push_back("Seifert matrix is A + (-A): complementary split lagrangians attached");
        else
            notes.push_back("Seifert matrix is A + (-A) but the attached witnesses did not verify");
    }
    if (k.dimension_hint && *k.dimension_hint == 1)
        notes.push_back("classical knot: the map to the algebraic concordance group is not "
                        "injective; Casson-Gordon type obstructions are out of scope");
    return r;
}

}  // namespace wittkit
