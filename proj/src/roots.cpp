#include "wittkit/roots.hpp"

#include "wittkit/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>

namespace wittkit {

BigRat parse_precision(const std::string& s)
{
    BigRat r;
    if (s.rfind("2^", 0) == 0) {
        BigInt e = parse_int(s.substr(2));
        if (e >= 0) throw ParseError("precision exponent must be negative: " + s);
        r = BigRat(BigInt(1), ipow(BigInt(2), static_cast<unsigned>(BigInt(-e).get_ui())));
    } else if (s.find_first_of("eE") != std::string::npos) {
        auto pos = s.find_first_of("eE");
        BigRat mant = parse_rat(s.substr(0, pos));
        long e = parse_int(s.substr(pos + 1)).get_si();
        BigRat scale = BigRat(ipow(BigInt(10), static_cast<unsigned>(std::labs(e))));
        r = e < 0 ? BigRat(mant / scale) : BigRat(mant * scale);
    } else {
        r = parse_rat(s);
    }
    r.canonicalize();
    if (sgn(r) <= 0) throw ParseError("precision must be positive: " + s);
    return r;
}

BigRat default_precision()
{
    if (const char* env = std::getenv("WITTKIT_PRECISION"); env && *env) return parse_precision(env);
    return BigRat(BigInt(1), ipow(BigInt(2), 64u));
}

Poly trace_polynomial(const Poly& p)
{
    int n = p.degree();
    if (n % 2 != 0) throw InternalError("trace polynomial needs even degree");
    LaurentPoly rest = LaurentPoly::from_poly(p, -n / 2);
    LaurentPoly t = LaurentPoly::z(1) + LaurentPoly::z(-1);
    std::vector<BigRat> g(n / 2 + 1, BigRat(0));
    while (!rest.is_zero()) {
        int d = rest.max_degree();
        if (d < 0) throw InternalError("factor is not self-conjugate");
        BigRat a = rest.coeff(d);
        g[d] = a;
        LaurentPoly td = LaurentPoly(BigRat(1));
        for (int i = 0; i < d; ++i) td *= t;
        rest -= td.scaled(a);
    }
    return Poly(std::move(g));
}

Sturm::Sturm(const Poly& f)
{
    if (f.is_zero()) return;
    seq_.push_back(f);
    Poly d = f.derivative();
    if (d.is_zero()) return;
    seq_.push_back(d);
    for (;;) {
        Poly r = seq_[seq_.size() - 2] % seq_.back();
        if (r.is_zero()) break;
        seq_.push_back(-r);
    }
    // Divide out the gcd so multiple roots are counted once.
    Poly g = seq_.back();
    if (g.degree() > 0)
        for (auto& s : seq_) s = s / g;
}

int Sturm::variations(const BigRat& x) const
{
    int v = 0, last = 0;
    for (const auto& s : seq_) {
        int sg = sgn(s.eval(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

int Sturm::count(const BigRat& a, const BigRat& b) const
{
    if (seq_.empty()) return 0;
    return variations(a) - variations(b);
}

namespace {

BigRat mpfr_to_q(mpfr_t x)
{
    BigRat q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

BigRat clamp1(const BigRat& x)
{
    if (x > 1) return BigRat(1);
    if (x < -1) return BigRat(-1);
    return x;
}

long bits_for(const BigRat& precision)
{
    // -log2(precision) + margin
    long b = static_cast<long>(mpz_sizeinbase(precision.get_den().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(precision.get_num().get_mpz_t(), 2));
    return std::max(64L, b + 32);
}

// Chebyshev-type polynomials C_j(t) = 2 cos(j theta) in t = 2 cos(theta).
Poly real_part_in_t(const Poly& a)
{
    // a(e^{i theta}) real part = a_0 + sum_j a_j C_j(t) / 2.
    Poly r;
    Poly c0 = Poly(BigRat(2)), c1 = Poly::z();
    for (int j = 0; j <= a.degree(); ++j) {
        Poly cj;
        if (j == 0) cj = c0;
        else if (j == 1) cj = c1;
        else {
            cj = Poly::z() * c1 - c0;
            c0 = c1;
            c1 = cj;
        }
        r += cj.scaled(a.coeff(j) / 2);
    }
    return r;
}

}  // namespace

void acos_enclosure(const BigRat& x_lo, const BigRat& x_hi, long bits, BigRat& lo, BigRat& hi)
{
    mpfr_t x, y;
    mpfr_init2(x, bits);
    mpfr_init2(y, bits);
    // acos is decreasing: lower bound from the upper end rounded up.
    mpfr_set_q(x, clamp1(x_hi).get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp_si(x, 1) > 0) mpfr_set_si(x, 1, MPFR_RNDN);
    mpfr_acos(y, x, MPFR_RNDD);
    lo = mpfr_to_q(y);
    mpfr_set_q(x, clamp1(x_lo).get_mpq_t(), MPFR_RNDD);
    if (mpfr_cmp_si(x, -1) < 0) mpfr_set_si(x, -1, MPFR_RNDN);
    mpfr_acos(y, x, MPFR_RNDU);
    hi = mpfr_to_q(y);
    mpfr_clear(x);
    mpfr_clear(y);
    if (sgn(lo) < 0) lo = 0;
}

double CertifiedRoot::approx() const
{
    BigRat mid = (theta_lo + theta_hi) / 2;
    return mid.get_d();
}

CertifiedRoot CertifiedRoot::bisected() const
{
    if (t_exact()) return *this;
    CertifiedRoot r = *this;
    BigRat mid = (t_lo + t_hi) / 2;
    BigRat gm = trace_poly.eval(mid);
    if (sgn(gm) == 0) {
        r.t_lo = r.t_hi = mid;
    } else if (sgn(gm) == sgn(trace_poly.eval(t_lo))) {
        r.t_lo = mid;
    } else {
        r.t_hi = mid;
    }
    acos_enclosure(r.t_lo / 2, r.t_hi / 2, bits_for(precision), r.theta_lo, r.theta_hi);
    return r;
}

CertifiedRoot CertifiedRoot::refined(const BigRat& prec) const
{
    CertifiedRoot r = *this;
    r.precision = prec;
    acos_enclosure(r.t_lo / 2, r.t_hi / 2, bits_for(prec), r.theta_lo, r.theta_hi);
    while (r.theta_hi - r.theta_lo > prec && !r.t_exact()) r = r.bisected();
    if (r.t_exact()) {
        // Exact t: tighten through MPFR precision alone.
        long bits = bits_for(prec);
        while (r.theta_hi - r.theta_lo > prec) {
            bits *= 2;
            acos_enclosure(r.t_lo / 2, r.t_hi / 2, bits, r.theta_lo, r.theta_hi);
        }
    }
    return r;
}

std::vector<CertifiedRoot> unit_circle_roots(const Poly& p_in, const BigRat& precision)
{
    Poly p = p_in.monic();
    std::vector<CertifiedRoot> out;
    if (p.degree() == 1) {
        BigRat c = p.coeff(0);
        if (c != 1 && c != -1) return out;
        CertifiedRoot r;
        r.factor = p;
        r.trace_poly = Poly::z() - Poly(BigRat(c == 1 ? -2 : 2));
        r.t_lo = r.t_hi = (c == 1) ? BigRat(-2) : BigRat(2);
        r.precision = precision;
        out.push_back(r.refined(precision));
        return out;
    }
    if (p.degree() % 2 != 0) return out;
    Poly g = trace_polynomial(p);
    Sturm st(g);
    // Isolate roots of g in (-2, 2).
    struct Iv { BigRat a, b; };
    std::vector<Iv> work = {{BigRat(-2), BigRat(2)}};
    std::vector<Iv> iso;
    while (!work.empty()) {
        Iv iv = work.back();
        work.pop_back();
        int c = st.count(iv.a, iv.b);
        if (c == 0) continue;
        if (c == 1) {
            iso.push_back(iv);
            continue;
        }
        BigRat m = (iv.a + iv.b) / 2;
        work.push_back({iv.a, m});
        work.push_back({m, iv.b});
    }
    for (const auto& iv : iso) {
        CertifiedRoot r;
        r.factor = p;
        r.trace_poly = g;
        r.precision = precision;
        if (sgn(g.eval(iv.b)) == 0) {
            r.t_lo = r.t_hi = iv.b;
        } else {
            r.t_lo = iv.a;
            r.t_hi = iv.b;
            if (sgn(g.eval(iv.a)) == 0) {
                // Root at the open end belongs to the neighbour; shrink.
                r.t_lo = iv.a + (iv.b - iv.a) / 2;
                while (st.count(r.t_lo, iv.b) == 0) r.t_lo = iv.a + (r.t_lo - iv.a) / 2;
            }
        }
        out.push_back(r.refined(precision));
    }
    std::sort(out.begin(), out.end(),
              [](const CertifiedRoot& a, const CertifiedRoot& b) { return a.t_lo > b.t_lo; });
    return out;
}

int sign_at_root(const Poly& a_in, const CertifiedRoot& root)
{
    Poly a = a_in % root.factor;
    if (a.is_zero()) throw SingularForm("residue vanishes at the root");
    if (root.factor.degree() == 1) return sgn(a.coeff(0));
    Poly e = real_part_in_t(a);
    CertifiedRoot r = root;
    for (;;) {
        if (r.t_exact()) return sgn(e.eval(r.t_lo));
        int el = sgn(e.eval(r.t_lo)), eh = sgn(e.eval(r.t_hi));
        if (el != 0 && el == eh && Sturm(e).count(r.t_lo, r.t_hi) == 0) return el;
        r = r.bisected();
    }
}

int hermitian_signature_at_root(const MatPoly& h, const CertifiedRoot& root)
{
    ResidueField K(root.factor);
    int sig = 0;
    for (const auto& d : hermitian_diagonalize(K, h)) sig += sign_at_root(d, root);
    return sig;
}

int signature_rational(const MatQ& m)
{
    ResidueField K(Poly::z() - Poly::one());
    MatPoly h = m.map([](const BigRat& x) { return Poly(x); });
    int sig = 0;
    for (const auto& d : hermitian_diagonalize(K, h)) sig += sgn(d.coeff(0));
    return sig;
}

}  // namespace wittkit
