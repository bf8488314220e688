#include "wittkit/factor.hpp"

#include "wittkit/errors.hpp"

#include <stdexcept>
#include <algorithm>
#include <random>

namespace wittkit {

namespace {

// Polynomials over Z/p for small p, coefficients in [0, p).
using ZpPoly = std::vector<long>;

void zp_trim(ZpPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_from(const Poly& f, long p)
{
    ZpPoly r;
    BigInt P(p);
    for (const auto& c : f.coeffs()) {
        BigInt num = mod_pos(c.get_num(), P);
        BigInt den = mod_pos(c.get_den(), P);
        r.push_back(BigInt(num * inv_mod(den, P) % P).get_si());
    }
    zp_trim(r);
    return r;
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, long p)
{
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    zp_trim(r);
    return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p)
{
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    zp_trim(r);
    return r;
}

void zp_divmod(const ZpPoly& a, const ZpPoly& b, long p, ZpPoly& q, ZpPoly& r)
{
    r = a;
    q.clear();
    if (b.empty()) throw InternalError("division by zero mod p");
    if (r.size() < b.size()) return;
    q.assign(r.size() - b.size() + 1, 0);
    long inv = inv_mod(b.back(), p);
    while (!r.empty() && r.size() >= b.size()) {
        size_t k = r.size() - b.size();
        long c = r.back() * inv % p;
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + k] = ((r[i + k] - c * b[i]) % p + p) % p;
        zp_trim(r);
    }
    zp_trim(q);
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& b, long p)
{
    ZpPoly q, r;
    zp_divmod(a, b, p, q, r);
    return r;
}

ZpPoly zp_monic(ZpPoly a, long p)
{
    if (a.empty()) return a;
    long inv = inv_mod(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p)
{
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

ZpPoly zp_deriv(const ZpPoly& a, long p)
{
    ZpPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i % p) % p);
    zp_trim(r);
    return r;
}

ZpPoly zp_powmod(ZpPoly b, BigInt e, const ZpPoly& m, long p)
{
    ZpPoly r = zp_mod({1}, m, p);
    b = zp_mod(b, m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = zp_mod(zp_mul(r, b, p), m, p);
        e >>= 1;
        if (e > 0) b = zp_mod(zp_mul(b, b, p), m, p);
    }
    return r;
}

bool zp_is_one(const ZpPoly& a) { return a.size() == 1 && a[0] == 1; }

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ZpPoly, int>> zp_ddf(ZpPoly f, long p)
{
    std::vector<std::pair<ZpPoly, int>> out;
    ZpPoly x = {0, 1};
    ZpPoly h = x;
    int d = 0;
    while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
        ++d;
        h = zp_powmod(h, BigInt(p), f, p);
        ZpPoly g = zp_gcd(f, zp_sub(h, x, p), p);
        if (!zp_is_one(g)) {
            out.push_back({g, d});
            ZpPoly q, r;
            zp_divmod(f, g, p, q, r);
            f = q;
            h = zp_mod(h, f, p);
        }
    }
    if (f.size() > 1) out.push_back({f, static_cast<int>(f.size()) - 1});
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd.
void zp_edf(const ZpPoly& f, int d, long p, std::mt19937_64& rng, std::vector<ZpPoly>& out)
{
    int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    BigInt e = (ipow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
    std::uniform_int_distribution<long> dist(0, p - 1);
    for (;;) {
        ZpPoly a(n, 0);
        for (auto& c : a) c = dist(rng);
        zp_trim(a);
        if (a.size() <= 1) continue;
        ZpPoly b = zp_sub(zp_powmod(a, e, f, p), {1}, p);
        ZpPoly g = zp_gcd(f, b, p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < n) {
            ZpPoly q, r;
            zp_divmod(f, g, p, q, r);
            zp_edf(g, d, p, rng, out);
            zp_edf(zp_monic(q, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<ZpPoly> zp_factor(const ZpPoly& f, long p)
{
    std::mt19937_64 rng(0x5eed + static_cast<unsigned long>(p));
    std::vector<ZpPoly> out;
    for (auto& [g, d] : zp_ddf(zp_monic(f, p), p)) zp_edf(g, d, p, rng, out);
    return out;
}

bool zp_squarefree(const ZpPoly& f, long p)
{
    return zp_is_one(zp_gcd(f, zp_deriv(f, p), p));
}

// Polynomials over Z/P for a prime power P, coefficients in [0, P).
using ZPoly = std::vector<BigInt>;

void zz_trim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zz_reduce(ZPoly a, const BigInt& P)
{
    for (auto& c : a) c = mod_pos(c, P);
    zz_trim(a);
    return a;
}

ZPoly zz_mul(const ZPoly& a, const ZPoly& b, const BigInt& P)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zz_reduce(r, P);
}

ZPoly zz_sub(const ZPoly& a, const ZPoly& b, const BigInt& P)
{
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zz_reduce(r, P);
}

ZPoly zz_add(const ZPoly& a, const ZPoly& b, const BigInt& P)
{
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zz_reduce(r, P);
}

ZPoly zz_from_zp(const ZpPoly& a)
{
    ZPoly r;
    for (long c : a) r.push_back(BigInt(c));
    return r;
}

ZpPoly zp_from_zz(const ZPoly& a, long p)
{
    ZpPoly r;
    BigInt P(p);
    for (const auto& c : a) r.push_back(mod_pos(c, P).get_si());
    zp_trim(r);
    return r;
}

// Bezout s*g + t*h = 1 over Z/p.
void zp_bezout(const ZpPoly& g, const ZpPoly& h, long p, ZpPoly& s, ZpPoly& t)
{
    ZpPoly r0 = g, r1 = h, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        ZpPoly q, r;
        zp_divmod(r0, r1, p, q, r);
        r0 = r1;
        r1 = r;
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        s0 = s1;
        s1 = s2;
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        t0 = t1;
        t1 = t2;
    }
    if (r0.size() != 1) throw InternalError("Hensel factors not coprime mod p");
    long inv = inv_mod(r0[0], p);
    s = s0;
    t = t0;
    for (auto& c : s) c = c * inv % p;
    for (auto& c : t) c = c * inv % p;
}

// Lift f = g*h (mod p) to f = g*h (mod p^k), g monic. Linear lifting.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, long p, unsigned k)
{
    ZpPoly s, t;
    zp_bezout(zp_from_zz(g, p), zp_from_zz(h, p), p, s, t);
    BigInt pj(p);
    BigInt P(p);
    for (unsigned j = 1; j < k; ++j) {
        BigInt pj1 = pj * p;
        ZPoly err = zz_sub(f, zz_mul(g, h, pj1), pj1);
        ZpPoly e;
        for (const auto& c : err) e.push_back(mod_pos(c / pj, P).get_si());
        zp_trim(e);
        // dg = (t e) mod g, dh = s e + h * ((t e) div g)
        ZpPoly te = zp_mul(t, e, p), q, dg;
        zp_divmod(te, zp_from_zz(g, p), p, q, dg);
        ZpPoly dh = zp_sub(zp_mul(s, e, p), zp_mul(zp_sub({}, zp_from_zz(h, p), p), q, p), p);
        ZPoly DG = zz_from_zp(dg), DH = zz_from_zp(dh);
        for (auto& c : DG) c *= pj;
        for (auto& c : DH) c *= pj;
        g = zz_add(g, DG, pj1);
        h = zz_add(h, DH, pj1);
        pj = pj1;
    }
}

Poly poly_from_sym(const ZPoly& a, const BigInt& P)
{
    std::vector<BigRat> c;
    for (const auto& x : a) c.push_back(BigRat(mod_sym(x, P)));
    return Poly(std::move(c));
}

ZPoly zz_from_int_poly(const Poly& f)
{
    ZPoly r;
    for (const auto& c : f.coeffs()) r.push_back(c.get_num());
    return r;
}

BigInt coefficient_bound(const Poly& f)
{
    BigInt sq = 0;
    for (const auto& c : f.coeffs()) sq += c.get_num() * c.get_num();
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
    root += 1;
    BigInt lc = abs(f.lead().get_num());
    return ipow(BigInt(2), static_cast<unsigned>(f.degree())) * root * lc;
}

}  // namespace

LaurentPoly Factorization::expand() const
{
    LaurentPoly r = unit;
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) r = r * LaurentPoly::from_poly(f);
    return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p)
{
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() <= 0) return out;
    Poly a = p.monic();
    Poly c = gcd(a, a.derivative());
    Poly w = a / c;
    int i = 1;
    while (c.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    if (w.degree() > 0) out.push_back({w.monic(), i});
    return out;
}

std::vector<Poly> factor_squarefree(const Poly& input)
{
    Poly f = primitive_part(input);
    if (f.degree() <= 1) return {f.monic()};
    // Strip a factor z first so the constant term is nonzero.
    if (sgn(f.coeff(0)) == 0) {
        auto rest = factor_squarefree(f / Poly::z());
        rest.push_back(Poly::z());
        return rest;
    }
    BigInt lc = f.lead().get_num();
    long p = 3;
    for (;; p += 2) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        if (zp_squarefree(zp_from(f, p), p)) break;
    }
    std::vector<ZpPoly> modp = zp_factor(zp_from(f, p), p);
    if (modp.size() == 1) return {f.monic()};

    BigInt bound = 2 * coefficient_bound(f) + 1;
    unsigned k = 1;
    BigInt P(p);
    while (P <= bound) {
        P *= p;
        ++k;
    }
    // Lift f = lc * prod g_i, peeling one factor at a time.
    std::vector<ZPoly> lifted;
    ZPoly target = zz_reduce(zz_from_int_poly(f), P);
    for (size_t i = 0; i + 1 < modp.size(); ++i) {
        ZPoly g = zz_from_zp(modp[i]);
        ZpPoly rest = {mod_pos(lc, BigInt(p)).get_si()};
        for (size_t j = i + 1; j < modp.size(); ++j) rest = zp_mul(rest, modp[j], p);
        ZPoly h = zz_from_zp(rest);
        hensel_pair(target, g, h, p, k);
        lifted.push_back(g);
        target = h;
    }
    {
        BigInt li = inv_mod(mod_pos(lc, P), P);
        ZPoly last = target;
        for (auto& c : last) c = mod_pos(c * li, P);
        lifted.push_back(last);
    }

    std::vector<Poly> result;
    Poly A = f;
    std::vector<ZPoly> pool = lifted;
    size_t d = 1;
    while (2 * d <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        for (;;) {
            BigInt L = A.lead().get_num();
            ZPoly G = {mod_pos(L, P)};
            for (size_t i : idx) G = zz_mul(G, pool[i], P);
            Poly cand = primitive_part(poly_from_sym(G, P));
            if (cand.degree() > 0 && cand.divides(A)) {
                result.push_back(cand.monic());
                A = primitive_part(A / cand);
                std::vector<ZPoly> keep;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(pool[i]);
                }
                pool = std::move(keep);
                found = true;
                break;
            }
            // next combination
            size_t pos = d;
            while (pos > 0 && idx[pos - 1] == pool.size() - d + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (size_t i = pos; i < d; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found) ++d;
    }
    if (A.degree() > 0) result.push_back(A.monic());
    return result;
}

Factorization factor_rational_poly(const LaurentPoly& p)
{
    if (p.is_zero()) throw InternalError("factorization of zero");
    Factorization out;
    Poly q = p.lowered();
    out.unit = LaurentPoly::monomial(q.lead(), p.min_degree());
    for (const auto& [part, mult] : squarefree_decomposition(q))
        for (const auto& f : factor_squarefree(part)) out.factors.push_back({f, mult});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<int> factor_degrees_mod(const Poly& f, long q)
{
    ZpPoly g = zp_from(primitive_part(f), q);
    if (static_cast<int>(g.size()) - 1 != f.degree() || !zp_squarefree(g, q))
        throw std::invalid_argument("polynomial is not squarefree of full degree mod " + std::to_string(q));
    std::vector<int> degs;
    for (const auto& h : zp_factor(g, q)) degs.push_back(static_cast<int>(h.size()) - 1);
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool irreducible_mod(const Poly& f, long q)
{
    ZpPoly g = zp_from(primitive_part(f), q);
    if (static_cast<int>(g.size()) - 1 != f.degree()) return false;
    if (!zp_squarefree(g, q)) return false;
    return zp_factor(g, q).size() == 1;
}

Poly cyclotomic(int n)
{
    Poly r = Poly::monomial(BigRat(1), n) - Poly::one();
    for (int d = 1; d < n; ++d)
        if (n % d == 0) r = r / cyclotomic(d);
    return r;
}

}  // namespace wittkit
