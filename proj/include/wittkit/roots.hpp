#pragma once

#include "wittkit/residue_field.hpp"

#include <string>
#include <vector>

namespace wittkit {

// Default isolation precision 2^-64, overridden by WITTKIT_PRECISION.
BigRat default_precision();
// Accepts "a/b", decimals, "1e-20" and "2^-k".
BigRat parse_precision(const std::string& s);

// For a self-conjugate monic p of even degree 2m, the polynomial g of degree
// m with p(z) = z^m g(z + 1/z).
Poly trace_polynomial(const Poly& p);

// Sturm-sequence root counting over Q.
class Sturm {
public:
    explicit Sturm(const Poly& f);
    // Number of distinct real roots in (a, b].
    int count(const BigRat& a, const BigRat& b) const;

private:
    int variations(const BigRat& x) const;
    std::vector<Poly> seq_;
};

// One root e^{i theta} of an irreducible self-conjugate factor, with theta in
// (0, pi] (theta = 0 only for the factor z - 1).
struct CertifiedRoot {
    Poly factor;        // monic
    Poly trace_poly;    // g with t = 2 cos(theta) a simple root
    BigRat t_lo, t_hi;  // isolating interval for t; equal when t is rational
    BigRat theta_lo, theta_hi;
    BigRat precision;

    bool t_exact() const { return t_lo == t_hi; }
    double approx() const;
    // Halve the t-interval once (keeps the root isolated).
    CertifiedRoot bisected() const;
    CertifiedRoot refined(const BigRat& precision) const;
};

// Roots of an irreducible monic factor on the unit circle with
// 0 <= theta <= pi, ordered by increasing theta.
std::vector<CertifiedRoot> unit_circle_roots(const Poly& p, const BigRat& precision);

// Sign of a self-conjugate residue a in Q[z]/(p) at z = e^{i theta}.
int sign_at_root(const Poly& a, const CertifiedRoot& root);

// Signature of the hermitian matrix over Q[z]/(p) at the embedding.
int hermitian_signature_at_root(const MatPoly& h, const CertifiedRoot& root);

// Signature of a symmetric rational matrix (exact).
int signature_rational(const MatQ& m);

// Certified rational enclosure of acos(x) for rational x in [-1, 1].
void acos_enclosure(const BigRat& x_lo, const BigRat& x_hi, long bits, BigRat& lo, BigRat& hi);

}  // namespace wittkit
