#pragma once

#include "wittkit/rational.hpp"

#include <string>
#include <vector>

namespace wittkit {

// Dense polynomial over Q in the variable z; c[i] is the coefficient of z^i.
// No trailing zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRat> c);
    explicit Poly(const BigRat& c);
    static Poly monomial(const BigRat& c, int d);
    static Poly z() { return monomial(BigRat(1), 1); }
    static Poly one() { return Poly(BigRat(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    BigRat coeff(int i) const;
    const BigRat& lead() const { return c_.back(); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const BigRat& s) const;
    Poly shifted(int k) const;  // times z^k, k >= 0

    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    friend Poly operator/(const Poly& a, const Poly& b);
    friend Poly operator%(const Poly& a, const Poly& b);
    bool divides(const Poly& a) const;

    Poly monic() const;
    Poly derivative() const;
    BigRat eval(const BigRat& x) const;
    Poly compose(const Poly& g) const;
    // z^n p(1/z) for n >= degree.
    Poly reversed(int n) const;
    int low_degree() const;  // smallest i with c[i] != 0; -1 for zero

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    // Total order: by degree, then coefficients from the top.
    friend bool operator<(const Poly& a, const Poly& b);

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<BigRat> c_;
};

Poly gcd(const Poly& a, const Poly& b);
// Returns monic g = s*a + t*b.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);
Poly pow(const Poly& a, unsigned e);
Poly powmod(const Poly& a, unsigned e, const Poly& m);

// Integer content handling: p = content * primitive with primitive in Z[z]
// having positive leading coefficient.
BigRat content(const Poly& p);
Poly primitive_part(const Poly& p);

}  // namespace wittkit
