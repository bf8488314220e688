#pragma once

#include "wittkit/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace wittkit {

// Finite-support Laurent polynomial over Q with the involution z -> 1/z.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigRat& c);
    static LaurentPoly monomial(const BigRat& c, int d);
    static LaurentPoly from_poly(const Poly& p, int shift = 0);
    static LaurentPoly z(int k = 1) { return monomial(BigRat(1), k); }

    const std::map<int, BigRat>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int min_degree() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_degree() const { return t_.empty() ? 0 : t_.rbegin()->first; }
    BigRat coeff(int d) const;
    bool is_monomial() const { return t_.size() == 1; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly scaled(const BigRat& s) const;
    LaurentPoly shifted(int k) const;

    LaurentPoly bar() const;
    BigRat eval(const BigRat& x) const;

    // z^{-min_degree} * this, as an ordinary polynomial.
    Poly lowered() const;
    // Requires min_degree >= 0 (or zero polynomial).
    Poly to_poly() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "z") const;

private:
    std::map<int, BigRat> t_;
};

enum class LpOp { Add, Sub, Mul };
LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op);
LaurentPoly lp_bar(const LaurentPoly& a);

// A unit of Q[z,z^-1] of the form sign * z^power.
struct LaurentUnit {
    int sign = 1;
    int power = 0;
    LaurentPoly value() const { return LaurentPoly::monomial(BigRat(sign), power); }
};

// u with u * bar(p) == p, if one exists.
std::optional<LaurentUnit> is_self_conjugate(const LaurentPoly& p);

enum class MultSet { Q_charpoly, P_alexander };
bool in_multiplicative_set(const LaurentPoly& p, MultSet set, bool integral = false);

// Lowest degree 0 and positive leading coefficient.
LaurentPoly normalize(const LaurentPoly& p);
// normalize() plus integer coefficients with content 1.
LaurentPoly alexander_normalize(const LaurentPoly& p);

}  // namespace wittkit
