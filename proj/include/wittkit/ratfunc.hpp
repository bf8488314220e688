#pragma once

#include "wittkit/laurent.hpp"

#include <string>

namespace wittkit {

// Element num/den of Q(z). Canonical form: den is a monic ordinary
// polynomial with nonzero constant term, coprime to num (z-powers moved
// into num).
class RatFunc {
public:
    RatFunc() : den_(Poly::one()) {}
    explicit RatFunc(const BigRat& c) : num_(c), den_(Poly::one()) {}
    explicit RatFunc(const LaurentPoly& n) : num_(n), den_(Poly::one()) {}
    RatFunc(const LaurentPoly& n, const LaurentPoly& d);
    static RatFunc from_poly(const Poly& p) { return RatFunc(LaurentPoly::from_poly(p)); }

    const LaurentPoly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc bar() const;
    // Representative of the class in Q(z)/Q[z,z^-1]: r/den with deg r < deg den.
    RatFunc frac_part() const;
    bool equal_mod_laurent(const RatFunc& o) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const;

private:
    LaurentPoly num_;
    Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

// a * z^{-k} mod m, for m with nonzero constant term.
Poly laurent_mod(const LaurentPoly& a, const Poly& m);

}  // namespace wittkit
