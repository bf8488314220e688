#include "wittkit/ratfunc.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

RatFunc::RatFunc(const LaurentPoly& n, const LaurentPoly& d)
{
    if (d.is_zero()) throw SingularMatrix("rational function with zero denominator");
    if (n.is_zero()) {
        den_ = Poly::one();
        return;
    }
    int shift = n.min_degree() - d.min_degree();
    Poly N = n.lowered(), D = d.lowered();
    Poly g = gcd(N, D);
    if (!g.is_one()) {
        N = N / g;
        D = D / g;
    }
    BigRat l = D.lead();
    num_ = LaurentPoly::from_poly(N.scaled(1 / l), shift);
    den_ = D.monic();
}

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
        return RatFunc(a.num_ + b.num_, LaurentPoly::from_poly(a.den_));
    }
    LaurentPoly da = LaurentPoly::from_poly(a.den_), db = LaurentPoly::from_poly(b.den_);
    return RatFunc(a.num_ * db + b.num_ * da, da * db);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, LaurentPoly::from_poly(a.den_ * b.den_));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b)
{
    if (b.is_zero()) throw SingularMatrix("division by zero rational function");
    return RatFunc(a.num_ * LaurentPoly::from_poly(b.den_),
                   LaurentPoly::from_poly(a.den_) * b.num_);
}

RatFunc RatFunc::bar() const
{
    if (den_.is_one()) return RatFunc(num_.bar());
    return RatFunc(num_.bar(), LaurentPoly::from_poly(den_).bar());
}

Poly laurent_mod(const LaurentPoly& a, const Poly& m)
{
    if (a.is_zero()) return Poly();
    if (m.degree() == 0) return Poly();
    int lo = a.min_degree();
    Poly base = a.lowered() % m;
    if (lo == 0) return base;
    if (lo > 0) return (base * powmod(Poly::z(), static_cast<unsigned>(lo), m)) % m;
    // z is a unit modulo m since m(0) != 0.
    Poly s, t;
    Poly g = xgcd(Poly::z(), m, s, t);
    if (!g.is_one()) throw InternalError("z not invertible modulo denominator");
    return (base * powmod(s, static_cast<unsigned>(-lo), m)) % m;
}

RatFunc RatFunc::frac_part() const
{
    if (den_.is_one()) return RatFunc();
    Poly r = laurent_mod(num_, den_);
    RatFunc out;
    out.num_ = LaurentPoly::from_poly(r);
    out.den_ = r.is_zero() ? Poly::one() : den_;
    return out;
}

bool RatFunc::equal_mod_laurent(const RatFunc& o) const
{
    return (*this - o).frac_part().is_zero();
}

std::string RatFunc::to_string() const
{
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace wittkit
