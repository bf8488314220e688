#include "wittkit/laurent.hpp"

#include "wittkit/errors.hpp"

#include <sstream>

namespace wittkit {

LaurentPoly::LaurentPoly(const BigRat& c)
{
    if (sgn(c) != 0) t_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const BigRat& c, int d)
{
    LaurentPoly p;
    if (sgn(c) != 0) p.t_[d] = c;
    return p;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift)
{
    LaurentPoly r;
    for (int i = 0; i <= p.degree(); ++i)
        if (sgn(p.coeffs()[i]) != 0) r.t_[i + shift] = p.coeffs()[i];
    return r;
}

BigRat LaurentPoly::coeff(int d) const
{
    auto it = t_.find(d);
    return it == t_.end() ? BigRat(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [d, c] : r.t_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [d, c] : o.t_) {
        auto& x = t_[d];
        x += c;
        if (sgn(x) == 0) t_.erase(d);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [d, c] : o.t_) {
        auto& x = t_[d];
        x -= c;
        if (sgn(x) == 0) t_.erase(d);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly r;
    for (const auto& [da, ca] : a.t_)
        for (const auto& [db, cb] : b.t_) r.t_[da + db] += ca * cb;
    for (auto it = r.t_.begin(); it != r.t_.end();) {
        if (sgn(it->second) == 0) it = r.t_.erase(it);
        else ++it;
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigRat& s) const
{
    if (sgn(s) == 0) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& [d, c] : r.t_) c *= s;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r;
    for (const auto& [d, c] : t_) r.t_[d + k] = c;
    return r;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r;
    for (const auto& [d, c] : t_) r.t_[-d] = c;
    return r;
}

BigRat LaurentPoly::eval(const BigRat& x) const
{
    BigRat acc = 0;
    for (const auto& [d, c] : t_) {
        if (d >= 0) {
            BigRat p = 1;
            for (int i = 0; i < d; ++i) p *= x;
            acc += c * p;
        } else {
            if (sgn(x) == 0) throw InternalError("evaluating negative power at 0");
            BigRat p = 1;
            for (int i = 0; i < -d; ++i) p /= x;
            acc += c * p;
        }
    }
    return acc;
}

Poly LaurentPoly::lowered() const
{
    if (t_.empty()) return Poly();
    int lo = min_degree();
    std::vector<BigRat> c(max_degree() - lo + 1, BigRat(0));
    for (const auto& [d, v] : t_) c[d - lo] = v;
    return Poly(std::move(c));
}

Poly LaurentPoly::to_poly() const
{
    if (t_.empty()) return Poly();
    if (min_degree() < 0) throw InternalError("Laurent polynomial has negative powers");
    return lowered().shifted(min_degree());
}

std::string LaurentPoly::to_string(const std::string& var) const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        int d = it->first;
        const BigRat& c = it->second;
        BigRat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (d == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (d != 1) os << "^" << d;
    }
    return os.str();
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op)
{
    switch (op) {
    case LpOp::Add: return a + b;
    case LpOp::Sub: return a - b;
    case LpOp::Mul: return a * b;
    }
    return LaurentPoly();
}

LaurentPoly lp_bar(const LaurentPoly& a) { return a.bar(); }

std::optional<LaurentUnit> is_self_conjugate(const LaurentPoly& p)
{
    if (p.is_zero()) throw InternalError("is_self_conjugate of zero");
    // u = s z^k forces k = min + max by comparing supports.
    int k = p.min_degree() + p.max_degree();
    LaurentPoly b = p.bar().shifted(k);
    if (b == p) return LaurentUnit{1, k};
    if (-b == p) return LaurentUnit{-1, k};
    return std::nullopt;
}

bool in_multiplicative_set(const LaurentPoly& p, MultSet set, bool integral)
{
    if (p.is_zero()) throw InternalError("multiplicative set test of zero");
    if (set == MultSet::Q_charpoly) {
        if (!integral) return true;
        const BigRat& lo = p.terms().begin()->second;
        const BigRat& hi = p.terms().rbegin()->second;
        return abs(lo) == 1 && abs(hi) == 1;
    }
    BigRat v = p.eval(BigRat(1));
    if (!integral) return sgn(v) != 0;
    return abs(v) == 1;
}

LaurentPoly normalize(const LaurentPoly& p)
{
    if (p.is_zero()) return p;
    LaurentPoly r = p.shifted(-p.min_degree());
    if (sgn(r.terms().rbegin()->second) < 0) r = -r;
    return r;
}

LaurentPoly alexander_normalize(const LaurentPoly& p)
{
    if (p.is_zero()) return p;
    Poly q = primitive_part(p.lowered());
    return LaurentPoly::from_poly(q);
}

}  // namespace wittkit
