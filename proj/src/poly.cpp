#include "wittkit/poly.hpp"

#include "wittkit/errors.hpp"

#include <sstream>

namespace wittkit {

Poly::Poly(std::vector<BigRat> c) : c_(std::move(c)) { trim(); }

Poly::Poly(const BigRat& c)
{
    if (sgn(c) != 0) c_.push_back(c);
}

Poly Poly::monomial(const BigRat& c, int d)
{
    Poly p;
    if (sgn(c) == 0) return p;
    p.c_.assign(d + 1, BigRat(0));
    p.c_[d] = c;
    return p;
}

void Poly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigRat Poly::coeff(int i) const
{
    if (i < 0 || i > degree()) return BigRat(0);
    return c_[i];
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const BigRat& s) const
{
    if (sgn(s) == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::shifted(int k) const
{
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(k, BigRat(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    r = a;
    int db = b.degree();
    if (a.degree() < db) {
        q = Poly();
        return;
    }
    std::vector<BigRat> qc(a.degree() - db + 1, BigRat(0));
    BigRat inv = 1 / b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        BigRat c = r.lead() * inv;
        qc[k] = c;
        for (int i = 0; i <= db; ++i) r.c_[i + k] -= c * b.c_[i];
        r.trim();
    }
    q = Poly(std::move(qc));
}

Poly operator/(const Poly& a, const Poly& b)
{
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return q;
}

Poly operator%(const Poly& a, const Poly& b)
{
    Poly q, r;
    Poly::divmod(a, b, q, r);
    return r;
}

bool Poly::divides(const Poly& a) const
{
    if (is_zero()) return a.is_zero();
    return (a % *this).is_zero();
}

Poly Poly::monic() const
{
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1) return Poly();
    std::vector<BigRat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(r));
}

BigRat Poly::eval(const BigRat& x) const
{
    BigRat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::compose(const Poly& g) const
{
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Poly(c_[i]);
    return acc;
}

Poly Poly::reversed(int n) const
{
    std::vector<BigRat> r(n + 1, BigRat(0));
    for (int i = 0; i <= degree(); ++i) r[n - i] = c_[i];
    return Poly(std::move(r));
}

int Poly::low_degree() const
{
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return -1;
}

bool operator<(const Poly& a, const Poly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRat& c = c_[i];
        if (sgn(c) == 0) continue;
        BigRat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (!unit) os << a.get_str() << "*";
        os << var;
        if (i != 1) os << "^" << i;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero()) return b.is_zero() ? b : b.monic();
    if (b.is_zero()) return a.monic();
    // Monic remainders keep rational coefficient growth in check.
    Poly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        if (y.is_constant()) return Poly::one();
        Poly r = x % y;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();
    }
    return x;
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t)
{
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1;
    Poly t0, t1 = Poly::one();
    while (!r1.is_zero()) {
        Poly q, r;
        Poly::divmod(r0, r1, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = Poly();
        t = Poly();
        return r0;
    }
    BigRat inv = 1 / r0.lead();
    s = s0.scaled(inv);
    t = t0.scaled(inv);
    return r0.scaled(inv);
}

Poly pow(const Poly& a, unsigned e)
{
    Poly r = Poly::one(), b = a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Poly powmod(const Poly& a, unsigned e, const Poly& m)
{
    Poly r = Poly::one() % m, b = a % m;
    while (e) {
        if (e & 1) r = (r * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return r;
}

BigRat content(const Poly& p)
{
    if (p.is_zero()) return BigRat(0);
    BigInt num = 0, den = 1;
    for (const auto& c : p.coeffs()) {
        if (sgn(c) == 0) continue;
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    BigRat r(num, den);
    r.canonicalize();
    if (sgn(p.lead()) < 0) r = -r;
    return r;
}

Poly primitive_part(const Poly& p)
{
    if (p.is_zero()) return p;
    return p.scaled(1 / content(p));
}

}  // namespace wittkit
