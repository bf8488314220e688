#include "wittkit/rational.hpp"

#include "wittkit/errors.hpp"

#include <cctype>

namespace wittkit {

namespace {
std::string trim(const std::string& s)
{
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_int_text(const std::string& s)
{
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}
}  // namespace

BigInt parse_int(const std::string& raw)
{
    std::string s = trim(raw);
    if (!valid_int_text(s)) throw ParseError("not an integer: '" + raw + "'");
    if (s[0] == '+') s = s.substr(1);
    return BigInt(s, 10);
}

BigRat parse_rat(const std::string& raw)
{
    std::string s = trim(raw);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n = parse_int(s.substr(0, slash));
        BigInt d = parse_int(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + raw + "'");
        BigRat q(n, d);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        if (fp.empty() || !valid_int_text(fp) || fp[0] == '-' || fp[0] == '+')
            throw ParseError("bad decimal '" + raw + "'");
        BigInt whole = parse_int(ip);
        BigInt frac(fp, 10);
        BigInt den = ipow(BigInt(10), static_cast<unsigned>(fp.size()));
        BigRat q = BigRat(abs(whole) * den + frac, den);
        q.canonicalize();
        return neg ? BigRat(-q) : q;
    }
    return BigRat(parse_int(s));
}

std::string to_string(const BigRat& q) { return q.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }

BigRat mod_one(const BigRat& q)
{
    BigInt f = floor_div(q.get_num(), q.get_den());
    BigRat r = q - BigRat(f);
    r.canonicalize();
    return r;
}

bool is_integer(const BigRat& q) { return q.get_den() == 1; }

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_pos(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt mod_sym(const BigInt& a, const BigInt& m)
{
    BigInt r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

int valuation(BigInt n, long p)
{
    if (n == 0) return 0;
    int v = 0;
    BigInt P(p);
    while (mpz_divisible_p(n.get_mpz_t(), P.get_mpz_t())) {
        n /= P;
        ++v;
    }
    return v;
}

BigInt ipow(const BigInt& b, unsigned e)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

long ipow(long b, unsigned e)
{
    long r = 1;
    while (e--) r *= b;
    return r;
}

bool is_prime(long n)
{
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

BigInt inv_mod(const BigInt& a, const BigInt& m)
{
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw InternalError("inverse of non-unit modulo " + m.get_str());
    return r;
}

long inv_mod(long a, long m)
{
    return inv_mod(BigInt(a), BigInt(m)).get_si();
}

int legendre(long a, long p)
{
    BigInt A(a), P(p);
    return mpz_legendre(A.get_mpz_t(), P.get_mpz_t());
}

}  // namespace wittkit
