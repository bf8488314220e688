#pragma once

#include <gmpxx.h>

#include <string>

namespace wittkit {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Accepts "a", "-a", "a/b" and plain decimals such as "0.25".
BigRat parse_rat(const std::string& s);
BigInt parse_int(const std::string& s);

std::string to_string(const BigRat& q);
std::string to_string(const BigInt& n);

inline bool is_zero(const BigRat& q) { return sgn(q) == 0; }
inline bool is_zero(const BigInt& n) { return sgn(n) == 0; }

// Representative of q in [0, 1).
BigRat mod_one(const BigRat& q);
bool is_integer(const BigRat& q);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_pos(const BigInt& a, const BigInt& m);
// Symmetric residue in (-m/2, m/2].
BigInt mod_sym(const BigInt& a, const BigInt& m);

// Exponent of p in n (n != 0).
int valuation(BigInt n, long p);
BigInt ipow(const BigInt& b, unsigned e);
long ipow(long b, unsigned e);

bool is_prime(long n);
// Inverse of a modulo m; a must be a unit.
BigInt inv_mod(const BigInt& a, const BigInt& m);
long inv_mod(long a, long m);
// Legendre symbol (a/p) for odd prime p, a not divisible by p.
int legendre(long a, long p);

}  // namespace wittkit
