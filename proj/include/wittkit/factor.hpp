#pragma once

#include "wittkit/laurent.hpp"

#include <utility>
#include <vector>

namespace wittkit {

struct Factorization {
    LaurentPoly unit;  // c * z^k
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity
    LaurentPoly expand() const;
};

// Squarefree decomposition of a nonzero polynomial: monic parts with
// multiplicities, product equals p.monic().
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// Irreducible factors over Q of a squarefree polynomial, monic.
std::vector<Poly> factor_squarefree(const Poly& p);

// Factorization over Q; factors sorted by (degree, coefficients).
Factorization factor_rational_poly(const LaurentPoly& p);

// Irreducibility test modulo a single prime (for cross-checks): true when
// p is squarefree mod q and has a single irreducible factor mod q.
bool irreducible_mod(const Poly& p, long q);
// Degrees of the irreducible factors of p mod q (p squarefree mod q).
std::vector<int> factor_degrees_mod(const Poly& p, long q);

Poly cyclotomic(int n);

}  // namespace wittkit
