#pragma once

#include "wittkit/seifert.hpp"

#include <random>

namespace wittkit {

// Rational entries a/b with |a| <= bound, 1 <= b <= den_bound.
BigRat random_rational(std::mt19937_64& rng, long bound, long den_bound = 1);

// Cayley transform h = (1 - A)^-1 (1 + A), A = theta^-1 M, M^T = -eps M.
// theta and M have integer entries bounded by `bound`.
AutometricForm random_autometric(std::mt19937_64& rng, size_t rank, int epsilon, long bound);

// Nonsingular Seifert form over Q (den_bound > 1) or Z (den_bound == 1,
// not necessarily unimodular).
SeifertForm random_seifert(std::mt19937_64& rng, size_t rank, int epsilon, long bound, long den_bound);

// Integral knot Seifert matrix psi = U + M of size 2g with U - U^T the
// standard symplectic form and M symmetric; psi - psi^T is unimodular.
MatQ random_knot_matrix(std::mt19937_64& rng, size_t genus, long bound);

}  // namespace wittkit
