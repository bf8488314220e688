#pragma once

#include "wittkit/matrix.hpp"

#include <vector>

namespace wittkit {

// K = Q[z]/(p) for monic irreducible p with p(0) != 0, carrying the
// involution induced by z -> 1/z (well defined when p is self-conjugate).
class ResidueField {
public:
    explicit ResidueField(const Poly& p);
    const Poly& modulus() const { return p_; }
    int degree() const { return p_.degree(); }

    Poly reduce(const Poly& a) const { return a % p_; }
    Poly reduce(const LaurentPoly& a) const { return laurent_mod(a, p_); }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % p_; }
    Poly inv(const Poly& a) const;
    Poly conj(const Poly& a) const;
    bool is_self_conjugate_element(const Poly& a) const { return conj(a) == reduce(a); }

private:
    Poly p_;
    std::vector<Poly> zinv_pow_;  // (1/z)^j mod p, j < deg p
};

// Diagonal entries of a congruent diagonal form of the hermitian matrix h
// over K (h^T = conj(h) entrywise). Throws SingularForm when det = 0.
std::vector<Poly> hermitian_diagonalize(const ResidueField& K, MatPoly h);

}  // namespace wittkit
