#include "wittkit/residue_field.hpp"

namespace wittkit {

ResidueField::ResidueField(const Poly& p) : p_(p.monic())
{
    if (p_.degree() < 1) throw InternalError("residue field of a constant");
    if (sgn(p_.coeff(0)) == 0) throw InternalError("residue field modulus divisible by z");
    Poly zi = reduce(LaurentPoly::z(-1));
    Poly cur = Poly::one() % p_;
    for (int j = 0; j < p_.degree(); ++j) {
        zinv_pow_.push_back(cur);
        cur = mul(cur, zi);
    }
}

Poly ResidueField::inv(const Poly& a) const
{
    Poly s, t;
    Poly g = xgcd(reduce(a), p_, s, t);
    if (!g.is_one()) throw SingularMatrix("non-invertible residue");
    return s % p_;
}

Poly ResidueField::conj(const Poly& a) const
{
    Poly r;
    Poly ar = reduce(a);
    for (int j = 0; j <= ar.degree(); ++j)
        if (sgn(ar.coeffs()[j]) != 0) r += zinv_pow_[j].scaled(ar.coeffs()[j]);
    return r;
}

std::vector<Poly> hermitian_diagonalize(const ResidueField& K, MatPoly h)
{
    size_t n = h.rows();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) h(i, j) = K.reduce(h(i, j));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (h(j, i) != K.conj(h(i, j))) throw InternalError("matrix is not hermitian");

    std::vector<Poly> diag;
    std::vector<size_t> active;
    for (size_t i = 0; i < n; ++i) active.push_back(i);
    while (!active.empty()) {
        size_t piv = n;
        for (size_t i : active)
            if (!h(i, i).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) {
            // All diagonal entries vanish: e_i + c e_j with c = h_ij has
            // value 2 N(h_ij) != 0.
            size_t a = n, b = n;
            for (size_t i : active) {
                for (size_t j : active)
                    if (i != j && !h(i, j).is_zero()) {
                        a = i;
                        b = j;
                        break;
                    }
                if (a != n) break;
            }
            if (a == n) throw SingularForm("hermitian form is singular");
            Poly c = h(a, b), cb = K.conj(c);
            for (size_t k = 0; k < n; ++k) h(a, k) = K.reduce(h(a, k) + c * h(b, k));
            for (size_t k = 0; k < n; ++k) h(k, a) = K.reduce(h(k, a) + cb * h(k, b));
            piv = a;
        }
        Poly d = h(piv, piv);
        Poly dinv = K.inv(d);
        for (size_t i : active) {
            if (i == piv || h(i, piv).is_zero()) continue;
            Poly f = K.mul(h(i, piv), dinv);
            for (size_t j : active)
                if (j != piv) h(i, j) = K.reduce(h(i, j) - f * h(piv, j));
        }
        diag.push_back(d);
        std::vector<size_t> rest;
        for (size_t i : active)
            if (i != piv) rest.push_back(i);
        active = std::move(rest);
    }
    return diag;
}

}  // namespace wittkit
