#pragma once

#include "wittkit/matrix.hpp"

#include <vector>

namespace wittkit {

// Euclidean-domain hooks used by the Smith form.
template <class R> struct Euclid;

template <> struct Euclid<BigInt> {
    static bool smaller(const BigInt& a, const BigInt& b) { return abs(a) < abs(b); }
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    // Unit u with u*a normalized (positive), and its inverse.
    static BigInt normalizer(const BigInt& a) { return sgn(a) < 0 ? BigInt(-1) : BigInt(1); }
    static BigInt unit_inverse(const BigInt& u) { return u; }
    static BigInt reduce(const BigInt& a, const BigInt& m) { return mod_sym(a, abs(m)); }
};

template <> struct Euclid<Poly> {
    static bool smaller(const Poly& a, const Poly& b) { return a.degree() < b.degree(); }
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) { Poly::divmod(a, b, q, r); }
    static Poly normalizer(const Poly& a) { return Poly(1 / a.lead()); }
    static Poly unit_inverse(const Poly& u) { return Poly(1 / u.lead()); }
    static Poly reduce(const Poly& a, const Poly& m) { return a % m; }
};

template <class R> struct SNFResult {
    Matrix<R> U, V, D;  // U * A * V = D
    Matrix<R> Uinv;
    std::vector<R> divisors;  // d_1 | d_2 | ..., zeros trailing
};

// With a nonzero modulus m such that m R^n lies in the column span of A
// (m = det A works), entries of D are kept reduced mod m. This changes the
// column operations, so V is not maintained; U, Uinv and D are.
template <class R> SNFResult<R> smith_normal_form(const Matrix<R>& A, const R* modulus = nullptr)
{
    using E = Euclid<R>;
    size_t m = A.rows(), n = A.cols();
    SNFResult<R> s;
    s.D = A;
    s.U = Matrix<R>::identity(m);
    s.Uinv = Matrix<R>::identity(m);
    s.V = Matrix<R>::identity(n);
    auto& D = s.D;

    auto row_swap = [&](size_t i, size_t k) {
        if (i == k) return;
        D.swap_rows(i, k);
        s.U.swap_rows(i, k);
        s.Uinv.swap_cols(i, k);
    };
    auto row_addmul = [&](size_t i, size_t k, const R& c) {  // row_i += c row_k
        for (size_t j = 0; j < n; ++j) D(i, j) += c * D(k, j);
        for (size_t j = 0; j < m; ++j) s.U(i, j) += c * s.U(k, j);
        for (size_t r = 0; r < m; ++r) s.Uinv(r, k) -= c * s.Uinv(r, i);
    };
    auto row_scale = [&](size_t i, const R& u) {
        R ui = E::unit_inverse(u);
        for (size_t j = 0; j < n; ++j) D(i, j) = D(i, j) * u;
        for (size_t j = 0; j < m; ++j) s.U(i, j) = s.U(i, j) * u;
        for (size_t r = 0; r < m; ++r) s.Uinv(r, i) = s.Uinv(r, i) * ui;
    };
    auto col_swap = [&](size_t j, size_t k) {
        if (j == k) return;
        D.swap_cols(j, k);
        s.V.swap_cols(j, k);
    };
    auto col_addmul = [&](size_t j, size_t k, const R& c) {  // col_j += c col_k
        for (size_t i = 0; i < m; ++i) D(i, j) += c * D(i, k);
        for (size_t i = 0; i < n; ++i) s.V(i, j) += c * s.V(i, k);
    };

    size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        for (;;) {
            size_t bi = m, bj = n;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j)
                    if (!is_zero(D(i, j)) && (bi == m || E::smaller(D(i, j), D(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) break;
            if (modulus) {
                for (size_t i = t; i < m; ++i)
                    for (size_t j = t; j < n; ++j) D(i, j) = E::reduce(D(i, j), *modulus);
                bool any = false;
                for (size_t i = t; i < m && !any; ++i)
                    for (size_t j = t; j < n; ++j)
                        if (!is_zero(D(i, j))) {
                            any = true;
                            break;
                        }
                if (!any) {
                    // Everything left is a multiple of m: the block is m * I.
                    for (size_t i = t; i < std::min(m, n); ++i) D(i, i) = *modulus;
                    break;
                }
                bi = m;
                for (size_t i = t; i < m; ++i)
                    for (size_t j = t; j < n; ++j)
                        if (!is_zero(D(i, j)) && (bi == m || E::smaller(D(i, j), D(bi, bj)))) {
                            bi = i;
                            bj = j;
                        }
            }
            row_swap(t, bi);
            col_swap(t, bj);
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (is_zero(D(i, t))) continue;
                R q, r;
                E::divmod(D(i, t), D(t, t), q, r);
                row_addmul(i, t, -q);
                if (!is_zero(D(i, t))) clean = false;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (is_zero(D(t, j))) continue;
                R q, r;
                E::divmod(D(t, j), D(t, t), q, r);
                col_addmul(j, t, -q);
                if (!is_zero(D(t, j))) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; ++i)
                for (size_t j = t + 1; j < n; ++j) {
                    R q, r;
                    E::divmod(D(i, j), D(t, t), q, r);
                    if (!is_zero(r)) {
                        row_addmul(t, i, RingTraits<R>::one());
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (is_zero(D(t, t))) break;
        row_scale(t, E::normalizer(D(t, t)));
    }
    for (size_t k = 0; k < std::min(m, n); ++k) s.divisors.push_back(D(k, k));
    return s;
}

using SNFZ = SNFResult<BigInt>;
using SNFPoly = SNFResult<Poly>;

// Row-style Hermite normal form of the lattice spanned by the rows of m.
// Zero rows are dropped; pivots are positive and entries above a pivot are
// reduced into [0, pivot).
MatZ hermite_normal_form(const MatZ& m);

// Rank over Q and whether the integral column span is saturated (cokernel
// of m torsion-free), via the Smith form.
bool smith_all_ones(const MatZ& m, size_t expected_rank);

}  // namespace wittkit
