#include "wittkit/matrix.hpp"

namespace wittkit {

MatQ to_q(const MatZ& m)
{
    return m.map([](const BigInt& x) { return BigRat(x); });
}

bool is_integral(const MatQ& m)
{
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

MatZ to_z(const MatQ& m)
{
    if (!is_integral(m)) throw InternalError("matrix has non-integral entries");
    return m.map([](const BigRat& x) { return BigInt(x.get_num()); });
}

MatRatFunc to_ratfunc(const MatQ& m)
{
    return m.map([](const BigRat& x) { return RatFunc(x); });
}

MatRatFunc to_ratfunc(const MatLaurent& m)
{
    return m.map([](const LaurentPoly& x) { return RatFunc(x); });
}

MatRatFunc to_ratfunc(const MatPoly& m)
{
    return m.map([](const Poly& x) { return RatFunc::from_poly(x); });
}

MatLaurent conj_entries(const MatLaurent& m)
{
    return m.map([](const LaurentPoly& x) { return x.bar(); });
}

MatRatFunc conj_entries(const MatRatFunc& m)
{
    return m.map([](const RatFunc& x) { return x.bar(); });
}

Poly determinant_poly(const MatPoly& in)
{
    if (!in.is_square()) throw InternalError("determinant of non-square matrix");
    size_t n = in.rows();
    if (n == 0) return Poly::one();
    MatPoly m = in;
    Poly prev = Poly::one();
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return Poly();
        if (piv != k) {
            m.swap_rows(piv, k);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    return neg ? -d : d;
}

MatPoly clear_negative_powers(const MatLaurent& m, int* shift)
{
    int lo = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) lo = std::min(lo, m(i, j).min_degree());
    if (shift) *shift = -lo;
    return m.map([lo](const LaurentPoly& x) { return x.shifted(-lo).to_poly(); });
}

MatRatFunc invert_ratfunc_matrix(const MatRatFunc& a) { return inverse(a); }

}  // namespace wittkit
