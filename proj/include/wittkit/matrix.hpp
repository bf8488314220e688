#pragma once

#include "wittkit/errors.hpp"
#include "wittkit/ratfunc.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace wittkit {

template <class T> struct RingTraits;
template <> struct RingTraits<BigInt> {
    static BigInt zero() { return BigInt(0); }
    static BigInt one() { return BigInt(1); }
};
template <> struct RingTraits<BigRat> {
    static BigRat zero() { return BigRat(0); }
    static BigRat one() { return BigRat(1); }
};
template <> struct RingTraits<Poly> {
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly::one(); }
};
template <> struct RingTraits<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(BigRat(1)); }
};
template <> struct RingTraits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(BigRat(1)); }
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

template <class T> class Matrix {
public:
    Matrix() = default;
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, RingTraits<T>::zero()) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != c_) throw InternalError("ragged matrix literal");
            for (const auto& x : row) a_.push_back(x);
        }
    }
    static Matrix identity(size_t n)
    {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one();
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    template <class F> auto map(F f) const
    {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> m(r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator-() const
    {
        Matrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_) throw InternalError("matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    Matrix scaled(const T& s) const
    {
        Matrix m = *this;
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero_matrix() const
    {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    Matrix block_sum(const Matrix& o) const
    {
        Matrix m(r_ + o.r_, c_ + o.c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (size_t i = 0; i < o.r_; ++i)
            for (size_t j = 0; j < o.c_; ++j) m(r_ + i, c_ + j) = o(i, j);
        return m;
    }
    Matrix hstack(const Matrix& o) const
    {
        if (r_ != o.r_) throw InternalError("hstack shape mismatch");
        Matrix m(r_, c_ + o.c_);
        for (size_t i = 0; i < r_; ++i) {
            for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
            for (size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
        }
        return m;
    }
    Matrix vstack(const Matrix& o) const
    {
        if (c_ != o.c_) throw InternalError("vstack shape mismatch");
        Matrix m(r_ + o.r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (size_t i = 0; i < o.r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(r_ + i, j) = o(i, j);
        return m;
    }
    Matrix columns(const std::vector<size_t>& idx) const
    {
        Matrix m(r_, idx.size());
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }
    Matrix column(size_t j) const { return columns({j}); }

    void swap_rows(size_t i, size_t k)
    {
        for (size_t j = 0; j < c_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(size_t i, size_t k)
    {
        for (size_t r = 0; r < r_; ++r) std::swap((*this)(r, i), (*this)(r, k));
    }

private:
    void check_same(const Matrix& o) const
    {
        if (r_ != o.r_ || c_ != o.c_) throw InternalError("matrix shape mismatch");
    }
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using MatZ = Matrix<BigInt>;
using MatQ = Matrix<BigRat>;
using MatPoly = Matrix<Poly>;
using MatLaurent = Matrix<LaurentPoly>;
using MatRatFunc = Matrix<RatFunc>;

MatQ to_q(const MatZ& m);
// Throws if some entry is not integral.
MatZ to_z(const MatQ& m);
bool is_integral(const MatQ& m);
MatRatFunc to_ratfunc(const MatQ& m);
MatRatFunc to_ratfunc(const MatLaurent& m);
MatRatFunc to_ratfunc(const MatPoly& m);
// Entrywise bar, no transpose.
MatLaurent conj_entries(const MatLaurent& m);
MatRatFunc conj_entries(const MatRatFunc& m);

// Field linear algebra over Q and Q(z).
template <class F> struct ElimResult {
    Matrix<F> reduced;          // reduced row echelon form
    std::vector<size_t> pivots;  // pivot column per nonzero row
};

template <class F> ElimResult<F> rref(Matrix<F> m)
{
    ElimResult<F> res;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(piv, row);
        F inv = RingTraits<F>::one() / m(row, col);
        for (size_t j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            F f = m(i, col);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.reduced = std::move(m);
    return res;
}

template <class F> size_t rank(const Matrix<F>& m) { return rref(m).pivots.size(); }

template <class F> F determinant(Matrix<F> m)
{
    if (!m.is_square()) throw InternalError("determinant of non-square matrix");
    F det = RingTraits<F>::one();
    size_t n = m.rows();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && is_zero(m(piv, c))) ++piv;
        if (piv == n) return RingTraits<F>::zero();
        if (piv != c) {
            m.swap_rows(piv, c);
            det = -det;
        }
        det = det * m(c, c);
        F inv = RingTraits<F>::one() / m(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            F f = m(i, c) * inv;
            for (size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <class F> Matrix<F> inverse(const Matrix<F>& m)
{
    if (!m.is_square()) throw SingularMatrix("inverse of non-square matrix");
    size_t n = m.rows();
    if (n == 0) return Matrix<F>();
    auto r = rref(m.hstack(Matrix<F>::identity(n)));
    if (r.pivots.size() < n || r.pivots[n - 1] >= n) throw SingularMatrix("matrix is singular");
    std::vector<size_t> idx;
    for (size_t j = n; j < 2 * n; ++j) idx.push_back(j);
    return r.reduced.columns(idx);
}

// Basis of {x : m x = 0}, as columns.
template <class F> Matrix<F> nullspace(const Matrix<F>& m)
{
    auto r = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : r.pivots) is_piv[p] = true;
    std::vector<size_t> free;
    for (size_t j = 0; j < m.cols(); ++j)
        if (!is_piv[j]) free.push_back(j);
    Matrix<F> ns(m.cols(), free.size());
    for (size_t k = 0; k < free.size(); ++k) {
        ns(free[k], k) = RingTraits<F>::one();
        for (size_t i = 0; i < r.pivots.size(); ++i) ns(r.pivots[i], k) = -r.reduced(i, free[k]);
    }
    return ns;
}

// Independent columns spanning the column space.
template <class F> Matrix<F> column_basis(const Matrix<F>& m)
{
    auto r = rref(m);
    return m.columns(r.pivots);
}

// Solve a x = b for x (any solution); returns false if inconsistent.
template <class F> bool solve(const Matrix<F>& a, const Matrix<F>& b, Matrix<F>& x)
{
    auto r = rref(a.hstack(b));
    size_t n = a.cols();
    for (auto p : r.pivots)
        if (p >= n) return false;
    x = Matrix<F>(n, b.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) x(r.pivots[i], j) = r.reduced(i, n + j);
    return true;
}

// Determinant over Q[z] by fraction-free elimination.
Poly determinant_poly(const MatPoly& m);
// Multiply every entry by z^k so all entries become ordinary polynomials.
MatPoly clear_negative_powers(const MatLaurent& m, int* shift = nullptr);

// Exact inversion over Q(z); throws SingularMatrix when det = 0.
MatRatFunc invert_ratfunc_matrix(const MatRatFunc& a);

}  // namespace wittkit
