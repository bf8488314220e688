#include "wittkit/series.hpp"

#include "wittkit/errors.hpp"

#include <vector>

namespace wittkit {

std::map<int, BigRat> series_expand(const LaurentPoly& num, const LaurentPoly& den,
                                    NovikovSide side, int lo, int hi)
{
    if (den.is_zero()) throw NotInvertibleInNovikov("zero denominator");
    std::map<int, BigRat> out;
    for (int r = lo; r <= hi; ++r) out[r] = 0;
    if (num.is_zero() || lo > hi) return out;

    // den = z^s * (d_0 + d_1 z + ... + d_n z^n) with d_0, d_n != 0.
    Poly d = den.lowered();
    int s = den.min_degree();
    int n = d.degree();
    const auto& dc = d.coeffs();

    if (side == NovikovSide::Plus) {
        if (sgn(dc[0]) == 0) throw NotInvertibleInNovikov("lowest coefficient vanishes");
        // 1/den = z^{-s} * sum_k b_k z^k
        int need = hi - s - num.min_degree();
        std::vector<BigRat> b;
        BigRat inv = 1 / dc[0];
        for (int k = 0; k <= need; ++k) {
            BigRat acc = (k == 0) ? BigRat(1) : BigRat(0);
            for (int i = 1; i <= std::min(k, n); ++i) acc -= dc[i] * b[k - i];
            b.push_back(acc * inv);
        }
        for (const auto& [j, a] : num.terms())
            for (int r = lo; r <= hi; ++r) {
                int k = r - j + s;
                if (k >= 0 && k < static_cast<int>(b.size())) out[r] += a * b[k];
            }
    } else {
        if (sgn(dc[n]) == 0) throw NotInvertibleInNovikov("highest coefficient vanishes");
        // 1/den = z^{-s-n} * sum_k c_k z^{-k}
        int need = num.max_degree() - s - n - lo;
        std::vector<BigRat> c;
        BigRat inv = 1 / dc[n];
        for (int k = 0; k <= need; ++k) {
            BigRat acc = (k == 0) ? BigRat(1) : BigRat(0);
            for (int i = 1; i <= std::min(k, n); ++i) acc -= dc[n - i] * c[k - i];
            c.push_back(acc * inv);
        }
        for (const auto& [j, a] : num.terms())
            for (int r = lo; r <= hi; ++r) {
                int k = j - s - n - r;
                if (k >= 0 && k < static_cast<int>(c.size())) out[r] += a * c[k];
            }
    }
    return out;
}

std::map<int, BigRat> series_expand(const RatFunc& f, NovikovSide side, int lo, int hi)
{
    return series_expand(f.num(), LaurentPoly::from_poly(f.den()), side, lo, hi);
}

}  // namespace wittkit
