#include "wittkit/snf.hpp"

namespace wittkit {

MatZ hermite_normal_form(const MatZ& in)
{
    MatZ m = in;
    size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid down the column until one nonzero entry remains at row r.
        for (;;) {
            size_t best = rows;
            for (size_t i = r; i < rows; ++i)
                if (m(i, c) != 0 && (best == rows || abs(m(i, c)) < abs(m(best, c)))) best = i;
            if (best == rows) break;
            m.swap_rows(r, best);
            bool done = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                BigInt q = floor_div(m(i, c), m(r, c));
                for (size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
                if (m(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (r >= rows || m(r, c) == 0) continue;
        if (m(r, c) < 0)
            for (size_t j = c; j < cols; ++j) m(r, j) = -m(r, j);
        for (size_t i = 0; i < r; ++i) {
            BigInt q = floor_div(m(i, c), m(r, c));
            if (q != 0)
                for (size_t j = c; j < cols; ++j) m(i, j) -= q * m(r, j);
        }
        ++r;
    }
    MatZ h(r, cols);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < cols; ++j) h(i, j) = m(i, j);
    return h;
}

bool smith_all_ones(const MatZ& m, size_t expected_rank)
{
    auto s = smith_normal_form(m);
    size_t rk = 0;
    for (const auto& d : s.divisors) {
        if (d == 0) break;
        if (d != 1) return false;
        ++rk;
    }
    return rk == expected_rank;
}

}  // namespace wittkit
