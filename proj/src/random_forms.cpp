#include "wittkit/random_forms.hpp"

namespace wittkit {

BigRat random_rational(std::mt19937_64& rng, long bound, long den_bound)
{
    std::uniform_int_distribution<long> num(-bound, bound), den(1, std::max(1L, den_bound));
    BigRat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

AutometricForm random_autometric(std::mt19937_64& rng, size_t rank, int epsilon, long bound)
{
    if (epsilon == -1 && rank % 2) throw ParseError("skew forms need even rank");
    for (;;) {
        MatQ theta(rank, rank), M(rank, rank);
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = i; j < rank; ++j) {
                BigRat t = random_rational(rng, bound), m = random_rational(rng, bound);
                if (i == j) {
                    if (epsilon == -1) t = 0;
                    if (epsilon == 1) m = 0;
                }
                theta(i, j) = t;
                theta(j, i) = epsilon * t;
                M(i, j) = m;
                M(j, i) = -epsilon * m;
            }
        if (determinant(theta) == 0) continue;
        MatQ A = inverse(theta) * M, I = MatQ::identity(rank);
        if (determinant(I - A) == 0 || determinant(I + A) == 0) continue;
        return make_autometric_form(theta, inverse(I - A) * (I + A), epsilon);
    }
}

SeifertForm random_seifert(std::mt19937_64& rng, size_t rank, int epsilon, long bound, long den_bound)
{
    if (epsilon == -1 && rank % 2) throw ParseError("skew symmetrization needs even rank");
    for (;;) {
        MatQ psi(rank, rank);
        for (size_t i = 0; i < rank; ++i)
            for (size_t j = 0; j < rank; ++j) psi(i, j) = random_rational(rng, bound, den_bound);
        SeifertForm f{psi, epsilon, false};
        if (determinant(f.symmetrized()) != 0) return f;
    }
}

MatQ random_knot_matrix(std::mt19937_64& rng, size_t genus, long bound)
{
    size_t n = 2 * genus;
    MatQ psi(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            BigRat m = random_rational(rng, bound);
            psi(i, j) += m;
            if (i != j) psi(j, i) += m;
        }
    for (size_t k = 0; k < genus; ++k) psi(2 * k, 2 * k + 1) += 1;
    return psi;
}

}  // namespace wittkit
