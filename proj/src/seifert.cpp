#include "wittkit/seifert.hpp"

#include "wittkit/series.hpp"
#include "wittkit/snf.hpp"

namespace wittkit {

namespace {

MatLaurent to_laurent(const MatQ& m)
{
    return m.map([](const BigRat& x) { return LaurentPoly(x); });
}

bool all_laurent(const MatRatFunc& m)
{
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_laurent()) return false;
    return true;
}

}  // namespace

MatQ SeifertForm::symmetrized() const { return psi + psi.transpose().scaled(BigRat(epsilon)); }

MatQ SeifertForm::e() const { return inverse(symmetrized()) * psi; }

SeifertForm SeifertForm::block_sum(const SeifertForm& o) const
{
    if (epsilon != o.epsilon) throw MixedSymmetry("block sum of Seifert forms with different symmetry");
    return {psi.block_sum(o.psi), epsilon, integral && o.integral};
}

SeifertForm SeifertForm::negated() const { return {-psi, epsilon, integral}; }

SeifertForm make_seifert_form(const MatQ& psi, int epsilon, bool integral)
{
    if (!psi.is_square()) throw ParseError("Seifert matrix must be square");
    if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    SeifertForm f{psi, epsilon, integral};
    BigRat d = determinant(f.symmetrized());
    if (d == 0) throw SingularSeifertForm("psi + eps psi^T is singular");
    if (integral) {
        if (!is_integral(psi)) throw ParseError("Z-coefficient Seifert matrix has fractional entries");
        if (abs(d) != 1) throw SingularSeifertForm("psi + eps psi^T is not unimodular");
    }
    return f;
}

AutometricForm AutometricForm::block_sum(const AutometricForm& o) const
{
    if (epsilon != o.epsilon) throw MixedSymmetry("block sum of autometric forms with different symmetry");
    return {theta.block_sum(o.theta), h.block_sum(o.h), epsilon};
}

AutometricForm make_autometric_form(const MatQ& theta, const MatQ& h, int epsilon)
{
    if (!theta.is_square() || !h.is_square() || theta.rows() != h.rows())
        throw ParseError("autometric form needs square matrices of equal size");
    if (epsilon != 1 && epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    if (theta.transpose().scaled(BigRat(epsilon)) != theta)
        throw SingularAutometricForm("theta is not epsilon-symmetric");
    if (determinant(theta) == 0) throw SingularAutometricForm("theta is singular");
    if (determinant(h) == 0) throw SingularAutometricForm("h is singular");
    if (h.transpose() * theta * h != theta) throw SingularAutometricForm("h is not an isometry of theta");
    return {theta, h, epsilon};
}

LaurentLinkingForm covering_seifert(const SeifertForm& f)
{
    size_t n = f.rank();
    MatQ e = f.e();
    MatQ one_e = MatQ::identity(n) - e;
    MatLaurent P(n, n);
    MatRatFunc Pbar(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            P(i, j) = LaurentPoly(one_e(i, j)) + LaurentPoly::monomial(e(i, j), 1);
            Pbar(i, j) = RatFunc(LaurentPoly(one_e(i, j)) + LaurentPoly::monomial(e(i, j), -1));
        }
    RatFunc c(LaurentPoly::z(-1) - LaurentPoly(BigRat(1)));  // -(1 - 1/z)
    MatRatFunc L = n ? to_ratfunc(f.symmetrized()).scaled(c) * invert_ratfunc_matrix(Pbar) : MatRatFunc();
    return make_laurent_form(P, L, -f.epsilon, TorsionMode::P);
}

LaurentLinkingForm covering_autometric(const AutometricForm& f)
{
    size_t n = f.rank();
    MatLaurent P(n, n);
    MatRatFunc Q(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            P(i, j) = LaurentPoly(-f.h(i, j));
            Q(i, j) = RatFunc(LaurentPoly(-f.h(i, j)));
        }
    for (size_t i = 0; i < n; ++i) {
        P(i, i) += LaurentPoly::z(1);
        Q(i, i) += RatFunc(LaurentPoly::z(-1));
    }
    MatRatFunc L = n ? to_ratfunc(f.theta).scaled(RatFunc(LaurentPoly::z(-1))) * invert_ratfunc_matrix(Q)
                     : MatRatFunc();
    return make_laurent_form(P, L, -f.epsilon, TorsionMode::Q);
}

BigRat trace_chi(const RatFunc& f)
{
    if (f.is_zero() || f.is_laurent()) return BigRat(0);
    const LaurentPoly& a = f.num();
    LaurentPoly one(BigRat(1)), den = LaurentPoly::from_poly(f.den());
    int lo = -a.max_degree(), hi = -a.min_degree();
    auto bp = series_expand(one, den, NovikovSide::Plus, lo, hi);
    auto bm = series_expand(one, den, NovikovSide::Minus, lo, hi);
    BigRat chi = 0;
    for (const auto& [r, ar] : a.terms()) {
        auto ip = bp.find(-r), im = bm.find(-r);
        BigRat p = ip == bp.end() ? BigRat(0) : ip->second;
        BigRat m = im == bm.end() ? BigRat(0) : im->second;
        chi += ar * (p - m);
    }
    return chi;
}

AutometricForm monodromy(const LaurentLinkingForm& form)
{
    const auto& d = form.module.divisors;
    std::vector<std::pair<size_t, int>> basis;
    for (size_t k = 0; k < d.size(); ++k)
        for (int j = 0; j < d[k].degree(); ++j) basis.push_back({k, j});
    size_t n = basis.size();
    MatQ theta(n, n), h(n, n);
    size_t off = 0;
    for (size_t k = 0; k < d.size(); ++k) {
        int m = d[k].degree();
        for (int j = 0; j + 1 < m; ++j) h(off + j + 1, off + j) = 1;
        for (int i = 0; i < m; ++i) h(off + i, off + m - 1) = -d[k].coeff(i);
        off += m;
    }
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            auto [k, j] = basis[a];
            auto [l, i] = basis[b];
            theta(a, b) = trace_chi(RatFunc(LaurentPoly::z(j - i)) * form.pairing(k, l));
        }
    return make_autometric_form(theta, h, -form.epsilon);
}

MatQ eval_at_matrix(const Poly& q, const MatQ& h)
{
    MatQ r(h.rows(), h.cols());
    for (int k = q.degree(); k >= 0; --k) {
        r = r * h;
        for (size_t i = 0; i < h.rows(); ++i) r(i, i) += q.coeff(k);
    }
    return r;
}

bool verify_roundtrip(const AutometricForm& f, const LaurentLinkingForm& cov)
{
    size_t n = f.rank();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (trace_chi(cov.input_pairing(i, j)) != f.theta(i, j)) return false;

    AutometricForm mono;
    try {
        mono = monodromy(cov);
    } catch (const SingularAutometricForm&) {
        return false;
    }
    if (mono.rank() != n || mono.epsilon != f.epsilon) return false;
    // Column for z^j f_k: h^j sum_i Uinv(i, k)(h) e_i.
    MatQ B(n, n);
    size_t col = 0;
    for (size_t a = 0; a < cov.module.kept.size(); ++a) {
        size_t k = cov.module.kept[a];
        MatQ w(n, 1);
        for (size_t i = 0; i < n; ++i) w += eval_at_matrix(cov.module.Uinv(i, k), f.h).column(i);
        for (int j = 0; j < cov.module.divisors[a].degree(); ++j, ++col) {
            for (size_t i = 0; i < n; ++i) B(i, col) = w(i, 0);
            w = f.h * w;
        }
    }
    if (determinant(B) == 0) return false;
    return B.transpose() * f.theta * B == mono.theta && f.h * B == B * mono.h;
}

bool verify_roundtrip(const AutometricForm& f) { return verify_roundtrip(f, covering_autometric(f)); }

const char* to_string(LagrangianStatus s)
{
    switch (s) {
    case LagrangianStatus::NotLagrangian: return "not_lagrangian";
    case LagrangianStatus::Lagrangian: return "lagrangian";
    case LagrangianStatus::SplitLagrangian: return "split_lagrangian";
    }
    return "";
}

LagrangianStatus verify_seifert_lagrangian(const SeifertForm& f, const MatQ& L)
{
    size_t n = f.rank(), m = L.cols();
    if (L.rows() != n) throw ParseError("submodule basis has the wrong number of rows");
    if (rank(L) != m) throw ParseError("submodule basis must have full column rank");
    if (f.integral && !is_integral(L)) throw ParseError("Z-coefficient submodule basis has fractional entries");
    MatQ X;
    if (m && (!solve(L, f.e() * L, X) || (f.integral && !is_integral(X))))
        throw NotEInvariant("e(L) is not contained in L");
    if (2 * m != n) return LagrangianStatus::NotLagrangian;
    if (!(L.transpose() * f.psi * L).is_zero_matrix()) return LagrangianStatus::NotLagrangian;
    // 0 -> L -> K -> L^* -> 0 via x -> L^T S x: kernel must be exactly L.
    MatQ ker = nullspace(L.transpose() * f.symmetrized());
    if (ker.cols() != m || rank(ker.hstack(L)) != m) return LagrangianStatus::NotLagrangian;
    if (f.integral && m && !smith_all_ones(to_z(L), m)) return LagrangianStatus::Lagrangian;
    return LagrangianStatus::SplitLagrangian;
}

bool complementary(const SeifertForm& f, const MatQ& L1, const MatQ& L2)
{
    if (L1.rows() != f.rank() || L2.rows() != f.rank()) return false;
    MatQ M = L1.hstack(L2);
    if (!M.is_square()) return false;
    if (M.rows() == 0) return true;
    BigRat d = determinant(M);
    if (f.integral) return is_integral(M) && abs(d) == 1;
    return d != 0;
}

std::pair<MatQ, MatQ> hyperbolic_witness_sum(const SeifertForm& f)
{
    size_t n = f.rank();
    MatQ I = MatQ::identity(n), e = f.e();
    return {I.vstack(I), (I - e).vstack(-e)};
}

int submodule_dimension(const LaurentModule& m, const MatLaurent& gens)
{
    size_t r = m.kept.size();
    if (r == 0 || gens.cols() == 0) return 0;
    MatPoly G = clear_negative_powers(gens);
    MatPoly UG = m.U * G;
    MatPoly M(r, r + gens.cols());
    Poly det = Poly::one();
    for (size_t a = 0; a < r; ++a) {
        M(a, a) = m.divisors[a];
        det = det * m.divisors[a];
        for (size_t j = 0; j < gens.cols(); ++j) M(a, r + j) = UG(m.kept[a], j) % m.divisors[a];
    }
    auto s = smith_normal_form(M, &det);
    int quotient = 0;
    for (const auto& d : s.divisors) {
        if (d.is_zero()) throw InternalError("quotient of a torsion module is not torsion");
        int low = d.low_degree();
        quotient += d.degree() - low;
    }
    return m.dimension() - quotient;
}

bool covering_lagrangian(const LaurentLinkingForm& cov, const MatQ& L)
{
    MatLaurent G = to_laurent(L);
    MatRatFunc g = to_ratfunc(L);
    if (!all_laurent(g.transpose() * cov.input_pairing * g)) return false;
    return 2 * submodule_dimension(cov.module, G) == cov.module.dimension();
}

bool is_nilpotent(const MatQ& m)
{
    MatQ p = m;
    for (size_t k = 1; k < m.rows(); ++k) p = p * m;
    return p.is_zero_matrix();
}

NearProjectionSplit near_projection_decompose(const MatQ& e)
{
    if (!e.is_square()) throw ParseError("e must be square");
    size_t n = e.rows();
    MatQ I = MatQ::identity(n);
    if (!is_nilpotent(e * (I - e))) throw NotNearProjection("e(1 - e) is not nilpotent");
    MatQ ek = I, fk = I;
    for (size_t k = 0; k < n; ++k) {
        ek = ek * e;
        fk = fk * (I - e);
    }
    MatQ p = n ? inverse(ek + fk) * ek : MatQ();
    return {column_basis(p), nullspace(p)};
}

}  // namespace wittkit
