#pragma once

#include "wittkit/laurent_linking.hpp"

#include <optional>
#include <utility>

namespace wittkit {

struct SeifertForm {
    MatQ psi;
    int epsilon = -1;
    bool integral = false;  // Z coefficients: psi integral, symmetrization unimodular

    size_t rank() const { return psi.rows(); }
    MatQ symmetrized() const;  // psi + eps psi^T
    MatQ e() const;            // symmetrized()^-1 psi
    SeifertForm block_sum(const SeifertForm& o) const;
    SeifertForm negated() const;
};

// Throws SingularSeifertForm.
SeifertForm make_seifert_form(const MatQ& psi, int epsilon, bool integral);

struct AutometricForm {
    MatQ theta;
    MatQ h;
    int epsilon = 1;

    size_t rank() const { return theta.rows(); }
    AutometricForm block_sum(const AutometricForm& o) const;
};

// Throws SingularAutometricForm.
AutometricForm make_autometric_form(const MatQ& theta, const MatQ& h, int epsilon);

// Presentation (1 - e) + e z, pairing -(1 - 1/z) S ((1 - e) + e/z)^-1.
LaurentLinkingForm covering_seifert(const SeifertForm& f);
// Presentation z - h, pairing (1/z) theta (1/z - h)^-1.
LaurentLinkingForm covering_autometric(const AutometricForm& f);

// sum_{r+s=0} a_r (b^+_s - b^-_s) for f = (sum a_r z^r) / den.
BigRat trace_chi(const RatFunc& f);

// Basis z^j f_k of the SNF generators; h is multiplication by z.
AutometricForm monodromy(const LaurentLinkingForm& form);

// Matrix evaluation q(h).
MatQ eval_at_matrix(const Poly& q, const MatQ& h);

// Checks monodromy(cov) against f through the basis change from the SNF
// generators to the standard basis of K = coker(z - h).
bool verify_roundtrip(const AutometricForm& f, const LaurentLinkingForm& cov);
bool verify_roundtrip(const AutometricForm& f);

enum class LagrangianStatus { NotLagrangian, Lagrangian, SplitLagrangian };
const char* to_string(LagrangianStatus s);

// Throws NotEInvariant.
LagrangianStatus verify_seifert_lagrangian(const SeifertForm& f, const MatQ& L);
// [L1 | L2] invertible over the coefficient ring.
bool complementary(const SeifertForm& f, const MatQ& L1, const MatQ& L2);

// (1 1) and ((1 - e) -e) in psi + (-psi).
std::pair<MatQ, MatQ> hyperbolic_witness_sum(const SeifertForm& f);

// Q-dimension of the submodule of the module generated by the columns of
// gens (given in presentation coordinates).
int submodule_dimension(const LaurentModule& m, const MatLaurent& gens);
// Columns of L (Seifert coordinates) span a lagrangian of the covering.
bool covering_lagrangian(const LaurentLinkingForm& cov, const MatQ& L);

struct NearProjectionSplit {
    MatQ plus;   // basis of K+, (1 - e) nilpotent there
    MatQ minus;  // basis of K-, e nilpotent there
};
// Throws NotNearProjection unless e(1 - e) is nilpotent.
NearProjectionSplit near_projection_decompose(const MatQ& e);
bool is_nilpotent(const MatQ& m);

}  // namespace wittkit
