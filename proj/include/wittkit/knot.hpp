#pragma once

#include "wittkit/factor.hpp"
#include "wittkit/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wittkit {

struct KnotInput {
    std::string name;
    MatQ psi;  // integral
    int epsilon = -1;
    std::optional<int> dimension_hint;  // odd n = 2k + 1, eps = (-1)^(k+1)

    size_t rank() const { return psi.rows(); }
};

// Validates shape, integrality, epsilon and the hint (ParseError) and
// unimodularity of psi + eps psi^T (NotAKnotForm).
KnotInput make_knot_input(const std::string& name, const MatQ& psi, int epsilon,
                          std::optional<int> dimension_hint = std::nullopt);

SeifertForm seifert_form(const KnotInput& k);

// det((1 - e) + e z), primitive, lowest degree 0, positive leading term.
LaurentPoly alexander_polynomial(const KnotInput& k);

LaurentLinkingForm blanchfield_form(const KnotInput& k);

// Signature of the hermitian matrix
//   eps = -1:  (1 - w) psi + (1 - conj w) psi^T
//   eps = +1:  i ((1 - w) psi - (1 - conj w) psi^T)
// at the rational point w = ((1 - s^2) + 2 i s) / (1 + s^2).
int levine_tristram_at_point(const MatQ& psi, int epsilon, const BigRat& s);

// Same at w = exp(2 pi i turn). Throws SingularAtRoot when w is a root of
// the Alexander polynomial or w = 1.
int levine_tristram_signature(const KnotInput& k, const BigRat& turn,
                              const BigRat& precision = default_precision());

struct SignatureJump {
    CertifiedRoot root;
    int before = 0;  // just below theta
    int after = 0;   // just above theta
    int jump() const { return after - before; }
};
// Jumps at the unit-circle Alexander roots with 0 < theta < pi.
std::vector<SignatureJump> levine_tristram_jumps(const KnotInput& k,
                                                 const BigRat& precision = default_precision());

// Some odd-level sum nonzero.
bool slice_obstructed(const DWMultiSignatureLaurent& ms);
// Some signature nonzero, any level.
bool doubly_slice_obstructed(const DWMultiSignatureLaurent& ms);
bool slice_obstruction(const KnotInput& k, const BigRat& precision = default_precision());
bool doubly_slice_obstruction(const KnotInput& k, const BigRat& precision = default_precision());

// (signature(psi + psi^T) / 8) mod 2. Throws NotSymmetricCase for eps = -1
// and SignatureNotDivisibleBy8.
int rochlin_invariant(const KnotInput& k);

// Throws MixedSymmetry.
KnotInput connected_sum(const KnotInput& a, const KnotInput& b);
// Seifert matrix -psi.
KnotInput concordance_inverse(const KnotInput& k);

struct HyperbolicWitnesses {
    size_t split_index = 0;  // psi = A + (-A) with A of this size
    MatQ first, second;
    LagrangianStatus first_status = LagrangianStatus::NotLagrangian;
    LagrangianStatus second_status = LagrangianStatus::NotLagrangian;
    bool complementary = false;
    bool verified() const;
};
// Witnesses for a Seifert matrix of the block form A + (-A).
std::optional<HyperbolicWitnesses> mirror_witnesses(const KnotInput& k);

struct ObstructionReport {
    std::string name;
    int epsilon = -1;
    std::optional<int> dimension_hint;
    LaurentPoly alexander;
    Factorization factorization;
    DWMultiSignatureLaurent multisignature;
    std::vector<ForgetfulEntry> forgetful;
    std::vector<SignatureJump> lt_jumps;
    bool slice_obstructed = false;
    bool doubly_slice_obstructed = false;
    std::optional<int> rochlin;
    std::optional<HyperbolicWitnesses> witnesses;
    std::vector<std::string> notes;
    BigRat precision;
};

ObstructionReport analyze(const KnotInput& k, const BigRat& precision = default_precision());

}  // namespace wittkit
