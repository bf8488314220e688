#pragma once

#include "wittkit/roots.hpp"

#include <map>
#include <vector>

namespace wittkit {

enum class TorsionMode { P, Q };

// coker of a square presentation over Q[z,z^-1], acting on columns.
struct LaurentModule {
    MatLaurent presentation;
    TorsionMode mode = TorsionMode::Q;
    // SNF of the z-cleared presentation: U * (z^k A) * V = D.
    MatPoly U, Uinv;
    std::vector<size_t> kept;    // SNF slots with a nonunit divisor
    std::vector<Poly> divisors;  // monic, z-free, nonconstant; d_1 | d_2 | ...

    size_t size() const { return divisors.size(); }
    int dimension() const;  // over Q
    // Distinct monic irreducible factors of the top divisor.
    std::vector<Poly> prime_factors() const;
};

LaurentModule decompose_module(const MatLaurent& presentation, TorsionMode mode);

// Exponent of the irreducible p in d.
int poly_valuation(Poly d, const Poly& p);
std::map<int, int> level_multiplicities(const LaurentModule& m, const Poly& p);

// lambda(x, y) = x^T Lambda conj(y) on the standard generators of coker A.
struct LaurentLinkingForm {
    LaurentModule module;
    MatRatFunc input_pairing;  // on the presentation generators
    MatRatFunc pairing;        // on the SNF generators, reduced mod Q[z,z^-1]
    int epsilon = 1;

    LaurentLinkingForm direct_sum(const LaurentLinkingForm& o) const;
    LaurentLinkingForm negated() const;
    bool is_nonsingular() const;
};

// Checks the pairing is well defined and epsilon-hermitian (ParseError
// otherwise) and, when asked, nonsingular (SingularForm).
LaurentLinkingForm make_laurent_form(const MatLaurent& presentation, const MatRatFunc& pairing,
                                     int epsilon, TorsionMode mode, bool require_nonsingular = true);

struct AuxiliaryHermitian {
    Poly factor;
    int level = 0;
    MatPoly raw;         // p^l lambda(g_i, g_j) mod p on the level-l generators
    Poly symmetry;       // s with raw^T = s conj(raw)
    Poly normalizer;     // c with c*raw hermitian; zero when no such c exists
    MatPoly gram;        // c * raw
    bool hermitian() const { return !normalizer.is_zero(); }
    size_t rank() const { return raw.rows(); }
};

// Throws NotSelfConjugate when p is not self-conjugate.
AuxiliaryHermitian auxiliary_hermitian(const LaurentLinkingForm& f, const Poly& p, int level);

// Orientation of the Z summands, fixed by the trefoil calibration.
constexpr int kSignatureOrientation = 1;

struct SignatureEntry {
    Poly factor;
    CertifiedRoot root;
    int level = 0;
    int signature = 0;
};
// Skew forms over a real residue field: rank only.
struct RankEntry {
    Poly factor;
    int level = 0;
    int rank = 0;
};
struct DWMultiSignatureLaurent {
    std::vector<SignatureEntry> entries;  // sorted by (factor, theta, level)
    std::vector<RankEntry> rank_only;
    // Factor pairs p != p*: hyperbolic contribution, no invariant.
    std::vector<std::pair<Poly, Poly>> conjugate_pairs;
    // Self-conjugate factors without unit-circle roots.
    std::vector<Poly> off_circle;
};

DWMultiSignatureLaurent dw_multisignature_laurent(const LaurentLinkingForm& f,
                                                  const BigRat& precision = default_precision());
bool is_hyperbolic_over_R(const LaurentLinkingForm& f);
bool is_hyperbolic_over_R(const DWMultiSignatureLaurent& ms);

struct ForgetfulEntry {
    Poly factor;
    CertifiedRoot root;
    int value = 0;
};
// Sum over odd levels per (factor, root).
std::vector<ForgetfulEntry> witt_forgetful_laurent(const DWMultiSignatureLaurent& ms);

// Same root of the same factor (isolating intervals overlap).
bool same_root(const CertifiedRoot& a, const CertifiedRoot& b);

}  // namespace wittkit
