#pragma once

#include "wittkit/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittkit {

// p-primary linking form on the group with independent generators e_i of
// order p^{orders[i]}. gram[i][j] = lambda(e_i, e_j) in [0, 1).
struct FiniteLinkingForm {
    long p = 3;
    std::vector<int> orders;
    MatQ gram;
    int epsilon = 1;

    size_t rank() const { return orders.size(); }
    int max_level() const;
    BigInt group_order() const;
    // Throws ParseError / SingularForm on malformed or degenerate data.
    void validate() const;
    bool is_nonsingular() const;
    FiniteLinkingForm direct_sum(const FiniteLinkingForm& o) const;
    FiniteLinkingForm negated() const;
    // Gram numerators over p^max_level, as machine integers.
    std::vector<std::vector<long>> numerators() const;
};

// Form on a finite abelian group given by arbitrary cyclic orders.
struct MixedLinkingForm {
    std::vector<BigInt> orders;
    MatQ gram;
    int epsilon = 1;
};

MixedLinkingForm to_mixed(const FiniteLinkingForm& f);
std::map<long, FiniteLinkingForm> primary_decompose(const MixedLinkingForm& f);
// Prime factors of n with exponents, by trial division.
std::vector<std::pair<long, int>> factor_integer(const BigInt& n);

struct HomogeneousPiece {
    int level;
    FiniteLinkingForm form;
    MatZ basis;  // columns: generators in the coordinates of the input
};
std::vector<HomogeneousPiece> homogeneous_split(const FiniteLinkingForm& f);

std::map<int, int> auxiliary_modules(const FiniteLinkingForm& f);

struct AuxiliaryFormFp {
    long p;
    int level;
    std::vector<std::vector<long>> gram;
    long symmetry;  // v with gram = v * gram^T
};
AuxiliaryFormFp auxiliary_form(const FiniteLinkingForm& f, int level);

struct WittClassFp {
    long p = 3;
    int rank_mod_2 = 0;
    int disc = 1;  // +1 square, -1 non-square signed discriminant

    bool is_zero() const { return rank_mod_2 == 0 && disc == 1; }
    WittClassFp operator+(const WittClassFp& o) const;
    bool operator==(const WittClassFp& o) const
    {
        return p == o.p && rank_mod_2 == o.rank_mod_2 && disc == o.disc;
    }
    bool operator!=(const WittClassFp& o) const { return !(*this == o); }
    std::string name() const;
};

WittClassFp witt_class_fp(const std::vector<std::vector<long>>& gram, long v, long p);
// Isomorphism invariants over F_p: rank and discriminant class (symmetric),
// rank only (skew, disc reported as +1).
std::pair<int, int> iso_invariants_fp(const std::vector<std::vector<long>>& gram, long v, long p);

using DWMultiSignatureZ = std::map<std::pair<long, int>, WittClassFp>;
DWMultiSignatureZ dw_multisignature(const MixedLinkingForm& f);
DWMultiSignatureZ dw_multisignature(const FiniteLinkingForm& f);
std::map<long, WittClassFp> forgetful_witt(const DWMultiSignatureZ& ms);
DWMultiSignatureZ multisignature_sum(const DWMultiSignatureZ& a, const DWMultiSignatureZ& b);

enum class Question { Metabolic, Hyperbolic };
bool classify(const MixedLinkingForm& f, Question q);
bool classify(const FiniteLinkingForm& f, Question q);
bool classify_multisignature(const DWMultiSignatureZ& ms, Question q);

// Boundary of a nondegenerate integer form: linking form on coker(alpha).
struct BoundaryForm {
    MixedLinkingForm form;
    MatZ to_coker;  // rows for nontrivial summands: x in Z^n |-> coordinates
};
BoundaryForm boundary_of_form(const MatZ& alpha, int epsilon);
bool verify_boundary_complementary(const MatZ& alpha, const MatZ& lplus, const MatZ& lminus);

// Subgroup of a p-primary group spanned by the columns of gens.
BigInt subgroup_order(const std::vector<int>& orders, long p, const MatZ& gens);
bool is_lagrangian(const FiniteLinkingForm& f, const MatZ& gens);

}  // namespace wittkit
