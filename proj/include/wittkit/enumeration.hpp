#pragma once

#include "wittkit/linking_finite.hpp"

#include <cstdint>
#include <vector>

namespace wittkit {

// Nondecreasing exponent lists with 1 <= sum <= max_total.
std::vector<std::vector<int>> group_types(int max_total);

// All epsilon-symmetric pairings on sum Z/p^{l_i}, encoded in mixed radix
// over the free entries a_ij in Z/p^{min(l_i, l_j)}.
class FormSpace {
public:
    FormSpace(long p, std::vector<int> levels, int epsilon);

    uint64_t size() const { return size_; }
    size_t rank() const { return levels_.size(); }
    long prime() const { return p_; }
    const std::vector<int>& levels() const { return levels_; }

    // Full numerator matrix over p^L, row-major.
    void decode(uint64_t idx, std::vector<long>& G) const;
    uint64_t encode(const std::vector<long>& G) const;
    FiniteLinkingForm form(uint64_t idx) const;

    // 0 for singular pairings; otherwise 1 + bits of the discriminant
    // classes of the auxiliary forms (one bit per distinct level).
    uint32_t invariant_code(const std::vector<long>& G) const;

    enum class Op { Scale, Swap, Cycle, Transvect };
    struct Gen {
        Op op;
        int i, j;
        long c;
    };
    // Generators of Aut(T) acting by G -> A^T G A.
    const std::vector<Gen>& generators() const { return gens_; }
    void apply(const Gen& g, std::vector<long>& G) const;

private:
    long p_;
    std::vector<int> levels_;
    int eps_;
    int L_;
    long P_;
    std::vector<std::pair<int, int>> free_;
    std::vector<long> radix_, scale_;
    std::vector<int> distinct_;
    uint64_t size_;
    std::vector<Gen> gens_;
};

// Parallel kernel and its serial reference: invariant code of every pairing.
std::vector<uint32_t> invariant_codes(const FormSpace& s);
std::vector<uint32_t> invariant_codes_serial(const FormSpace& s);

struct OrbitSummary {
    uint64_t rep;
    uint32_t code;
    uint64_t size;
};

struct TypeReport {
    long p;
    std::vector<int> levels;
    uint64_t pairings = 0;
    uint64_t nonsingular = 0;
    std::vector<OrbitSummary> orbits;
    uint64_t code_changes_in_orbit = 0;  // invariants not constant on an orbit
    uint64_t codes_split_over_orbits = 0;  // same invariants, different orbits
    uint64_t oracle_disagreements = 0;
    uint64_t oracle_calls = 0;
};

// Orbits of nonsingular pairings under Aut(T); classify vs oracle on each
// orbit representative.
TypeReport analyze_type(long p, const std::vector<int>& levels, int epsilon, bool parallel,
                        long bound = 10000);

struct DevissageReport {
    uint64_t forms = 0;
    uint64_t witt_metabolic = 0;
    uint64_t oracle_metabolic = 0;
};

// Every nonsingular homogeneous pairing at the given level and rank.
DevissageReport devissage_check(long p, int level, int rank_, bool parallel, long bound = 10000);

}  // namespace wittkit
