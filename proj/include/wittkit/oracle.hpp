#pragma once

#include "wittkit/linking_finite.hpp"

namespace wittkit {

enum class OracleMode { Any, Split, ComplementaryPair };

struct OracleResult {
    OracleMode mode;
    // Any/Split: one basis per witness. ComplementaryPair: two bases.
    std::vector<MatZ> witnesses;
    bool found = false;
    bool exhausted = true;
    size_t lagrangian_count = 0;
};

constexpr long kDefaultSearchBound = 10000;

// Exhaustive search over isotropic subgroups. The parallel and serial
// versions return identical results.
OracleResult brute_force_lagrangians(const FiniteLinkingForm& f, OracleMode mode,
                                     long bound = kDefaultSearchBound);
OracleResult brute_force_lagrangians_serial(const FiniteLinkingForm& f, OracleMode mode,
                                            long bound = kDefaultSearchBound);

// All lagrangians, as sorted element index sets; exposed for tests.
std::vector<std::vector<int>> enumerate_lagrangians(const FiniteLinkingForm& f, bool parallel,
                                                    long bound = kDefaultSearchBound);

// Backtracking search for an isometry f -> g.
bool brute_force_isomorphic(const FiniteLinkingForm& f, const FiniteLinkingForm& g,
                            long bound = kDefaultSearchBound);

}  // namespace wittkit
