#pragma once

#include "wittkit/knot.hpp"

#include <string>
#include <vector>

namespace wittkit {

struct AnchorResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestOptions {
    int calibration = kSignatureOrientation;  // used by the LT consistency anchor
    BigRat precision = default_precision();
};

// Fixed example suite; one result per anchor, in a fixed order.
std::vector<AnchorResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace wittkit
