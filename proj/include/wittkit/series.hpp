#pragma once

#include "wittkit/ratfunc.hpp"

#include <map>

namespace wittkit {

enum class NovikovSide { Plus, Minus };

// Coefficients b_r, lo <= r <= hi, of the expansion of num/den in
// Q[[z]][1/z] (Plus, ascending powers) or Q[[1/z]][z] (Minus).
std::map<int, BigRat> series_expand(const LaurentPoly& num, const LaurentPoly& den,
                                    NovikovSide side, int lo, int hi);
std::map<int, BigRat> series_expand(const RatFunc& f, NovikovSide side, int lo, int hi);

}  // namespace wittkit
