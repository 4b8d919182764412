#pragma once

#include "hyperzeta/cyclotomic.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hyperzeta {

/// Joins coefficient/monomial pairs into "2 F K - 1/3 B + (z + 1) E".
/// Rational coefficients print bare with their sign folded into the
/// separator and a unit coefficient omitted; other coefficients print in
/// parentheses. An empty monomial stands for 1. No terms prints "0".
std::string format_terms(const std::vector<std::pair<CycScalar, std::string>>& terms);

}  // namespace hyperzeta
