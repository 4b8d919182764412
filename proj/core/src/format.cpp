#include "hyperzeta/format.hpp"

namespace hyperzeta {

std::string format_terms(const std::vector<std::pair<CycScalar, std::string>>& terms) {
  std::string out;
  bool first = true;
  for (const auto& [coeff, mono] : terms) {
    if (coeff.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (coeff.is_rational()) {
      Rat r = coeff.to_rational();
      negative = sgn(r) < 0;
      if (negative) r = -r;
      if (r == 1 && !mono.empty())
        body = mono;
      else
        body = to_string(r) + (mono.empty() ? "" : " " + mono);
    } else {
      body = "(" + coeff.to_string() + ")" + (mono.empty() ? "" : " " + mono);
    }
    if (first)
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace hyperzeta
