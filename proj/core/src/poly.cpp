#include "rml/poly.hpp"

namespace rml {

std::string format_monomial(const Exponents& e, const std::string& var_prefix) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += var_prefix + std::to_string(j + 1);
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out;
}

}  // namespace rml
