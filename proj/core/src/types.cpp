#include "csalign/types.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace csalign {

void validate_system(const ConceptualSystem& system) {
  if (system.labels.size() != system.vectors.rows()) {
    throw std::invalid_argument("system has " + std::to_string(system.labels.size()) +
                                " labels but " + std::to_string(system.vectors.rows()) +
                                " vectors");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& label : system.labels) {
    if (label.empty()) throw std::invalid_argument("system contains an empty label");
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate concept label: " + label);
    }
  }
  if (!system.vectors.all_finite()) {
    throw std::invalid_argument("system contains a non-finite vector entry");
  }
}

ConceptualSystem select_concepts(const ConceptualSystem& system, std::span<const int> rows) {
  ConceptualSystem out;
  out.labels.reserve(rows.size());
  out.vectors = Matrix(rows.size(), system.dim());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::size_t r = static_cast<std::size_t>(rows[k]);
    if (r >= system.size()) {
      throw std::invalid_argument("concept row " + std::to_string(rows[k]) + " out of range");
    }
    out.labels.push_back(system.labels[r]);
    auto src = system.vectors.row(r);
    auto dst = out.vectors.row(k);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

}  // namespace csalign
