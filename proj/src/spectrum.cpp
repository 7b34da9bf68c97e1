#include "tca/spectrum.hpp"

#include <stdexcept>

namespace tca {

int krull_dimension(int d) {
  if (d < 0) throw std::invalid_argument("krull_dimension: d must be nonnegative");
  return d * (d + 1) / 2;
}

std::string ChainLabel::to_string() const {
  if (whole_space) return "Gr(E)";
  return "Z_{" + std::to_string(r) + "," + std::to_string(i) + "}";
}

std::string ChainLabel::describe() const {
  if (whole_space) return "the whole total Grassmannian";
  return "closure of {" + std::to_string(r) + "-dim subspaces W : V_" + std::to_string(r - i) + " ⊆ W ⊆ V_" +
         std::to_string(r + 1) + "} as quotients E/W";
}

std::vector<ChainLabel> maximal_chain(int d) {
  if (d < 1) throw std::invalid_argument("maximal_chain: d must be at least 1");
  std::vector<ChainLabel> chain;
  for (int r = 0; r < d; ++r)
    for (int i = 0; i <= r; ++i) chain.push_back({r, i, false});
  chain.push_back({d, d, true});
  return chain;
}

}  // namespace tca
