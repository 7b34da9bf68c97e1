#pragma once

#include <string>
#include <vector>

namespace tca {

/// Krull dimension of the total Grassmannian Gr(C^d): binom(d + 1, 2).
int krull_dimension(int d);

/// A member Z_{r,i} of the explicit maximal chain, or the whole space Gr(E).
///
/// Fix a complete flag 0 = V_0 ⊂ V_1 ⊂ … ⊂ V_d = E.  Z_{r,i} is the closure
/// of the locus of r-dimensional subspaces of V_{r+1} containing V_{r−i},
/// read as quotients of E, so it sits in Gr_{d−r}(E).
struct ChainLabel {
  int r = 0;
  int i = 0;
  bool whole_space = false;

  std::string to_string() const;
  /// One-line description of the subvariety.
  std::string describe() const;

  friend bool operator==(const ChainLabel&, const ChainLabel&) = default;
  friend auto operator<=>(const ChainLabel&, const ChainLabel&) = default;
};

/// Z_{0,0} ⊂ Z_{1,0} ⊂ Z_{1,1} ⊂ Z_{2,0} ⊂ … ⊂ Z_{d−1,d−1} ⊂ Gr(E).
/// binom(d+1, 2) + 1 members; requires d >= 1.
std::vector<ChainLabel> maximal_chain(int d);

/// Number of strict inclusions in a chain.
inline int chain_length(const std::vector<ChainLabel>& chain) {
  return chain.empty() ? 0 : static_cast<int>(chain.size()) - 1;
}

}  // namespace tca
