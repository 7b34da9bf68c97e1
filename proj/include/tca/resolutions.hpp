#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tca/characters.hpp"
#include "tca/partition.hpp"

namespace tca {

/// One summand S_{μ†}(E) ⊗ S_μ(R) of ∧^e(E ⊗ R).
struct XiTerm {
  Partition mu;      // R-side
  Partition e_side;  // μ†, the E-side

  friend bool operator==(const XiTerm&, const XiTerm&) = default;
};

/// ∧^e(E ⊗ R) = ⊕ S_{μ†}(E) ⊗ S_μ(R) over |μ| = e, μ_1 <= dim E, in canonical
/// order of μ.
std::vector<XiTerm> exterior_xi_terms(int e, int dim_e);

/// (ε on E, ν on V) → multiplicity.
using TermList = std::map<std::pair<Partition, Partition>, Integer>;

/// Equivariant Betti table of (S_λ(V) ⊗ A)^{<= n}, A = Sym(E ⊗ V).
///
/// Cell (i, j) is Tor_i in internal degree |λ| + i + j, i.e. the i-th term of
/// the j-th linear strand.  Only i <= i_max is recorded; the table is complete
/// in that range.
struct BettiTable {
  int dim_e = 0;
  int n = 0;
  Partition lam;
  int i_max = 0;
  /// Largest exterior degree swept; covers every cell with i <= i_max.
  int e_max = 0;
  std::map<std::pair<int, int>, TermList> entries;

  /// Empty list for a zero cell.
  const TermList& cell(int i, int j) const;
  /// Largest j with a nonzero cell, or -1 for an empty table.
  int max_strand() const;
};

/// Upper bound on the strand index that holds independently of λ:
/// n · max(0, dim E − 1).  Used as the sweep width.
int strand_sweep_bound(int n, int dim_e);

/// Throws std::invalid_argument if ℓ(λ) > n, n < 1, dim_e < 0 or i_max < 0.
BettiTable betti_table(const Partition& lam, int n, int dim_e, int i_max);

/// 0 if λ_n >= dim E, else n(dim E − λ_n − 1).
int regularity_bound(const Partition& lam, int n, int dim_e);

/// dim E · max(0, dim E − λ_n − 1): Tor is cogenerated in homological degrees
/// up to this value.
int cogeneration_bound(const Partition& lam, int n, int dim_e);

struct RegularityReport {
  int observed = 0;
  int bound = 0;
  /// True when observed == bound, so the observed value is the regularity.
  bool certified = false;
};

RegularityReport regularity_report(const Partition& lam, int n, int dim_e, int i_max);
RegularityReport regularity_report(const BettiTable& table);

/// Row j of the table: element i is cell (i, j) for i = 0..i_max.
std::vector<TermList> linear_strand(const BettiTable& table, int j);

/// Σ_i (−1)^i char(Tor_i) · char(A), truncated at V-degree `cutoff`.  Equals
/// the character of the resolved module when the resolution is exact; needs
/// i_max >= cutoff − |λ|.
EquivCharacter resolution_euler_characteristic(const BettiTable& table, int cutoff);

}  // namespace tca
