#include "tca/resolutions.hpp"

#include <algorithm>
#include <stdexcept>

#include "tca/bott.hpp"

namespace tca {

std::vector<XiTerm> exterior_xi_terms(int e, int dim_e) {
  std::vector<XiTerm> out;
  for (const Partition& mu : partitions_of(e, -1, dim_e)) out.push_back({mu, transpose(mu)});
  return out;
}

const TermList& BettiTable::cell(int i, int j) const {
  static const TermList empty;
  auto it = entries.find({i, j});
  return it == entries.end() ? empty : it->second;
}

int BettiTable::max_strand() const {
  int top = -1;
  for (const auto& [ij, terms] : entries)
    if (!terms.empty()) top = std::max(top, ij.second);
  return top;
}

int strand_sweep_bound(int n, int dim_e) { return n * std::max(0, dim_e - 1); }

namespace {

int last_row(const Partition& lam, int n) { return lam[static_cast<std::size_t>(n - 1)]; }

}  // namespace

int regularity_bound(const Partition& lam, int n, int dim_e) {
  const int last = last_row(lam, n);
  if (last >= dim_e) return 0;
  return n * (dim_e - last - 1);
}

int cogeneration_bound(const Partition& lam, int n, int dim_e) {
  return dim_e * std::max(0, dim_e - last_row(lam, n) - 1);
}

BettiTable betti_table(const Partition& lam, int n, int dim_e, int i_max) {
  if (n < 1) throw std::invalid_argument("betti_table: n must be at least 1");
  if (lam.length() > n) throw std::invalid_argument("betti_table: lambda has more than n rows");
  if (dim_e < 0) throw std::invalid_argument("betti_table: dimE must be nonnegative");
  if (i_max < 0) throw std::invalid_argument("betti_table: imax must be nonnegative");

  BettiTable table;
  table.dim_e = dim_e;
  table.n = n;
  table.lam = lam;
  table.i_max = i_max;
  table.e_max = i_max + strand_sweep_bound(n, dim_e);

  // F_i = ⊕_j H^j(Gr_n(C^∞), ∧^{i+j}(E ⊗ R) ⊗ S_λ Q) ⊗ A(−i−j).  Each summand
  // S_{μ†}E ⊗ S_λQ ⊗ S_μR has cohomology in at most one degree j, computed by
  // Bott's algorithm on (λ_1, …, λ_n, μ_1, μ_2, …).
  const Weight head = as_weight(lam, static_cast<std::size_t>(n));
  for (int e = 0; e <= table.e_max; ++e) {
    for (const XiTerm& term : exterior_xi_terms(e, dim_e)) {
      auto h = bott_infinite(head, term.mu);
      if (!h) continue;
      const int j = h->steps;
      const int i = e - j;
      if (i < 0) throw std::logic_error("betti_table: cohomological degree exceeds exterior degree");
      if (i > i_max) continue;
      Integer& m = table.entries[{i, j}][{term.e_side, h->nu}];
      m += 1;
    }
  }
  return table;
}

RegularityReport regularity_report(const BettiTable& table) {
  RegularityReport report;
  report.observed = std::max(0, table.max_strand());
  report.bound = regularity_bound(table.lam, table.n, table.dim_e);
  report.certified = report.observed == report.bound;
  return report;
}

RegularityReport regularity_report(const Partition& lam, int n, int dim_e, int i_max) {
  return regularity_report(betti_table(lam, n, dim_e, i_max));
}

std::vector<TermList> linear_strand(const BettiTable& table, int j) {
  std::vector<TermList> strand;
  strand.reserve(static_cast<std::size_t>(table.i_max) + 1);
  for (int i = 0; i <= table.i_max; ++i) strand.push_back(table.cell(i, j));
  return strand;
}

EquivCharacter resolution_euler_characteristic(const BettiTable& table, int cutoff) {
  if (table.i_max < cutoff - table.lam.size())
    throw std::invalid_argument("resolution_euler_characteristic: table does not reach the cutoff");
  EquivCharacter tor(table.dim_e, cutoff);
  for (const auto& [ij, terms] : table.entries) {
    const Integer sign = ij.first % 2 == 0 ? 1 : -1;
    for (const auto& [key, m] : terms)
      if (key.second.size() <= cutoff) tor.add(key.first, key.second, sign * m);
  }
  return character_product(tor, cauchy_A(table.dim_e, cutoff));
}

}  // namespace tca
