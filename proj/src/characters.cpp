#include "tca/characters.hpp"

#include <stdexcept>
#include <string>

#include "tca/bott.hpp"

namespace tca {

EquivCharacter::EquivCharacter(int d, int cutoff, bool dual_e) : d_(d), cutoff_(cutoff), dual_e_(dual_e) {
  if (d < 0) throw std::invalid_argument("character rank d must be nonnegative");
  if (cutoff < 0) throw std::invalid_argument("character cutoff must be nonnegative");
}

Integer EquivCharacter::mult(const Partition& e, const Partition& v) const {
  auto it = terms_.find({e, v});
  return it == terms_.end() ? Integer(0) : it->second;
}

void EquivCharacter::add(const Partition& e, const Partition& v, const Integer& m) {
  if (e.length() > d_)
    throw std::invalid_argument("E-partition " + e.to_string() + " has more than " + std::to_string(d_) + " rows");
  if (v.size() > cutoff_)
    throw std::invalid_argument("V-partition " + v.to_string() + " exceeds cutoff " + std::to_string(cutoff_));
  if (m == 0) return;
  auto [it, inserted] = terms_.try_emplace({e, v}, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

EquivCharacter& EquivCharacter::operator+=(const EquivCharacter& other) {
  for (const auto& [k, m] : other.terms_) add(k.first, k.second, m);
  return *this;
}

EquivCharacter& EquivCharacter::operator-=(const EquivCharacter& other) {
  for (const auto& [k, m] : other.terms_) add(k.first, k.second, -m);
  return *this;
}

EquivCharacter& EquivCharacter::operator*=(const Integer& scalar) {
  if (scalar == 0) terms_.clear();
  for (auto& [k, m] : terms_) m *= scalar;
  return *this;
}

EquivCharacter EquivCharacter::truncated(int cutoff) const {
  EquivCharacter out(d_, std::min(cutoff, cutoff_), dual_e_);
  for (const auto& [k, m] : terms_)
    if (k.second.size() <= out.cutoff_) out.terms_.emplace(k, m);
  return out;
}

namespace {

struct ProductTerm {
  Partition outer;  // constituent of S_λ ⊗ S_ν
  Partition inner;  // ν
  std::uint64_t mult;
};

// ⊕_ν S_λ ⊗ S_ν ⊗ S_ν', i.e. the terms c^ε_{λν} (ε, ν) with ℓ(ε) <= outer_rows,
// ℓ(ν) <= inner_rows and |ν| <= inner_max_size.  Shared by K_{r,λ} and by
// the row-truncated free modules (the same module with E and V exchanged).
std::vector<ProductTerm> truncated_products(const Partition& lam, int outer_rows, int inner_rows, int inner_max_size) {
  std::vector<ProductTerm> out;
  if (inner_max_size < 0) return out;
  for (const Partition& nu : partitions_up_to(inner_max_size, inner_rows))
    for (auto& [eps, c] : lr_product(lam, nu, outer_rows)) out.push_back({eps, nu, c});
  return out;
}

Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

}  // namespace

EquivCharacter cauchy_A(int d, int cutoff) {
  EquivCharacter ch(d, cutoff);
  for (const Partition& lam : partitions_up_to(cutoff, d)) ch.add(lam, lam, 1);
  return ch;
}

EquivCharacter k_module_character(int r, const Partition& lam, int d, int cutoff) {
  if (r < 0 || r > d) throw std::invalid_argument("k_module_character: need 0 <= r <= d");
  if (lam.length() > r) throw std::invalid_argument("k_module_character: lambda has more than r rows");
  EquivCharacter ch(d, cutoff);
  for (const auto& t : truncated_products(lam, r, d, cutoff)) ch.add(t.outer, t.inner, to_integer(t.mult));
  return ch;
}

EquivCharacter k_module_character_bwb(int r, const Partition& lam, int d, int cutoff) {
  if (r < 0 || r > d) throw std::invalid_argument("k_module_character_bwb: need 0 <= r <= d");
  if (lam.length() > r) throw std::invalid_argument("k_module_character_bwb: lambda has more than r rows");
  EquivCharacter ch(d, cutoff);
  const Weight zeros(std::vector<int>(static_cast<std::size_t>(d - r), 0));
  // S_ν(Q) vanishes once ℓ(ν) > r = rank Q.
  for (const Partition& nu : partitions_up_to(cutoff, r)) {
    for (const auto& [eps, c] : lr_product(lam, nu, r)) {
      auto h = bwb_pushforward(as_weight(eps, static_cast<std::size_t>(r)), zeros, d);
      if (!h) continue;
      if (h->degree != 0) throw std::logic_error("higher cohomology of a dominant bundle on a Grassmannian");
      ch.add(Partition(h->gamma.entries), nu, to_integer(c));
    }
  }
  return ch;
}

EquivCharacter torsion_injective_character(const Partition& lam, int d, int cutoff) {
  EquivCharacter ch(d, cutoff, /*dual_e=*/true);
  // c^λ_{αβ} is nonzero only for α, β ⊆ λ.
  for (const Partition& beta : partitions_up_to(std::min(cutoff, lam.size()))) {
    if (!lam.contains(beta)) continue;
    for (const Partition& alpha : partitions_of(lam.size() - beta.size(), d)) {
      if (auto c = lr_coefficient(alpha, beta, lam)) ch.add(alpha, beta, to_integer(c));
    }
  }
  return ch;
}

EquivCharacter truncated_free_character(const Partition& lam, int n, int dim_e, int cutoff) {
  if (lam.length() > n) throw std::invalid_argument("truncated_free_character: lambda has more than n rows");
  EquivCharacter ch(dim_e, cutoff);
  for (const auto& t : truncated_products(lam, n, dim_e, cutoff - lam.size()))
    ch.add(/*E=*/t.inner, /*V=*/t.outer, to_integer(t.mult));
  return ch;
}

EquivCharacter character_product(const EquivCharacter& a, const EquivCharacter& b) {
  if (a.d() != b.d() || a.dual_e() != b.dual_e())
    throw std::invalid_argument("character_product: factors live over different E");
  EquivCharacter out(a.d(), std::min(a.cutoff(), b.cutoff()), a.dual_e());
  for (const auto& [ka, ma] : a.terms()) {
    for (const auto& [kb, mb] : b.terms()) {
      if (ka.second.size() + kb.second.size() > out.cutoff()) continue;
      const auto e_side = lr_product(ka.first, kb.first, a.d());
      if (e_side.empty()) continue;
      const auto v_side = lr_product(ka.second, kb.second);
      const Integer m = ma * mb;
      for (const auto& [e, ce] : e_side)
        for (const auto& [v, cv] : v_side) out.add(e, v, m * to_integer(ce) * to_integer(cv));
    }
  }
  return out;
}

std::vector<Integer> dimension_series(const EquivCharacter& ch, int N) {
  if (N < 0) throw std::invalid_argument("dimension_series: N must be nonnegative");
  std::vector<Integer> series(static_cast<std::size_t>(ch.cutoff()) + 1, 0);
  for (const auto& [k, m] : ch.terms())
    series[static_cast<std::size_t>(k.second.size())] += m * schur_dimension(k.first, ch.d()) * schur_dimension(k.second, N);
  return series;
}

}  // namespace tca
