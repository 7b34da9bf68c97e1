#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tca/partition.hpp"
#include "tca/schur.hpp"

namespace tca {

/// Multiplicities of S_α(E) ⊗ S_β(V) in a GL(E) × GL(V) representation,
/// exact for V-degree |β| <= cutoff and silent beyond it.
///
/// When dual_e() is set the E-slot is read as a partition on E* (the torsion
/// injectives); the flag only affects rendering.
class EquivCharacter {
 public:
  /// (E-partition, V-partition)
  using Key = std::pair<Partition, Partition>;
  using Terms = std::map<Key, Integer>;

  EquivCharacter(int d, int cutoff, bool dual_e = false);

  int d() const { return d_; }
  int cutoff() const { return cutoff_; }
  bool dual_e() const { return dual_e_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer mult(const Partition& e, const Partition& v) const;

  /// Throws std::invalid_argument if ℓ(e) > d or |v| > cutoff.
  void add(const Partition& e, const Partition& v, const Integer& m);

  EquivCharacter& operator+=(const EquivCharacter& other);
  EquivCharacter& operator-=(const EquivCharacter& other);
  EquivCharacter& operator*=(const Integer& scalar);

  /// Same terms, lower cutoff.
  EquivCharacter truncated(int cutoff) const;

  friend bool operator==(const EquivCharacter&, const EquivCharacter&) = default;

 private:
  int d_;
  int cutoff_;
  bool dual_e_;
  Terms terms_;
};

/// A = Sym(E ⊗ V) = ⊕ S_λ(E) ⊗ S_λ(V) over ℓ(λ) <= d.
EquivCharacter cauchy_A(int d, int cutoff);

/// K_{r,λ}: the quotient of S_λ(E) ⊗ A by the E-constituents with more than r
/// rows.  Requires ℓ(λ) <= r <= d.
EquivCharacter k_module_character(int r, const Partition& lam, int d, int cutoff);

/// K_{r,λ} computed as ⊕_ν H^0(Gr_r(C^d), S_λ(Q) ⊗ S_ν(Q)) ⊗ S_ν(V) via
/// Borel–Weil–Bott.  Agrees with k_module_character.
EquivCharacter k_module_character_bwb(int r, const Partition& lam, int d, int cutoff);

/// J_λ = S_λ(E* ⊕ V) = ⊕ c^λ_{αβ} S_α(E*) ⊗ S_β(V).
EquivCharacter torsion_injective_character(const Partition& lam, int d, int cutoff);

/// (S_λ(V) ⊗ A)^{<= n}: the quotient of S_λ(V) ⊗ A by all V-constituents with
/// more than n rows.  This is k_module_character with the roles of E and V
/// exchanged.  Requires ℓ(λ) <= n.
EquivCharacter truncated_free_character(const Partition& lam, int n, int dim_e, int cutoff);

/// Product of characters, LR-multiplying the E-sides and the V-sides
/// separately.  Both factors must share d and the dual flag; the result keeps
/// the smaller cutoff.
EquivCharacter character_product(const EquivCharacter& a, const EquivCharacter& b);

/// Entry n: dim of the V-degree n piece of M(C^N), i.e.
/// Σ_{|β|=n} mult · dim S_α(C^d) · dim S_β(C^N).  Length cutoff + 1.
std::vector<Integer> dimension_series(const EquivCharacter& ch, int N);

}  // namespace tca
