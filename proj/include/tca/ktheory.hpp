#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tca/partition.hpp"
#include "tca/schur.hpp"

namespace tca {

using IntMatrix = std::vector<std::vector<Integer>>;

// ---------------------------------------------------------------------------
// K-theory of a single Grassmannian Gr_r(C^d) of rank-r quotients, with
// tautological sequence 0 → R → C^d → Q → 0 (rank Q = r, rank R = d − r).
// ---------------------------------------------------------------------------

/// Partitions λ ⊆ r × (d − r) in canonical order; binom(d, r) of them.
std::vector<Partition> grassmannian_basis(int d, int r);

/// A formal Z-combination of bundles S_a(Q) ⊗ S_b(R) with a ∈ Z^r and
/// b ∈ Z^{d−r} dominant.  Tensor products expand with Littlewood–Richardson
/// for GL_r and GL_{d−r}.
class BundleClass {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (Q-weight, R-weight)

  BundleClass(int d, int r);

  static BundleClass schur_q(int d, int r, const Partition& lam);       // S_λ(Q)
  static BundleClass schur_q_dual(int d, int r, const Partition& lam);  // S_λ(Q*)
  static BundleClass schur_r(int d, int r, const Partition& lam);       // S_λ(R)

  int d() const { return d_; }
  int r() const { return r_; }
  const std::map<Key, Integer>& terms() const { return terms_; }

  /// Throws std::invalid_argument on wrong lengths or non-dominant weights.
  void add(const Weight& q_weight, const Weight& r_weight, const Integer& c);

  BundleClass tensor(const BundleClass& other) const;
  /// The dual bundle: S_a(Q)^∨ = S_{−a reversed}(Q), likewise on R.
  BundleClass dual() const;

  BundleClass& operator+=(const BundleClass& other);
  BundleClass& operator*=(const Integer& scalar);

 private:
  int d_;
  int r_;
  std::map<Key, Integer> terms_;
};

/// χ = Σ_j (−1)^j dim R^j π_*, computed term by term with Borel–Weil–Bott.
Integer euler_characteristic(const BundleClass& bundle);

/// Entry (β, α) = χ(S_α(Q*) ⊗ S_{β†}(R)); rows and columns follow
/// grassmannian_basis(d, r).  Diagonal with entries (−1)^{|α|}.
IntMatrix pairing_matrix(int d, int r);

/// Coordinates of a bundle class in the basis {[S_α(Q*)]}: the α-coordinate
/// is (−1)^{|α|} χ(S_{α†}(R) ⊗ M).
std::vector<Integer> dual_basis_coordinates(const BundleClass& bundle);

/// Column λ holds the {[S_α(Q*)]}-coordinates of [S_λ(Q)].  Unimodular.
IntMatrix schur_q_transition(int d, int r);

/// An element of K(Gr_r(C^d)) ≅ Z^{binom(d,r)}, written in the basis
/// {[S_λ(Q)] : λ ⊆ r × (d − r)} (the classes whose pushforwards against
/// A(Q) are the modules K_{r,λ}).
struct GrKClass {
  int d = 0;
  int r = 0;
  std::vector<Integer> coeffs;  // indexed by grassmannian_basis(d, r)

  static GrKClass zero(int d, int r);
  static GrKClass basis(int d, int r, const Partition& lam);

  friend bool operator==(const GrKClass&, const GrKClass&) = default;
};

BundleClass to_bundle(const GrKClass& c);

/// Re-expands a bundle class in the Schur-of-Q basis.
GrKClass to_gr_class(const BundleClass& bundle);

/// Grothendieck–Serre duality [F] ↦ (−1)^{dim Y} [F^∨ ⊗ ω_Y] on Y = Gr_r(C^d),
/// followed by the identification Gr_r(E) ≅ Gr_{d−r}(E*) (Q ↦ R'*, R ↦ Q'*).
/// The result lives on Gr_{d−r}.  An involution.
GrKClass serre_dual_gr(const GrKClass& c);

// ---------------------------------------------------------------------------
// K(A) ≅ ⊕_r Λ ⊗ K(Gr_r(C^d)).
// ---------------------------------------------------------------------------

/// Σ_r Σ_{λ ⊆ r×(d−r)} a_{r,λ} · [K_{r,λ}] with a_{r,λ} ∈ Λ.  Zero
/// coefficients and empty blocks are never stored.
class KClass {
 public:
  using Block = std::map<Partition, SchurElement>;

  explicit KClass(int d);

  int d() const { return d_; }
  const std::map<int, Block>& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }
  SchurElement coeff(int r, const Partition& lam) const;

  /// Throws std::invalid_argument unless 0 <= r <= d and λ ⊆ r × (d − r).
  void add(int r, const Partition& lam, const SchurElement& a);

  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  /// The Λ-module action.
  KClass& operator*=(const SchurElement& a);

  friend KClass operator+(KClass x, const KClass& y) { return x += y; }
  friend KClass operator-(KClass x, const KClass& y) { return x -= y; }
  friend KClass operator*(const SchurElement& a, KClass x) { return x *= a; }
  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  int d_;
  std::map<int, Block> blocks_;
};

/// Number of Λ-basis cells Σ_r binom(d, r) = 2^d.
std::size_t k_rank(int d);

/// [S_μ(V) ⊗ K_{r,λ}].  Throws if λ is outside the r × (d − r) rectangle.
KClass basis_class(int r, const Partition& lam, const Partition& mu_v, int d);

/// Keeps block r only.
KClass project_block(const KClass& x, int r);

/// Fourier transform on K-theory: star on Λ-coefficients and serre_dual_gr on
/// each block, sending block r to block d − r.  An involution.
KClass fourier(const KClass& x);

}  // namespace tca
