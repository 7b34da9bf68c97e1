#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tca/partition.hpp"

namespace tca {

/// Outcome of Bott's algorithm when it does not vanish: the weakly decreasing
/// weight γ = σ•v and the number of adjacent swaps ℓ(σ).
struct BottSorted {
  Weight gamma;
  int steps = 0;

  friend bool operator==(const BottSorted&, const BottSorted&) = default;
};

/// std::nullopt means the weight is singular (v + ρ has a repeated entry).
using BottResult = std::optional<BottSorted>;

/// Bott's algorithm on a finite weight with ρ = (d−1, …, 1, 0).
BottResult bott_sort(const Weight& v);

/// The non-vanishing derived pushforward R^j π_* (S_α(Q) ⊗ S_β(R)) from
/// Gr_r(C^d) to a point: R^degree π_* = S_gamma(C^d), everything else zero.
struct Pushforward {
  int degree = 0;
  Weight gamma;

  friend bool operator==(const Pushforward&, const Pushforward&) = default;
};

/// Borel–Weil–Bott on the Grassmannian of rank-r quotients of C^d, where
/// r = alpha.length().  Both weights must be dominant (negative entries are
/// allowed).  Throws std::invalid_argument if r > d, if the lengths do not add
/// up to d, or if a weight is not dominant.
std::optional<Pushforward> bwb_pushforward(const Weight& alpha, const Weight& beta, int d);

/// Result of Bott's algorithm on an eventually-zero weight.
struct InfiniteBottSorted {
  Partition nu;
  int steps = 0;

  friend bool operator==(const InfiniteBottSorted&, const InfiniteBottSorted&) = default;
};

/// Default finite window used for (head, μ, 0, 0, …):
/// n + ℓ(μ) + max(0, max head) + n, enlarged by max(0, −min head) so that a
/// negative head entry can always meet the zero tail it collides with.
std::size_t infinite_window(const Weight& head, const Partition& mu);

/// Bott's algorithm for (head_1, …, head_n, μ_1, μ_2, …, 0, 0, …) with
/// ρ = (0, −1, −2, …), evaluated on a finite window.
std::optional<InfiniteBottSorted> bott_infinite(const Weight& head, const Partition& mu);

/// Same computation on an explicit window length (must cover head and μ).
std::optional<InfiniteBottSorted> bott_infinite(const Weight& head, const Partition& mu, std::size_t window);

}  // namespace tca
