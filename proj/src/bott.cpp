#include "tca/bott.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tca {

BottResult bott_sort(const Weight& v) {
  const auto d = static_cast<int>(v.length());
  std::vector<int> shifted(v.entries);
  for (int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] += d - 1 - i;

  std::vector<int> sorted(shifted);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  // ℓ(σ) is the number of inversions of v + ρ against decreasing order.
  int steps = 0;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    for (std::size_t j = i + 1; j < shifted.size(); ++j)
      if (shifted[i] < shifted[j]) ++steps;

  BottSorted out;
  out.steps = steps;
  out.gamma.entries.resize(sorted.size());
  for (int i = 0; i < d; ++i)
    out.gamma.entries[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(i)] - (d - 1 - i);
  return out;
}

std::optional<Pushforward> bwb_pushforward(const Weight& alpha, const Weight& beta, int d) {
  const auto r = static_cast<int>(alpha.length());
  if (d < 0 || r > d) throw std::invalid_argument("bwb_pushforward: quotient rank exceeds d");
  if (r + static_cast<int>(beta.length()) != d)
    throw std::invalid_argument("bwb_pushforward: weight lengths must be r and d - r");
  if (!alpha.is_dominant() || !beta.is_dominant())
    throw std::invalid_argument("bwb_pushforward: weights must be weakly decreasing");

  Weight v(alpha.entries);
  v.entries.insert(v.entries.end(), beta.entries.begin(), beta.entries.end());
  auto sorted = bott_sort(v);
  if (!sorted) return std::nullopt;
  return Pushforward{sorted->steps, std::move(sorted->gamma)};
}

std::size_t infinite_window(const Weight& head, const Partition& mu) {
  const std::size_t n = head.length();
  int top = 0;
  int bottom = 0;
  for (int h : head.entries) {
    top = std::max(top, h);
    bottom = std::min(bottom, h);
  }
  const std::size_t window = n + static_cast<std::size_t>(mu.length()) + static_cast<std::size_t>(top) + n +
                             static_cast<std::size_t>(-bottom);
  // An empty head would leave no room for the trailing zero.
  return std::max(window, n + static_cast<std::size_t>(mu.length()) + 1);
}

std::optional<InfiniteBottSorted> bott_infinite(const Weight& head, const Partition& mu) {
  return bott_infinite(head, mu, infinite_window(head, mu));
}

std::optional<InfiniteBottSorted> bott_infinite(const Weight& head, const Partition& mu, std::size_t window) {
  const auto wt = concat_weight(head, mu);
  // One trailing zero beyond head and μ is needed so the sorted weight ends
  // in the zero tail.
  if (window <= wt.window()) throw std::invalid_argument("bott_infinite: window does not cover the weight");
  // ρ = (0, −1, −2, …) differs from (W−1, …, 0) by a constant, which changes
  // neither the repeat test nor the sorting permutation.
  auto sorted = bott_sort(Weight(wt.truncate(window)));
  if (!sorted) return std::nullopt;
  if (sorted->gamma.entries.back() != 0)
    throw std::logic_error("bott_infinite: window too small for this weight");
  return InfiniteBottSorted{Partition(std::move(sorted->gamma.entries)), sorted->steps};
}

}  // namespace tca
