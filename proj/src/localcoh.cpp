#include "tca/localcoh.hpp"

#include <stdexcept>

#include "tca/bott.hpp"

namespace tca {

namespace {

void add_unique(EquivCharacter& ch, const Partition& e, const Partition& v) {
  // λ is part of the key, so two λ can never land on the same cell.
  if (ch.mult(e, v) != 0) throw std::logic_error("derived saturation: repeated (nu, lambda) cell");
  ch.add(e, v, 1);
}

}  // namespace

EquivCharacter derived_saturation(const Partition& mu, int d, int i, int cutoff) {
  if (d < 0) throw std::invalid_argument("derived_saturation: d must be nonnegative");
  if (i < 0) throw std::invalid_argument("derived_saturation: i must be nonnegative");
  EquivCharacter ch(d, cutoff + mu.size());
  for (const Partition& lam : partitions_up_to(cutoff, d)) {
    auto sorted = bott_infinite(as_weight(lam, static_cast<std::size_t>(d)), mu);
    if (sorted && sorted->steps == i) add_unique(ch, lam, sorted->nu);
  }
  return ch;
}

EquivCharacter saturation_closed_form(const Partition& mu, int d, int cutoff) {
  if (d < 0) throw std::invalid_argument("saturation_closed_form: d must be nonnegative");
  EquivCharacter ch(d, cutoff + mu.size());
  for (const Partition& lam : partitions_up_to(cutoff, d)) {
    // For d = 0 there is no λ_d and the condition is empty.
    if (d > 0 && lam[static_cast<std::size_t>(d - 1)] < mu.first()) continue;
    std::vector<int> joined = lam.padded(static_cast<std::size_t>(d));
    joined.insert(joined.end(), mu.parts().begin(), mu.parts().end());
    add_unique(ch, lam, Partition(std::move(joined)));
  }
  return ch;
}

}  // namespace tca
