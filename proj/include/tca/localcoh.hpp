#pragma once

#include "tca/characters.hpp"
#include "tca/partition.hpp"

namespace tca {

// Derived saturation of the generic simples S_μ(K).
//
// Both functions enumerate E-partitions λ with ℓ(λ) <= d and |λ| <= cutoff.
// Every V-partition produced has size |λ| + |μ|, so the returned characters
// carry the V-degree cutoff cutoff + |μ| and are complete up to it.

/// R^i S(S_μ(K)) = ⊕ S_ν(V) ⊗ S_λ(E) over λ with [λ, μ] → ν in exactly i
/// steps of Bott's algorithm.  All multiplicities are 1.
EquivCharacter derived_saturation(const Partition& mu, int d, int i, int cutoff);

/// S(S_μ(K)) = ⊕_{λ_d >= μ_1} S_{[λ,μ]}(V) ⊗ S_λ(E), enumerated directly.
EquivCharacter saturation_closed_form(const Partition& mu, int d, int cutoff);

}  // namespace tca
