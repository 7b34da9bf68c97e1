#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tca/partition.hpp"

namespace tca {

using Integer = mpz_class;

/// Littlewood–Richardson coefficient c^ν_{λμ}: the number of LR skew tableaux
/// of shape ν/λ and content μ.  Memoized; safe to call from several threads.
std::uint64_t lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

/// Expansion of s_λ · s_μ as (ν, c^ν_{λμ}) pairs in canonical order, keeping
/// only ν with at most max_length rows when max_length >= 0.
std::vector<std::pair<Partition, std::uint64_t>> lr_product(const Partition& lam, const Partition& mu,
                                                           int max_length = -1);

/// dim S_λ(C^n) by the hook-content formula.
Integer schur_dimension(const Partition& lam, int n);

/// dim of the irreducible GL_n representation with dominant weight v
/// (entries may be negative).
Integer weyl_dimension(const Weight& v);

/// An element of Λ written in the Schur basis.  No stored coefficient is zero.
class SchurElement {
 public:
  using Terms = std::map<Partition, Integer>;

  SchurElement() = default;
  static SchurElement basis(const Partition& p, const Integer& coeff = 1);
  static SchurElement one() { return basis(Partition{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Partition& p) const;

  /// Adds c·s_p, dropping the term if it cancels.
  void add(const Partition& p, const Integer& c);

  SchurElement& operator+=(const SchurElement& other);
  SchurElement& operator-=(const SchurElement& other);
  SchurElement& operator*=(const Integer& scalar);
  friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
  friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
  friend SchurElement operator-(SchurElement a) { return a *= -1; }
  friend SchurElement operator*(SchurElement a, const Integer& s) { return a *= s; }
  friend bool operator==(const SchurElement&, const SchurElement&) = default;

  /// e.g. "s[2] + s[1,1]", "-3 s[]", "0".
  std::string to_string() const;

 private:
  Terms terms_;
};

SchurElement multiply(const SchurElement& a, const SchurElement& b);
inline SchurElement operator*(const SchurElement& a, const SchurElement& b) { return multiply(a, b); }

/// Linear extension of s_λ ↦ (−1)^{|λ|} s_{λ†}.
SchurElement star(const SchurElement& a);

}  // namespace tca
