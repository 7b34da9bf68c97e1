#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tca {

/// Raised when a partition or weight literal cannot be parsed.  The message
/// names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers (trailing zeros are
/// trimmed on construction, so equal partitions compare equal).
///
/// Ordering is the canonical one used for every table and serialization in
/// the library: ascending by size, and within a fixed size descending in
/// lexicographic order, e.g. [3] < [2,1] < [1,1,1].
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument if the sequence is not weakly decreasing or
  /// has a negative entry.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  /// 0-based part access; zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// The parts padded with zeros to length n (n must be >= length()).
  std::vector<int> padded(std::size_t n) const;

  /// True if this diagram contains `other` as a subdiagram.
  bool contains(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition transpose(const Partition& p);

/// ℓ(p) <= rows and p_1 <= cols.
bool fits_rectangle(const Partition& p, int rows, int cols);

/// Partitions of n with at most max_length parts, each at most max_part.
/// Negative bounds mean "unbounded".  Returned in canonical order.
std::vector<Partition> partitions_of(int n, int max_length = -1, int max_part = -1);

/// Partitions of size 0..max_size with the same bounds, in canonical order.
std::vector<Partition> partitions_up_to(int max_size, int max_length = -1, int max_part = -1);

/// All partitions inside the rows x cols rectangle, in canonical order.
std::vector<Partition> partitions_in_rectangle(int rows, int cols);

/// Parses `[3,1,1]` or `[]`.
Partition parse_partition(std::string_view text);

/// A finite integer sequence of declared length; entries of any sign, any order.
struct Weight {
  std::vector<int> entries;

  Weight() = default;
  explicit Weight(std::vector<int> e) : entries(std::move(e)) {}
  Weight(std::initializer_list<int> e) : entries(e) {}

  std::size_t length() const { return entries.size(); }
  bool is_dominant() const;
  std::string to_string() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Parses `[0,-2,3]`.
Weight parse_weight(std::string_view text);

/// The weight of a partition padded with zeros to length n.
Weight as_weight(const Partition& p, std::size_t n);

/// (−v_last, …, −v_first): S_v(W*) ≅ S_{dual(v)}(W) for any vector bundle W.
Weight dual(const Weight& v);

/// A weight followed by a partition and then zeros forever:
/// (h_1, …, h_n, μ_1, μ_2, …, 0, 0, …).
struct WeightWithTail {
  Weight head;
  Partition tail;

  /// head.length() + ℓ(tail): the part of the sequence that is not
  /// identically zero by construction.
  std::size_t window() const { return head.length() + static_cast<std::size_t>(tail.length()); }

  /// Entry at 0-based position i of the infinite sequence.
  int at(std::size_t i) const;

  /// The first `len` entries.
  std::vector<int> truncate(std::size_t len) const;
};

WeightWithTail concat_weight(const Weight& head, const Partition& mu);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace tca
