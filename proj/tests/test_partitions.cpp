#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "oracles.hpp"
#include "tca/partition.hpp"

using tca::Partition;
using tca::Weight;

namespace {

// Number of partitions of n by the Euler recurrence on generalized pentagonals.
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = k % 2 == 1 ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = total;
  }
  return p[static_cast<std::size_t>(n)];
}

// Column lengths counted cell by cell.
Partition transpose_by_columns(const Partition& p) {
  std::vector<int> cols;
  for (int c = 0; c < p.first(); ++c) {
    int len = 0;
    for (int x : p.parts())
      if (x > c) ++len;
    cols.push_back(len);
  }
  return Partition(cols);
}

}  // namespace

TEST_CASE("transpose") {
  CHECK(tca::transpose(Partition{}) == Partition{});
  CHECK(tca::transpose(Partition{3}) == Partition{1, 1, 1});
  CHECK(tca::transpose(Partition{2, 1}) == Partition{2, 1});
  for (const auto& p : tca::partitions_up_to(9)) {
    CHECK(tca::transpose(p) == transpose_by_columns(p));
    CHECK(tca::transpose(tca::transpose(p)) == p);
    CHECK(tca::transpose(p).size() == p.size());
  }
}

TEST_CASE("fits_rectangle") {
  CHECK(tca::fits_rectangle(Partition{}, 0, 0));
  CHECK(tca::fits_rectangle(Partition{}, 5, 2));
  CHECK_FALSE(tca::fits_rectangle(Partition{2, 1}, 1, 3));
  CHECK(tca::fits_rectangle(Partition{3, 3, 1}, 3, 3));
  CHECK_FALSE(tca::fits_rectangle(Partition{4}, 3, 3));
}

TEST_CASE("enumeration counts") {
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<long>(tca::partitions_of(n).size()) == partition_count(n));
  for (int r = 0; r <= 4; ++r)
    for (int c = 0; c <= 4; ++c) {
      const auto box = tca::partitions_in_rectangle(r, c);
      CHECK(mpz_class(static_cast<unsigned long>(box.size())) == oracle::binomial(r + c, r));
      for (const auto& p : box) CHECK(tca::fits_rectangle(p, r, c));
    }
  for (const auto& p : tca::partitions_of(7, 3, 4)) {
    CHECK(p.length() <= 3);
    CHECK(p.first() <= 4);
    CHECK(p.size() == 7);
  }
}

TEST_CASE("canonical order") {
  CHECK(Partition{3} < Partition{2, 1});
  CHECK(Partition{2, 1} < Partition{1, 1, 1});
  CHECK(Partition{1, 1, 1} < Partition{4});
  CHECK(Partition{} < Partition{1});
  const auto all = tca::partitions_up_to(7);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("construction trims zeros and rejects bad sequences") {
  CHECK(Partition{2, 0, 0} == Partition{2});
  CHECK(Partition{2, 0}.length() == 1);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
  const Partition p{3, 1};
  CHECK(p[0] == 3);
  CHECK(p[5] == 0);
  CHECK(p.padded(4) == std::vector<int>{3, 1, 0, 0});
  CHECK(p.contains(Partition{2, 1}));
  CHECK_FALSE(p.contains(Partition{1, 1, 1}));
}

TEST_CASE("literals") {
  CHECK(tca::parse_partition("[3,1,1]") == Partition{3, 1, 1});
  CHECK(tca::parse_partition("[]") == Partition{});
  CHECK(tca::parse_partition(" [ 2 , 1 ] ") == Partition{2, 1});
  CHECK(Partition{3, 1, 1}.to_string() == "[3,1,1]");
  CHECK(Partition{}.to_string() == "[]");
  for (const auto& p : tca::partitions_up_to(6)) CHECK(tca::parse_partition(p.to_string()) == p);

  for (const std::string bad : {"[1,x]", "[1,2]", "3,1", "[1,,2]", "[-1]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(tca::parse_partition(bad), tca::ParseError);
  }
  try {
    tca::parse_partition("[2,abc]");
    FAIL("expected a parse error");
  } catch (const tca::ParseError& e) {
    CHECK(std::string(e.what()).find("abc") != std::string::npos);
  }
  CHECK(tca::parse_weight("[0,-2,3]") == Weight{0, -2, 3});
  CHECK_THROWS_AS(tca::parse_weight("[0,-]"), tca::ParseError);
}

TEST_CASE("weights with a partition tail") {
  auto w = tca::concat_weight(Weight{2, 1}, Partition{1});
  CHECK(w.truncate(5) == std::vector<int>{2, 1, 1, 0, 0});
  w = tca::concat_weight(Weight{}, Partition{3, 2});
  CHECK(w.truncate(4) == std::vector<int>{3, 2, 0, 0});
  w = tca::concat_weight(Weight{0}, Partition{2});
  CHECK(w.truncate(3) == std::vector<int>{0, 2, 0});
  CHECK(w.window() == 2);
  CHECK(w.at(100) == 0);

  CHECK(tca::dual(Weight{3, 1, 0}) == Weight{0, -1, -3});
  CHECK(tca::as_weight(Partition{2}, 3) == Weight{2, 0, 0});
  CHECK(Weight{2, 2, -1}.is_dominant());
  CHECK_FALSE(Weight{0, 1}.is_dominant());
}
