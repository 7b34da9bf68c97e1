#include <doctest.h>

#include <algorithm>

#include "tca/spectrum.hpp"

TEST_CASE("krull dimension") {
  CHECK(tca::krull_dimension(0) == 0);
  CHECK(tca::krull_dimension(1) == 1);
  CHECK(tca::krull_dimension(3) == 6);
  CHECK_THROWS_AS(tca::krull_dimension(-1), std::invalid_argument);
}

TEST_CASE("maximal chain") {
  auto chain = tca::maximal_chain(1);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].to_string() == "Z_{0,0}");
  CHECK(chain[1].to_string() == "Gr(E)");
  CHECK(tca::chain_length(chain) == 1);

  chain = tca::maximal_chain(2);
  std::vector<std::string> labels;
  for (const auto& c : chain) labels.push_back(c.to_string());
  CHECK(labels == std::vector<std::string>{"Z_{0,0}", "Z_{1,0}", "Z_{1,1}", "Gr(E)"});
  CHECK(tca::chain_length(chain) == 3);

  chain = tca::maximal_chain(3);
  CHECK(chain.size() == 7);
  CHECK(tca::chain_length(chain) == 6);

  for (int d = 1; d <= 12; ++d) {
    chain = tca::maximal_chain(d);
    CHECK(tca::chain_length(chain) == tca::krull_dimension(d));
    CHECK(std::is_sorted(chain.begin(), chain.end()));
    CHECK(std::adjacent_find(chain.begin(), chain.end()) == chain.end());
    CHECK(chain.back().whole_space);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      CHECK_FALSE(chain[k].whole_space);
      CHECK(chain[k].i <= chain[k].r);
      CHECK(chain[k].r < d);
    }
  }
  CHECK_THROWS_AS(tca::maximal_chain(0), std::invalid_argument);
  CHECK(tca::maximal_chain(2)[1].describe().find("V_2") != std::string::npos);
}
