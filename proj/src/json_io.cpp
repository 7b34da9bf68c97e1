#include "tca/json_io.hpp"

#include <stdexcept>
#include <string>

namespace tca::json {

Json integer(const Integer& value) {
  if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

Integer parse_integer(const Json& value) {
  if (value.is_number_integer()) return Integer(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0)
      throw std::invalid_argument("not an integer: " + value.get<std::string>());
    return out;
  }
  throw std::invalid_argument("expected an integer, got " + value.dump());
}

Json partition(const Partition& p) { return Json(p.parts()); }

Partition parse_partition(const Json& value) {
  if (!value.is_array()) throw std::invalid_argument("expected a partition array, got " + value.dump());
  for (const auto& x : value)
    if (!x.is_number_integer()) throw std::invalid_argument("partition entry is not an integer: " + x.dump());
  return tca::parse_partition(value.dump());
}

Json schur_element(const SchurElement& a) {
  Json out = Json::array();
  for (const auto& [p, c] : a.terms()) out.push_back({{"partition", partition(p)}, {"coeff", integer(c)}});
  return out;
}

SchurElement parse_schur_element(const Json& value) {
  if (!value.is_array()) throw std::invalid_argument("expected an array of Schur terms");
  SchurElement out;
  for (const auto& t : value) out.add(parse_partition(t.at("partition")), parse_integer(t.at("coeff")));
  return out;
}

Json character_terms(const EquivCharacter& ch) {
  Json out = Json::array();
  for (const auto& [k, m] : ch.terms())
    out.push_back({{"E", partition(k.first)}, {"V", partition(k.second)}, {"mult", integer(m)}, {"dualE", ch.dual_e()}});
  return out;
}

Json betti_table(const BettiTable& table) {
  Json cells = Json::array();
  for (const auto& [ij, terms] : table.entries) {
    if (terms.empty()) continue;
    Json list = Json::array();
    for (const auto& [k, m] : terms)
      list.push_back({{"E", partition(k.first)}, {"V", partition(k.second)}, {"mult", integer(m)}});
    cells.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", std::move(list)}});
  }
  return {{"dimE", table.dim_e}, {"n", table.n}, {"lambda", partition(table.lam)}, {"imax", table.i_max},
          {"entries", std::move(cells)}};
}

Json kclass(const KClass& x) {
  Json blocks = Json::array();
  for (const auto& [r, block] : x.blocks()) {
    Json terms = Json::array();
    for (const auto& [lam, a] : block) terms.push_back({{"lambda", partition(lam)}, {"coeff", schur_element(a)}});
    blocks.push_back({{"r", r}, {"terms", std::move(terms)}});
  }
  return {{"d", x.d()}, {"blocks", std::move(blocks)}};
}

KClass parse_kclass(const Json& value, int d) {
  try {
    if (!value.is_object()) throw std::invalid_argument("class must be a JSON object");
    if (value.contains("blocks")) {
      if (value.contains("d") && value.at("d").get<int>() != d)
        throw std::invalid_argument("class has d=" + value.at("d").dump() + " but --d is " + std::to_string(d));
      KClass x(d);
      for (const auto& block : value.at("blocks")) {
        const int r = block.at("r").get<int>();
        for (const auto& t : block.at("terms"))
          x.add(r, parse_partition(t.at("lambda")), parse_schur_element(t.at("coeff")));
      }
      return x;
    }
    const int r = value.at("r").get<int>();
    const Partition lam = value.contains("lambda") ? parse_partition(value.at("lambda")) : Partition{};
    const Partition mu = value.contains("mu") ? parse_partition(value.at("mu")) : Partition{};
    return basis_class(r, lam, mu, d);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed class: ") + e.what());
  }
}

Json matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(integer(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tca::json
