#pragma once

#include <json.hpp>

#include "tca/characters.hpp"
#include "tca/ktheory.hpp"
#include "tca/partition.hpp"
#include "tca/resolutions.hpp"
#include "tca/schur.hpp"
#include "tca/spectrum.hpp"

namespace tca::json {

using Json = nlohmann::ordered_json;

/// Integers that fit in a signed 64-bit value are numbers; larger ones are
/// decimal strings.
Json integer(const Integer& value);
Integer parse_integer(const Json& value);

Json partition(const Partition& p);
Partition parse_partition(const Json& value);

/// [{"partition":[…],"coeff":n}, …]
Json schur_element(const SchurElement& a);
SchurElement parse_schur_element(const Json& value);

/// [{"E":[…],"V":[…],"mult":n,"dualE":bool}, …]
Json character_terms(const EquivCharacter& ch);

/// {"i":…, "j":…, "terms":[{"E":…,"V":…,"mult":…}]} per nonzero cell.
Json betti_table(const BettiTable& table);

/// {"d":n,"blocks":[{"r":k,"terms":[{"lambda":[…],"coeff":[…]}]}]}
Json kclass(const KClass& x);

/// Accepts the full KClass schema or a basis-class shorthand
/// {"r":k,"lambda":[…],"mu":[…]}.  Throws std::invalid_argument on schema
/// violations.
KClass parse_kclass(const Json& value, int d);

Json matrix(const IntMatrix& m);

}  // namespace tca::json
