#pragma once

#include <json.hpp>

#include "tropres/classical.hpp"
#include "tropres/polynomial.hpp"
#include "tropres/sylvester.hpp"
#include "tropres/symbolic.hpp"

namespace tropres {

// ordered_json keeps keys in insertion order, so identical inputs always
// serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// {"resultant": "24", "maximizers": 4, "order_log2": 2.0, "power_of_two": true, "k": 2}
Json to_json(const OrderReport& r);
/// {"nu": [1, 4], "mu": [2, 3, 5]}
Json to_json(const SplitPermutation& s);
/// {"k": 2, "theta": 4, "holds": true}
Json to_json(const TheoremVerdict& v);
Json to_json(const RootList& r);
Json to_json(const TropicalMatrix& m);
/// Terms with integer coefficients plus the support size.
Json to_json(const SparseIntPoly& r, const std::vector<std::string>& names);

}  // namespace tropres
