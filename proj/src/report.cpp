#include "tropres/report.hpp"

namespace tropres {

Json to_json(const OrderReport& r) {
  Json j;
  j["resultant"] = r.resultant_value.to_string();
  j["maximizers"] = r.maximizer_count;
  j["order_log2"] = r.order_log2;
  j["power_of_two"] = r.is_power_of_two;
  j["k"] = r.k_if_integral ? Json(*r.k_if_integral) : Json(nullptr);
  return j;
}

Json to_json(const SplitPermutation& s) {
  Json j;
  j["nu"] = s.nu;
  j["mu"] = s.mu;
  return j;
}

Json to_json(const TheoremVerdict& v) {
  Json j;
  j["k"] = v.k;
  j["theta"] = v.theta;
  j["holds"] = v.holds;
  return j;
}

Json to_json(const RootList& r) {
  Json roots = Json::array();
  for (const auto& root : r.finite_roots) {
    Json entry;
    entry["root"] = root.value.to_string();
    entry["multiplicity"] = root.multiplicity;
    roots.push_back(std::move(entry));
  }
  Json j;
  j["finite_roots"] = std::move(roots);
  j["zero_root_multiplicity"] = r.zero_root_multiplicity;
  return j;
}

Json to_json(const TropicalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m.at(i, k).to_string());
    rows.push_back(std::move(row));
  }
  Json j;
  j["a_rows"] = m.a_rows();
  j["b_rows"] = m.b_rows();
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const SparseIntPoly& r, const std::vector<std::string>& names) {
  Json terms = Json::array();
  for (const auto& [e, c] : r.terms()) {
    Json t;
    t["coeff"] = c.get_str();
    t["monomial"] = format_monomial(e, names);
    t["exponents"] = e;
    terms.push_back(std::move(t));
  }
  Json j;
  j["variables"] = names;
  j["support_size"] = r.terms().size();
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace tropres
