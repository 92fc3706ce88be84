#include "pcoinv/serialize.hpp"

#include <stdexcept>

namespace pcoinv {

Json qpoly_to_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, to_string(c)}));
  return out;
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  for (const auto& term : j) p.add_term(term.at(0).get<int>(), parse_rational(term.at(1).get<std::string>()));
  return p;
}

Json bipoly_to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back(Json::array({k.first, k.second, to_string(c)}));
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  BiPoly p;
  for (const auto& term : j) {
    p.add_term(term.at(0).get<int>(), term.at(1).get<int>(), parse_rational(term.at(2).get<std::string>()));
  }
  return p;
}

Json biseries_to_json(const BiSeries& s) {
  Json out = Json::array();
  for (const QPoly& c : s.coeffs()) out.push_back(qpoly_to_json(c));
  return out;
}

Json symfunc_to_json(const SymFunc& f) {
  Json out = Json::object();
  for (const auto& [l, c] : f.coeffs) out[join(l)] = bipoly_to_json(c);
  return out;
}

SymFunc symfunc_from_json(const Json& j, int n, SymBasis basis) {
  SymFunc f;
  f.basis = basis;
  f.n = n;
  for (const auto& [key, value] : j.items()) f.add(parse_partition(key), bipoly_from_json(value));
  return f;
}

Json path_to_json(const LatticePath& p) {
  Json out = Json::array();
  for (const Point& pt : p) out.push_back(pt);
  return out;
}

Json tableau_to_json(const Tableau& t) {
  Json out = Json::array();
  for (const auto& row : t.rows) out.push_back(row);
  return out;
}

Json mpoly_to_json(const MPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::array();
    const Exponent& e = it->first.second;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) mono.push_back(Json::array({p.ring()->names[i], e[i]}));
    }
    out.push_back(Json::array({mono, to_string(it->second)}));
  }
  return out;
}

}  // namespace pcoinv
