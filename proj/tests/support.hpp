#pragma once

#include <doctest.h>

#include <string>

#include "oracles/oracles.hpp"
#include "pcoinv/pcoinv.hpp"

namespace test {

inline pcoinv::QPoly to_qpoly(const oracle::Poly& p) {
  pcoinv::QPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) out.add_term(static_cast<int>(i), p[i]);
  return out;
}

inline pcoinv::BiPoly to_bipoly(const oracle::Bi& b) {
  pcoinv::BiPoly out;
  for (const auto& [k, c] : b) out.add_term(k.first, k.second, c);
  return out;
}

/// Shorthand for parse_composition.
inline pcoinv::Composition comp(const std::string& s) { return pcoinv::parse_composition(s); }

}  // namespace test

namespace doctest {
template <>
struct StringMaker<pcoinv::QPoly> {
  static String convert(const pcoinv::QPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<pcoinv::BiPoly> {
  static String convert(const pcoinv::BiPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<pcoinv::MPoly> {
  static String convert(const pcoinv::MPoly& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<pcoinv::SymFunc> {
  static String convert(const pcoinv::SymFunc& f) { return f.to_string().c_str(); }
};
}  // namespace doctest
