#pragma once

// JSON forms. Coefficients are decimal strings ("3", "-1/2").

#include <nlohmann/json.hpp>

#include "pcoinv/bipoly.hpp"
#include "pcoinv/characters.hpp"
#include "pcoinv/combinat.hpp"
#include "pcoinv/mpoly.hpp"

namespace pcoinv {

using Json = nlohmann::ordered_json;

/// [[e, "c"], ...] in increasing exponent order.
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

/// [[i, j, "c"], ...] in canonical (t-major) order.
Json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

/// Coefficient of t^r as qpoly JSON, r = 0..order.
Json biseries_to_json(const BiSeries& s);

/// {"2,1": <bipoly>, ...} in the SymFunc's canonical order.
Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j, int n, SymBasis basis = SymBasis::schur);

Json path_to_json(const LatticePath& p);
Json tableau_to_json(const Tableau& t);

/// One [monomial, "c"] pair per term, descending; a monomial is a list of [name, exponent].
Json mpoly_to_json(const MPoly& p);

}  // namespace pcoinv
