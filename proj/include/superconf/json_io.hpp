#pragma once

#include <json.hpp>

#include "superconf/matrix_superalgebra.hpp"
#include "superconf/spheres.hpp"

namespace superconf::json_io {

using Json = nlohmann::ordered_json;

/// [{"index": [1, 2], "re": "3/2", "im": "0"}, ...], one entry per nonzero monomial.
Json to_json(const Supernumber& x);
Supernumber supernumber_from_json(int generators, const Json& j);

/// Terms carry two extra keys: "z" (exponent) and "theta" (subset of ["+", "-"]).
Json to_json(const SuperPolynomial& p);
SuperPolynomial superpolynomial_from_json(int generators, int odd_count, const Json& j);

/// {"numerator": [...terms...], "denominator": [{"z": k, "re": ..., "im": ...}, ...]}
Json to_json(const RationalSuperfunction& f);
RationalSuperfunction superfunction_from_json(int generators, int odd_count, const Json& j);

/// {"generators": L, "f": ..., "g+": ..., "g-": ..., "psi+": ..., "psi-": ...}
Json to_json(const SuperconformalMap& m);
SuperconformalMap map_from_json(const Json& j);

Json to_json(const AutomorphismParams& p);
AutomorphismParams params_from_json(const Json& j);

/// Outcome of aut_validate on a map: {"n", "status": "in-family" | "not-in-family", "params" | "reason"}.
Json validation_report(const SuperconformalMap& m, int n);

/// [{"symbol": "L(1)", "re": ..., "im": ...}, ...]
Json to_json(const NSElement& e);
NSElement ns_element_from_json(const Json& j);

/// {"band": b, "entries": [{"left", "right", "bracket"}, ...]} over all pairs of ns_band_basis(band).
Json bracket_table(int band);
/// Pairs whose stored bracket differs from ns_bracket (empty for a faithful golden file).
std::vector<std::string> bracket_table_mismatches(const Json& table);

/// [{"pair", "expected", "got"}, ...]
Json to_json(const std::vector<Discrepancy>& ledger);

}  // namespace superconf::json_io
