#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "neurobetti/betti.hpp"
#include "neurobetti/piercing.hpp"
#include "neurobetti/pseudomonomial.hpp"

namespace neurobetti {

/// {"n":N, "total":[...], "graded":[[w,j,c],...], "multigraded":[[w,u,v,c],...]}, entries sorted.
nlohmann::ordered_json betti_to_json(const BettiTable& table);

/// A graded-only table (no multigraded key) parses into `graded`; `table` is filled only when a
/// multigraded list is present. Throws InputError on malformed documents.
struct ParsedBetti {
  int n = 0;
  GradedBetti graded;
  std::optional<BettiTable> table;
};
ParsedBetti betti_from_json(const nlohmann::json& doc);

/// Macaulay-style graded table: column w, row r holds beta_{w, w+r}; zeros print as ".".
std::string render_betti_triangle(const GradedBetti& graded);

/// "j0=1 j1=3 j2=1": marginals up to the last nonzero one.
std::string render_marginals(const PiercingProfile& profile);
/// "j00=1 j10=2 j11=1 j20=1": nonzero j_{k,l} only.
std::string render_profile_table(const PiercingProfile& profile);
nlohmann::ordered_json profile_to_json(const PiercingProfile& profile);

/// ["x1*x3", "x5*(1-x3)", ...]
nlohmann::ordered_json cf_to_json(const CanonicalForm& cf);

/// Linear-strand entries from a whitespace/comma separated list
/// "b1 b2 ...", read as beta_{1,2}, beta_{2,3}, ... Throws InputError on non-integers.
GradedBetti parse_linear_strand(const std::string& text);

}  // namespace neurobetti
