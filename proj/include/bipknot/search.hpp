#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bipknot/alexander.hpp"
#include "bipknot/chord_diagram.hpp"

namespace bipknot {

// The Conway key of a knot polynomial: the unique q with
// substitute_z2(q) a unit multiple of delta and q(0) = 1; nullopt when
// delta is not expressible through z^2.
std::optional<IntPoly> conway_key(const LaurentPoly& delta);

struct SearchIndex {
  int max_inner = 0;
  int max_outer = 0;
  // Conway polynomial (in x = z^2) -> canonical diagrams realizing it.
  std::map<IntPoly, std::vector<BipartiteChordDiagram>> by_key;
  std::string to_json() const;
};

SearchIndex build_index(int max_inner, int max_outer, int max_total = 8);

struct MatchResult {
  bool z2_expressible = false;
  IntPoly key;              // valid when z2_expressible
  LaurentPoly alexander;    // canonical oracle polynomial of the knot
  std::vector<BipartiteChordDiagram> candidates;
};

MatchResult match_knot(const PDCode& knot, const SearchIndex& index);

// Streaming search over all diagrams with n_in <= max_inner and
// n_out <= max_outer, without materializing an index: returns, for each
// requested key, canonical diagrams whose Conway polynomial equals it
// (at most per_key_cap each).  One enumeration sweep serves all keys.
std::map<IntPoly, std::vector<BipartiteChordDiagram>> search_conway(
    const std::set<IntPoly>& keys, int max_inner, int max_outer,
    size_t per_key_cap = 16, int max_total = 8);

}  // namespace bipknot
