#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bipknot/knot_codes.hpp"

namespace bipknot {

enum class Part : int { inner = 0, outer = 1 };

struct Chord {
  int a, b;   // endpoint indices on the circle, 0 <= a < b < endpoints
  Part part;
  int sign;   // +-1
  auto key() const { return std::tuple(a, b, static_cast<int>(part), sign); }
  bool operator==(const Chord& o) const { return key() == o.key(); }
  bool operator<(const Chord& o) const { return key() < o.key(); }
};

// Signed chords on a circle with marked points 0..endpoints-1 in circular
// order, split into mutually non-crossing inner and outer families.
struct BipartiteChordDiagram {
  int endpoints = 0;  // 2 * number of chords
  std::vector<Chord> chords;

  int n_inner() const;
  int n_outer() const;
  auto key() const { return std::tuple(endpoints, chords); }
  bool operator==(const BipartiteChordDiagram& o) const { return key() == o.key(); }
  bool operator<(const BipartiteChordDiagram& o) const { return key() < o.key(); }
};

// True iff the endpoint pairs interleave around the circle.
bool interleaves(const Chord& x, const Chord& y);

// nullopt == ok; otherwise a description of the first violation.
std::optional<std::string> validate(const BipartiteChordDiagram& cd);

// Swap the part label of every chord (the knot is unchanged).
BipartiteChordDiagram inside_out(const BipartiteChordDiagram& cd);

struct IntersectionGraph {
  int n = 0;
  std::vector<Part> part;
  std::vector<int> sign;
  std::vector<std::pair<int, int>> edges;  // interleaving chord pairs, i < j
};

IntersectionGraph intersection_graph(const BipartiteChordDiagram& cd);

// Lexicographically least representative over circle rotations,
// reflection, and global part swap.  Idempotent.
BipartiteChordDiagram canonicalize(const BipartiteChordDiagram& cd);

// All valid signed diagrams with the given part sizes, one canonical
// representative each, sorted.  Throws when n_in + n_out > max_total.
std::vector<BipartiteChordDiagram> enumerate_diagrams(int n_in, int n_out, int max_total = 8);

// Text format: header "endpoints <2k>", then one chord per line,
// "<part><sign> <a> <b>" with part in {I, O} and sign in {+, -}.
std::string render_chords(const BipartiteChordDiagram& cd);
BipartiteChordDiagram parse_chords(const std::string& text);

// Replace every chord by a matched pair of crossings (ids 2c and 2c+1 for
// chord c) traversing the circle once; see the convention notes in the
// implementation.  The result has twice as many crossings as chords.
GaussCode to_gauss_code(const BipartiteChordDiagram& cd);

struct MatchedPair {
  int x, y;  // crossing ids
  int sign;  // pair sign
};

std::vector<MatchedPair> induced_pairing(const BipartiteChordDiagram& cd);

// Inverse of to_gauss_code up to rotation/reflection of the circle.
// Throws std::invalid_argument when the pairing is not of matched type.
BipartiteChordDiagram from_matched_diagram(const GaussCode& gc,
                                           const std::vector<MatchedPair>& pairing);

}  // namespace bipknot
