#pragma once

#include <string>
#include <vector>

namespace bipknot {

// One crossing X[a,b,c,d]: arc labels counterclockwise starting from the
// incoming under-strand (Knot Atlas convention).  Arc labels are 1..2n and
// consecutive along the knot, so c = a+1 (mod 2n) and the over-strand
// labels differ by 1 (mod 2n); the direction of that difference encodes
// the crossing sign.
struct PDCrossing {
  int a, b, c, d;
  bool operator==(const PDCrossing& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

struct PDCode {
  std::vector<PDCrossing> crossings;
  int size() const { return static_cast<int>(crossings.size()); }
  bool is_unknot() const { return crossings.empty(); }
  bool operator==(const PDCode& o) const { return crossings == o.crossings; }
};

// Text form "X[1,5,2,4] X[3,1,4,6] ..." ; the unknot is the token "unknot".
// parse_pd validates arc counts, consecutivity and single-componentness.
// Throws std::invalid_argument on malformed input.
PDCode parse_pd(const std::string& text);
std::string render_pd(const PDCode& pd);

struct GaussEntry {
  int crossing;  // 0-based crossing id
  bool over;
  int sign;  // crossing sign, +-1, equal on both passes
  bool operator==(const GaussEntry& o) const {
    return crossing == o.crossing && over == o.over && sign == o.sign;
  }
};

// Signed Gauss code: the sequence of crossing passes along the knot.
struct GaussCode {
  std::vector<GaussEntry> entries;
  int num_crossings() const { return static_cast<int>(entries.size()) / 2; }
  bool operator==(const GaussCode& o) const { return entries == o.entries; }
};

// Structural validation (each crossing twice, once over once under,
// consistent signs); returns a message for the first violation.
std::string gauss_violation(const GaussCode& gc);  // empty == ok

GaussCode pd_to_gauss(const PDCode& pd);

// True iff the signed code is realizable by a planar knot diagram
// (genus of the sign-determined rotation system is zero).
bool gauss_realizable(const GaussCode& gc);

// Throws std::invalid_argument when the code is invalid or non-planar.
PDCode gauss_to_pd(const GaussCode& gc);

struct TableEntry {
  std::string name;
  PDCode pd;
};

// JSON array of {"name": string, "pd": [[a,b,c,d], ...]}; an empty "pd"
// array denotes the unknot.  Throws std::invalid_argument on malformed
// entries or duplicate names.
std::vector<TableEntry> ingest_table(const std::string& json_text);
std::vector<TableEntry> ingest_table_file(const std::string& path);

}  // namespace bipknot
