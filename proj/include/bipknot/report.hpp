#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bipknot/alexander.hpp"
#include "bipknot/chord_diagram.hpp"
#include "bipknot/ideals.hpp"
#include "bipknot/knot_codes.hpp"
#include "bipknot/search.hpp"

namespace bipknot {

// Two supposedly equivalent computation routes disagreed.  The CLI turns
// this into exit code 3; it must never be swallowed.
struct internal_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct KnotRecord {
  std::string name;
  std::string alexander;                 // canonical Delta, rendered
  std::optional<std::string> conway_z2;  // polynomial in x = z^2 when extractable
  std::vector<std::string> ideal2;       // canonical generators of I_2
  std::string verdict;                   // "certified_not_bipartite" | "no_certificate"
  std::string status;                    // "not_bipartite" | "unknown"
  std::optional<Certificate> certificate;
  long long timing_ms = 0;
};

struct RunReport {
  std::string command;
  std::vector<KnotRecord> records;
  bool include_timing = true;
  std::string to_json() const;   // the machine contract
  std::string to_table() const;  // cosmetic, for humans
};

// Delta, I_2 generators, Conway extraction status; with certify also the
// certificate search up to m_max.
KnotRecord analyze_knot(const std::string& name, const PDCode& pd, bool certify, int m_max = 3);

// Same record for a chord-diagram input; always cross-checks the
// bipartite Seifert route against the Fox oracle on the reconstructed
// diagram and throws internal_check_error on mismatch.
KnotRecord analyze_chords(const std::string& name, const BipartiteChordDiagram& cd);

RunReport run_invariants(const std::vector<TableEntry>& entries);
RunReport run_certify(const std::vector<TableEntry>& entries, int m_max = 3);

struct SearchReport {
  std::string target;
  int max_inner = 0;
  int max_outer = 0;
  MatchResult result;
  bool include_timing = true;
  long long timing_ms = 0;
  std::string to_json() const;
  std::string to_table() const;
};

SearchReport run_search(const std::string& target, const std::vector<TableEntry>& entries,
                        int max_inner, int max_outer, size_t per_key_cap = 16);

// Compares, for every enumerated diagram with part sizes up to
// (max_in, max_out), the bipartite Seifert route, the Conway z^2 route
// and the Fox oracle; throws internal_check_error on the first
// disagreement.  With perturb_rule the F rule is deliberately mis-wired,
// which must trip the gate (exercised by tests).
void self_check(int max_in, int max_out, bool perturb_rule = false);

}  // namespace bipknot
