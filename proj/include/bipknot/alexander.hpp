#pragma once

#include <string>
#include <vector>

#include "bipknot/chord_diagram.hpp"
#include "bipknot/ideals.hpp"
#include "bipknot/matrix.hpp"

namespace bipknot {

// The Seifert matrix [[E,0],[I,F]] of a bipartite diagram, blocks indexed
// by the outer chords (after turning the diagram inside out when the
// outer part is the larger one).
struct SeifertBlockMatrix {
  IntMatrix E;  // diagonal, entries +-1, E_kk = -sign(outer chord k)
  IntMatrix F;  // symmetric
  int n = 0;
  IntMatrix seifert() const;  // the assembled 2n x 2n matrix
};

SeifertBlockMatrix block_seifert(const BipartiteChordDiagram& cd);

struct AlexanderData {
  LaurentMatrix matrix;
  std::string source;  // "fox" or "bipartite"
  std::string knot_name;
};

// Wirtinger presentation + Fox derivatives, abelianized: one generator
// per arc, one relation per crossing, one column deleted.  This is the
// oracle route, independent of the chord-diagram machinery.
AlexanderData fox_alexander(const GaussCode& gc);
AlexanderData fox_alexander(const PDCode& pd);

// tM - M^T for the block Seifert matrix of the diagram.
AlexanderData bipartite_alexander(const BipartiteChordDiagram& cd);

// Canonical Alexander polynomial of the presented knot.
LaurentPoly alexander_polynomial(const AlexanderData& d);

// det(I + x*EF) with x standing for z^2; constant term is always 1.
IntPoly conway_z2(const BipartiteChordDiagram& cd);

// Generators of I_m: all minors of size n-m+1 where n = min(rows, cols);
// the whole ring (generator 1) when the size drops to zero or below.
std::vector<LaurentPoly> alexander_ideal_generators(const AlexanderData& d, int m);
LaurentIdeal alexander_ideal(const AlexanderData& d, int m);

// Calibration support for the combinatorial F rule.  The rule family:
//   F_ij (i != j) = alpha     * sum over inner chords c interleaving both
//                               of sign(c) [times eps_i(c)*eps_j(c) when
//                               use_eps], where eps_i(c) = +1 iff the
//                               lower endpoint of outer chord i lies
//                               inside the span of c;
//   F_ii          = alpha_diag * sum over inner chords c interleaving i
//                               of sign(c), plus gamma * sign(i).
struct FRule {
  int alpha = 1;
  bool use_eps = false;
  int alpha_diag = 1;
  int gamma = 0;
  bool operator==(const FRule& o) const {
    return alpha == o.alpha && use_eps == o.use_eps && alpha_diag == o.alpha_diag &&
           gamma == o.gamma;
  }
};

// All valid signed diagrams with the given part sizes, every endpoint
// placement (no symmetry reduction).
std::vector<BipartiteChordDiagram> enumerate_placements(int n_in, int n_out, int max_total = 8);

// Rules from the family that reproduce the Fox-oracle Alexander
// polynomial on every placement with part sizes up to (max_in, max_out).
std::vector<FRule> calibrate_f_rule(int max_in, int max_out);

// block_seifert with an explicit rule (calibration and self-check use).
SeifertBlockMatrix block_seifert_with_rule(const BipartiteChordDiagram& cd, const FRule& rule);

// The pinned rule used by block_seifert.
FRule pinned_f_rule();

}  // namespace bipknot
