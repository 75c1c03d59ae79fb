#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipknot/knot_codes.hpp"
#include "bipknot/laurent.hpp"

namespace bipknot {

struct WitnessTerm {
  int generator_index;  // index into the ideal's generator list
  LaurentPoly coeff;
};

// Finitely generated ideal of Z[t,t^-1].  Membership is decided by a
// cached strong Groebner basis over Z[t], saturated by t; every positive
// answer carries a replayable combination of the original generators.
class LaurentIdeal {
 public:
  static LaurentIdeal normalize(std::vector<LaurentPoly> gens);

  const std::vector<LaurentPoly>& generators() const { return gens_; }
  // Saturated strong Groebner basis (elements of Z[t] with nonzero
  // constant term, as Laurent polynomials).
  const std::vector<LaurentPoly>& basis() const { return basis_; }

  bool is_zero() const { return basis_.empty(); }
  std::optional<std::vector<WitnessTerm>> contains(const LaurentPoly& f) const;
  bool is_trivial() const;

 private:
  std::vector<LaurentPoly> gens_;
  std::vector<LaurentPoly> basis_;
  std::vector<std::vector<LaurentPoly>> cofactors_;  // basis[i] = sum cof[i][j]*gens[j]
};

// Replays a membership witness: sum of coeff * generator.
LaurentPoly replay_witness(const std::vector<LaurentPoly>& gens,
                           const std::vector<WitnessTerm>& witness);

// Divides each p_k by x+4 (x = z^2), leaving integer remainders a_k, and
// returns a = gcd(a_k) >= 0 with the ideal <t + t^-1 + 2, a>.  The input
// ideal <p_k(z^2)> is always contained in the result; they are equal
// whenever z^2+4 lies in the input ideal (in particular whenever 1+t
// does).
std::pair<Int, LaurentIdeal> lemma3_reduce(const std::vector<IntPoly>& gens);

struct Certificate {
  enum class Verdict { certified_not_bipartite, no_certificate };
  Verdict verdict = Verdict::no_certificate;
  int m = 0;                                  // ideal index when certified
  std::vector<LaurentPoly> ideal_generators;  // generators of I_m used
  std::vector<WitnessTerm> witness;           // 1+t as a combination of them
  std::string knot_name;
  std::string to_json() const;
};

Certificate certify_not_bipartite(const PDCode& knot, int m_max = 3,
                                  const std::string& knot_name = "");

}  // namespace bipknot
