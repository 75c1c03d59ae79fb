#include "bipknot/alexander.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bipknot {

IntMatrix SeifertBlockMatrix::seifert() const {
  IntMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = E.at(i, j);
      m.at(n + i, n + j) = F.at(i, j);
    }
  for (int i = 0; i < n; ++i) m.at(n + i, i) = 1;
  return m;
}

namespace {

// eps_i(c): +1 iff the lower endpoint of outer chord i lies strictly
// inside the span of inner chord c.  Well defined when the chords
// interleave.
int eps(const Chord& outer, const Chord& inner) {
  return (inner.a < outer.a && outer.a < inner.b) ? 1 : -1;
}

IntMatrix build_f(const BipartiteChordDiagram& cd, const std::vector<int>& outer_idx,
                  const FRule& rule) {
  int n = static_cast<int>(outer_idx.size());
  IntMatrix F(n, n);
  for (int i = 0; i < n; ++i) {
    const Chord& oi = cd.chords[outer_idx[i]];
    for (int j = 0; j < n; ++j) {
      const Chord& oj = cd.chords[outer_idx[j]];
      Int acc = 0;
      for (const Chord& c : cd.chords) {
        if (c.part != Part::inner) continue;
        if (i == j) {
          if (interleaves(c, oi)) acc += c.sign;
        } else if (interleaves(c, oi) && interleaves(c, oj)) {
          int w = rule.use_eps ? eps(oi, c) * eps(oj, c) : 1;
          acc += c.sign * w;
        }
      }
      F.at(i, j) = i == j ? Int(rule.alpha_diag * acc + rule.gamma * oi.sign) : Int(rule.alpha * acc);
    }
  }
  return F;
}

SeifertBlockMatrix block_seifert_with(const BipartiteChordDiagram& cd_in, const FRule& rule) {
  auto bad = validate(cd_in);
  if (bad) throw std::invalid_argument("invalid chord diagram: " + *bad);
  BipartiteChordDiagram cd = cd_in.n_outer() > cd_in.n_inner() ? inside_out(cd_in) : cd_in;
  std::vector<int> outer_idx;
  for (size_t i = 0; i < cd.chords.size(); ++i)
    if (cd.chords[i].part == Part::outer) outer_idx.push_back(static_cast<int>(i));
  SeifertBlockMatrix sb;
  sb.n = static_cast<int>(outer_idx.size());
  sb.E = IntMatrix(sb.n, sb.n);
  for (int k = 0; k < sb.n; ++k) sb.E.at(k, k) = -cd.chords[outer_idx[k]].sign;
  sb.F = build_f(cd, outer_idx, rule);
  return sb;
}

}  // namespace

FRule pinned_f_rule() {
  // Fixed by exhaustive validation against the Fox oracle on every
  // placement with part sizes up to 2+3 and 3+2 (see calibrate_f_rule
  // and the tests), and re-checked on the full 3+3 census by the
  // acceptance suite.  The endpoint-side factor (use_eps) is essential:
  // diagrams whose intersection graph contains a 6-cycle — these first
  // occur at part sizes 3+3 — need off-diagonal signs with product -1
  // around the cycle, which the unsigned count cannot produce.  The two
  // survivors on the full census differ only in alpha and are related by
  // conjugating F with a diagonal +-1 matrix, which leaves every derived
  // invariant unchanged, so alpha = +1 is pinned.
  return FRule{1, true, 1, 0};
}

SeifertBlockMatrix block_seifert(const BipartiteChordDiagram& cd) {
  return block_seifert_with(cd, pinned_f_rule());
}

SeifertBlockMatrix block_seifert_with_rule(const BipartiteChordDiagram& cd, const FRule& rule) {
  return block_seifert_with(cd, rule);
}

AlexanderData bipartite_alexander(const BipartiteChordDiagram& cd) {
  SeifertBlockMatrix sb = block_seifert(cd);
  return {assemble_alexander(sb.seifert()), "bipartite", ""};
}

AlexanderData fox_alexander(const GaussCode& gc) {
  std::string v = gauss_violation(gc);
  if (!v.empty()) throw std::invalid_argument("invalid Gauss code: " + v);
  if (!gauss_realizable(gc)) throw std::invalid_argument("Gauss code is not realizable");
  int n = gc.num_crossings();
  if (n == 0) {
    LaurentMatrix m(1, 1);
    m.at(0, 0) = LaurentPoly(1);
    return {m, "fox", ""};
  }
  int len = 2 * n;
  // Arcs: maximal runs between under-passes.  arc_in[p] is the arc the
  // strand is on when it arrives at pass p.
  std::vector<int> arc_in(len, -1);
  int u0 = -1;
  for (int p = 0; p < len; ++p)
    if (!gc.entries[p].over) {
      u0 = p;
      break;
    }
  int arc = 0;
  for (int step = 1; step <= len; ++step) {
    int p = (u0 + step) % len;
    arc_in[p] = arc;
    if (!gc.entries[p].over && step < len) ++arc;
  }
  // One relation per crossing, generators = arcs, abelianized Fox rows.
  std::vector<int> over_at(n, -1), under_at(n, -1), sign(n, 0);
  for (int p = 0; p < len; ++p) {
    const GaussEntry& e = gc.entries[p];
    (e.over ? over_at : under_at)[e.crossing] = p;
    sign[e.crossing] = e.sign;
  }
  LaurentMatrix m(n, n);
  for (int x = 0; x < n; ++x) {
    int o = arc_in[over_at[x]];
    int uin = arc_in[under_at[x]];
    int uout = (uin + 1) % n;
    LaurentPoly t = LaurentPoly::t(sign[x] > 0 ? 1 : -1);
    m.at(x, o) += LaurentPoly(1) - t;
    m.at(x, uin) += t;
    m.at(x, uout) += LaurentPoly(-1);
  }
  // Delete the last generator's column.
  std::vector<int> rows(n), cols(n - 1);
  for (int i = 0; i < n; ++i) rows[i] = i;
  for (int j = 0; j < n - 1; ++j) cols[j] = j;
  return {m.submatrix(rows, cols), "fox", ""};
}

AlexanderData fox_alexander(const PDCode& pd) { return fox_alexander(pd_to_gauss(pd)); }

LaurentPoly alexander_polynomial(const AlexanderData& d) {
  int r = d.matrix.rows(), c = d.matrix.cols();
  if (r == c) {
    LaurentPoly det_m = det(d.matrix);
    if (det_m.is_zero()) throw std::domain_error("square Alexander matrix with zero determinant");
    return canonical_unit_form(det_m);
  }
  if (r != c + 1) throw std::invalid_argument("Alexander matrix must be square or n x (n-1)");
  std::vector<int> cols(c);
  for (int j = 0; j < c; ++j) cols[j] = j;
  for (int skip = r - 1; skip >= 0; --skip) {
    std::vector<int> rows;
    for (int i = 0; i < r; ++i)
      if (i != skip) rows.push_back(i);
    LaurentPoly det_m = det(d.matrix.submatrix(rows, cols));
    if (!det_m.is_zero()) return canonical_unit_form(det_m);
  }
  throw std::domain_error("all maximal minors vanish; not a knot presentation");
}

IntPoly conway_z2(const BipartiteChordDiagram& cd) {
  SeifertBlockMatrix sb = block_seifert(cd);
  IntMatrix B = lemma2_reduce(sb.E, sb.F);
  IntPolyMatrix m(sb.n, sb.n);
  for (int i = 0; i < sb.n; ++i)
    for (int j = 0; j < sb.n; ++j) {
      m.at(i, j) = IntPoly::monomial(B.at(i, j), 1);
      if (i == j) m.at(i, j) += IntPoly(1);
    }
  return det(m);
}

std::vector<LaurentPoly> alexander_ideal_generators(const AlexanderData& d, int m) {
  if (m < 1) throw std::invalid_argument("ideal index must be >= 1");
  int n = std::min(d.matrix.rows(), d.matrix.cols());
  int k = n - m + 1;
  if (k <= 0) return {LaurentPoly(1)};
  return minors(d.matrix, k);
}

LaurentIdeal alexander_ideal(const AlexanderData& d, int m) {
  return LaurentIdeal::normalize(alexander_ideal_generators(d, m));
}

std::vector<BipartiteChordDiagram> enumerate_placements(int n_in, int n_out, int max_total) {
  if (n_in < 0 || n_out < 0) throw std::invalid_argument("negative part size");
  if (n_in + n_out > max_total) throw std::invalid_argument("enumeration bound exceeded");
  // Reuse the canonical enumerator's building blocks by brute force over
  // endpoint subsets; small sizes only.
  int k = n_in + n_out;
  int em = 2 * k;
  std::vector<BipartiteChordDiagram> out;
  std::vector<int> all(em);
  for (int i = 0; i < em; ++i) all[i] = i;
  // choose positions of inner endpoints
  std::vector<int> sel;
  std::vector<std::vector<int>> inner_sets;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(sel.size()) == 2 * n_in) {
      inner_sets.push_back(sel);
      return;
    }
    for (int i = start; i <= em - (2 * n_in - static_cast<int>(sel.size())); ++i) {
      sel.push_back(i);
      rec(i + 1);
      sel.pop_back();
    }
  };
  rec(0);
  for (const auto& is : inner_sets) {
    std::vector<char> inner_flag(em, 0);
    for (int p : is) inner_flag[p] = 1;
    std::vector<int> os;
    for (int p = 0; p < em; ++p)
      if (!inner_flag[p]) os.push_back(p);
    auto make_matchings = [](const std::vector<int>& pts) {
      std::function<std::vector<std::vector<std::pair<int, int>>>(const std::vector<int>&)> go =
          [&](const std::vector<int>& ps) {
            std::vector<std::vector<std::pair<int, int>>> res;
            if (ps.empty()) {
              res.push_back({});
              return res;
            }
            for (size_t i = 1; i < ps.size(); i += 2) {
              std::vector<int> in(ps.begin() + 1, ps.begin() + i);
              std::vector<int> rest(ps.begin() + i + 1, ps.end());
              for (const auto& mi : go(in))
                for (const auto& mo : go(rest)) {
                  std::vector<std::pair<int, int>> mm;
                  mm.push_back({ps[0], ps[i]});
                  mm.insert(mm.end(), mi.begin(), mi.end());
                  mm.insert(mm.end(), mo.begin(), mo.end());
                  res.push_back(std::move(mm));
                }
            }
            return res;
          };
      return go(pts);
    };
    for (const auto& im : make_matchings(is))
      for (const auto& om : make_matchings(os)) {
        BipartiteChordDiagram base;
        base.endpoints = em;
        for (auto [a, b] : im) base.chords.push_back({a, b, Part::inner, 1});
        for (auto [a, b] : om) base.chords.push_back({a, b, Part::outer, 1});
        std::sort(base.chords.begin(), base.chords.end());
        for (int signs = 0; signs < (1 << k); ++signs) {
          BipartiteChordDiagram cd = base;
          for (int c = 0; c < k; ++c)
            if (signs >> c & 1) cd.chords[c].sign = -1;
          out.push_back(std::move(cd));
        }
      }
  }
  return out;
}

std::vector<FRule> calibrate_f_rule(int max_in, int max_out) {
  std::vector<std::pair<BipartiteChordDiagram, LaurentPoly>> probes;
  for (int a = 0; a <= max_in; ++a)
    for (int b = 0; b <= max_out; ++b)
      for (auto& cd : enumerate_placements(a, b)) {
        LaurentPoly oracle = alexander_polynomial(fox_alexander(to_gauss_code(cd)));
        probes.push_back({std::move(cd), std::move(oracle)});
      }
  std::vector<FRule> passing;
  for (int alpha : {1, -1})
    for (bool use_eps : {false, true})
      for (int alpha_diag : {1, -1})
        for (int gamma : {-2, -1, 0, 1, 2}) {
          FRule rule{alpha, use_eps, alpha_diag, gamma};
          bool ok = true;
          for (const auto& [cd, oracle] : probes) {
            SeifertBlockMatrix sb = block_seifert_with(cd, rule);
            LaurentPoly d = det(assemble_alexander(sb.seifert()));
            if (d.is_zero() || canonical_unit_form(d) != oracle) {
              ok = false;
              break;
            }
          }
          if (ok) passing.push_back(rule);
        }
  return passing;
}

}  // namespace bipknot
