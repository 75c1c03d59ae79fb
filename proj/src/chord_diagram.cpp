#include "bipknot/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bipknot {

int BipartiteChordDiagram::n_inner() const {
  int n = 0;
  for (const Chord& c : chords) n += c.part == Part::inner;
  return n;
}

int BipartiteChordDiagram::n_outer() const {
  return static_cast<int>(chords.size()) - n_inner();
}

bool interleaves(const Chord& x, const Chord& y) {
  bool a_inside = x.a < y.a && y.a < x.b;
  bool b_inside = x.a < y.b && y.b < x.b;
  return a_inside != b_inside;
}

std::optional<std::string> validate(const BipartiteChordDiagram& cd) {
  if (cd.endpoints < 0 || cd.endpoints % 2 != 0)
    return "endpoint count must be even and nonnegative";
  if (static_cast<int>(cd.chords.size()) * 2 != cd.endpoints)
    return "chord count must be endpoints/2";
  std::vector<int> used(cd.endpoints, 0);
  for (size_t i = 0; i < cd.chords.size(); ++i) {
    const Chord& c = cd.chords[i];
    if (c.sign != 1 && c.sign != -1)
      return "chord " + std::to_string(i) + " has sign other than +-1";
    if (c.a < 0 || c.b < 0 || c.a >= cd.endpoints || c.b >= cd.endpoints || c.a >= c.b)
      return "chord " + std::to_string(i) + " has bad endpoints";
    ++used[c.a];
    ++used[c.b];
  }
  for (int e = 0; e < cd.endpoints; ++e)
    if (used[e] != 1) return "endpoint " + std::to_string(e) + " not used exactly once";
  for (size_t i = 0; i < cd.chords.size(); ++i)
    for (size_t j = i + 1; j < cd.chords.size(); ++j)
      if (cd.chords[i].part == cd.chords[j].part && interleaves(cd.chords[i], cd.chords[j]))
        return "same-part chords " + std::to_string(i) + " and " + std::to_string(j) + " cross";
  return std::nullopt;
}

BipartiteChordDiagram inside_out(const BipartiteChordDiagram& cd) {
  BipartiteChordDiagram r = cd;
  for (Chord& c : r.chords) c.part = c.part == Part::inner ? Part::outer : Part::inner;
  std::sort(r.chords.begin(), r.chords.end());
  return r;
}

IntersectionGraph intersection_graph(const BipartiteChordDiagram& cd) {
  IntersectionGraph g;
  g.n = static_cast<int>(cd.chords.size());
  for (const Chord& c : cd.chords) {
    g.part.push_back(c.part);
    g.sign.push_back(c.sign);
  }
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (interleaves(cd.chords[i], cd.chords[j])) g.edges.push_back({i, j});
  return g;
}

namespace {

BipartiteChordDiagram transform(const BipartiteChordDiagram& cd, int rot, bool refl, bool swap) {
  BipartiteChordDiagram r;
  r.endpoints = cd.endpoints;
  int m = cd.endpoints;
  for (const Chord& c : cd.chords) {
    int a = c.a, b = c.b;
    if (refl) {
      a = m - 1 - a;
      b = m - 1 - b;
    }
    a = (a + rot) % m;
    b = (b + rot) % m;
    Chord nc{std::min(a, b), std::max(a, b),
             swap ? (c.part == Part::inner ? Part::outer : Part::inner) : c.part, c.sign};
    r.chords.push_back(nc);
  }
  std::sort(r.chords.begin(), r.chords.end());
  return r;
}

}  // namespace

BipartiteChordDiagram canonicalize(const BipartiteChordDiagram& cd) {
  BipartiteChordDiagram best = transform(cd, 0, false, false);
  for (int rot = 0; rot < std::max(cd.endpoints, 1); ++rot)
    for (bool refl : {false, true})
      for (bool swap : {false, true}) {
        BipartiteChordDiagram t = transform(cd, rot, refl, swap);
        if (t < best) best = t;
      }
  return best;
}

namespace {

// Non-crossing perfect matchings of an ordered point list (nesting allowed,
// interleaving not).
std::vector<std::vector<std::pair<int, int>>> all_noncrossing(const std::vector<int>& pts) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (pts.empty()) {
    out.push_back({});
    return out;
  }
  for (size_t i = 1; i < pts.size(); i += 2) {
    std::vector<int> inside(pts.begin() + 1, pts.begin() + i);
    std::vector<int> outside(pts.begin() + i + 1, pts.end());
    for (const auto& mi : all_noncrossing(inside))
      for (const auto& mo : all_noncrossing(outside)) {
        std::vector<std::pair<int, int>> m;
        m.push_back({pts[0], pts[i]});
        m.insert(m.end(), mi.begin(), mi.end());
        m.insert(m.end(), mo.begin(), mo.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BipartiteChordDiagram> enumerate_diagrams(int n_in, int n_out, int max_total) {
  if (n_in < 0 || n_out < 0) throw std::invalid_argument("negative part size");
  if (n_in + n_out > max_total) throw std::invalid_argument("enumeration bound exceeded");
  int k = n_in + n_out;
  int m = 2 * k;
  std::set<BipartiteChordDiagram> seen;
  std::vector<std::vector<int>> inner_sets;
  std::vector<int> cur;
  subsets(m, 2 * n_in, 0, cur, inner_sets);
  for (const auto& is : inner_sets) {
    std::vector<char> is_inner(m, 0);
    for (int p : is) is_inner[p] = 1;
    std::vector<int> os;
    for (int p = 0; p < m; ++p)
      if (!is_inner[p]) os.push_back(p);
    for (const auto& im : all_noncrossing(is))
      for (const auto& om : all_noncrossing(os)) {
        BipartiteChordDiagram base;
        base.endpoints = m;
        for (auto [a, b] : im) base.chords.push_back({a, b, Part::inner, 1});
        for (auto [a, b] : om) base.chords.push_back({a, b, Part::outer, 1});
        for (int signs = 0; signs < (1 << k); ++signs) {
          BipartiteChordDiagram cd = base;
          for (int c = 0; c < k; ++c)
            if (signs >> c & 1) cd.chords[c].sign = -1;
          seen.insert(canonicalize(cd));
        }
      }
  }
  return {seen.begin(), seen.end()};
}

std::string render_chords(const BipartiteChordDiagram& cd) {
  std::ostringstream out;
  out << "endpoints " << cd.endpoints << '\n';
  for (const Chord& c : cd.chords)
    out << (c.part == Part::inner ? 'I' : 'O') << (c.sign > 0 ? '+' : '-') << ' ' << c.a << ' '
        << c.b << '\n';
  return out.str();
}

BipartiteChordDiagram parse_chords(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  BipartiteChordDiagram cd;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string kw;
      ls >> kw >> cd.endpoints;
      if (kw != "endpoints" || ls.fail() || cd.endpoints < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected header \"endpoints <2k>\"");
      have_header = true;
      continue;
    }
    std::string tag;
    Chord c{};
    ls >> tag >> c.a >> c.b;
    if (ls.fail() || tag.size() != 2 || (tag[0] != 'I' && tag[0] != 'O') ||
        (tag[1] != '+' && tag[1] != '-'))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected \"<part><sign> <a> <b>\"");
    c.part = tag[0] == 'I' ? Part::inner : Part::outer;
    c.sign = tag[1] == '+' ? 1 : -1;
    cd.chords.push_back(c);
  }
  if (!have_header) throw std::invalid_argument("missing \"endpoints\" header");
  return cd;
}

// Gauss-code emission convention.  Chord c becomes crossings 2c and 2c+1.
// Walking the circle, the two passes at the chord's lower endpoint are
// (2c, 2c+1) and at its upper endpoint (2c+1, 2c): the clasp's two strands
// are antiparallel, so the second strand meets the crossings in reverse
// order.  For a positive chord the first pass at each endpoint is an
// over-pass; a negative chord mirrors the clasp.  Both crossings of a pair
// share one crossing sign: the chord sign for inner chords and its
// opposite for outer chords (the clasp is traversed in the opposite
// rotational sense outside the circle).
GaussCode to_gauss_code(const BipartiteChordDiagram& cd) {
  auto bad = validate(cd);
  if (bad) throw std::invalid_argument("invalid chord diagram: " + *bad);
  GaussCode gc;
  std::vector<int> chord_at(cd.endpoints, -1);
  for (size_t c = 0; c < cd.chords.size(); ++c) {
    chord_at[cd.chords[c].a] = static_cast<int>(c);
    chord_at[cd.chords[c].b] = static_cast<int>(c);
  }
  for (int p = 0; p < cd.endpoints; ++p) {
    int c = chord_at[p];
    const Chord& ch = cd.chords[c];
    bool first_over = ch.sign > 0;
    int cross_sign = ch.part == Part::inner ? ch.sign : -ch.sign;
    int x = 2 * c, y = 2 * c + 1;
    if (p == ch.b) std::swap(x, y);
    gc.entries.push_back({x, first_over, cross_sign});
    gc.entries.push_back({y, !first_over, cross_sign});
  }
  return gc;
}

std::vector<MatchedPair> induced_pairing(const BipartiteChordDiagram& cd) {
  std::vector<MatchedPair> ps;
  for (size_t c = 0; c < cd.chords.size(); ++c)
    ps.push_back({static_cast<int>(2 * c), static_cast<int>(2 * c + 1), cd.chords[c].sign});
  return ps;
}

BipartiteChordDiagram from_matched_diagram(const GaussCode& gc,
                                           const std::vector<MatchedPair>& pairing) {
  std::string v = gauss_violation(gc);
  if (!v.empty()) throw std::invalid_argument("invalid Gauss code: " + v);
  int n = gc.num_crossings();
  if (n % 2 != 0) throw std::invalid_argument("matched diagram needs an even crossing count");
  std::vector<int> pair_of(n, -1), pair_sign(n, 0);
  for (size_t i = 0; i < pairing.size(); ++i) {
    const MatchedPair& p = pairing[i];
    if (p.x < 0 || p.x >= n || p.y < 0 || p.y >= n || p.x == p.y ||
        (p.sign != 1 && p.sign != -1) || pair_of[p.x] != -1 || pair_of[p.y] != -1)
      throw std::invalid_argument("pairing is not a partition of the crossings");
    pair_of[p.x] = pair_of[p.y] = static_cast<int>(i);
    pair_sign[p.x] = pair_sign[p.y] = p.sign;
  }
  for (int x = 0; x < n; ++x)
    if (pair_of[x] == -1) throw std::invalid_argument("pairing does not cover all crossings");

  int len = 2 * n;
  // Blocks of two consecutive passes, phase 0 or 1; each block must hold
  // the two distinct crossings of one pair with the matched over/under
  // pattern (first pass over iff the pair sign is positive).
  for (int phase : {0, 1}) {
    bool ok = true;
    std::vector<int> block_pair, block_first;
    for (int b = 0; b < n && ok; ++b) {
      const GaussEntry& e1 = gc.entries[(2 * b + phase) % len];
      const GaussEntry& e2 = gc.entries[(2 * b + 1 + phase) % len];
      if (pair_of[e1.crossing] != pair_of[e2.crossing] || e1.crossing == e2.crossing ||
          e1.over != (pair_sign[e1.crossing] > 0) || e2.over != (pair_sign[e2.crossing] <= 0)) {
        ok = false;
      } else {
        block_pair.push_back(pair_of[e1.crossing]);
        block_first.push_back(e1.crossing);
      }
    }
    if (!ok) continue;
    BipartiteChordDiagram cd;
    cd.endpoints = n;
    std::vector<std::vector<int>> seen_at(pairing.size());
    for (int b = 0; b < n; ++b) seen_at[block_pair[b]].push_back(b);
    for (size_t pi = 0; pi < pairing.size(); ++pi) {
      if (seen_at[pi].size() != 2) throw std::logic_error("matched blocks miscounted");
      int a = seen_at[pi][0], bb = seen_at[pi][1];
      // The antiparallel clasp is met in opposite crossing order from its
      // two sides.
      if (block_first[a] == block_first[bb]) {
        ok = false;
        break;
      }
      int sigma = pairing[pi].sign;
      int cross = gc.entries[(2 * a + phase) % len].sign;
      Part part = cross == sigma ? Part::inner : Part::outer;
      cd.chords.push_back({a, bb, part, sigma});
    }
    if (!ok) continue;
    std::sort(cd.chords.begin(), cd.chords.end());
    auto bad = validate(cd);
    if (bad) throw std::invalid_argument("reconstructed diagram invalid: " + *bad);
    return cd;
  }
  throw std::invalid_argument("pairing is not of matched type (no adjacent clasp blocks)");
}

}  // namespace bipknot
