#include "bipknot/search.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bipknot {

std::optional<IntPoly> conway_key(const LaurentPoly& delta) {
  if (delta.is_zero()) return std::nullopt;
  LaurentPoly c = canonical_unit_form(delta);
  int high = c.highest_exp();
  if (high % 2 != 0) return std::nullopt;
  LaurentPoly s = c.shifted(-high / 2);
  if (!s.is_symmetric()) return std::nullopt;
  if (s.eval(1) < 0) s = -s;
  return extract_z2(s);
}

namespace {

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

// Visits one canonical representative of every unsigned diagram shape
// with exactly (a, b) parts, skipping shapes already in `seen`.
template <class Fn>
void for_each_unsigned_shape(int a, int b, std::set<BipartiteChordDiagram>& seen, Fn&& fn) {
  int k = a + b;
  int m = 2 * k;
  std::vector<std::vector<int>> inner_sets;
  std::vector<int> cur;
  subsets(m, 2 * a, 0, cur, inner_sets);
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
        for (auto [x, y] : im) base.chords.push_back({x, y, Part::inner, 1});
        for (auto [x, y] : om) base.chords.push_back({x, y, Part::outer, 1});
        BipartiteChordDiagram u = canonicalize(base);
        if (!seen.insert(u).second) continue;
        fn(u);
      }
  }
}

}  // namespace

SearchIndex build_index(int max_inner, int max_outer, int max_total) {
  if (max_inner < 0 || max_outer < 0) throw std::invalid_argument("negative part size");
  if (max_inner + max_outer > max_total) throw std::invalid_argument("enumeration bound exceeded");
  SearchIndex index;
  index.max_inner = max_inner;
  index.max_outer = max_outer;
  std::set<BipartiteChordDiagram> seen;
  for (int a = 0; a <= max_inner; ++a)
    for (int b = 0; b <= max_outer; ++b)
      for (const BipartiteChordDiagram& cd : enumerate_diagrams(a, b, max_total)) {
        if (!seen.insert(cd).second) continue;
        index.by_key[conway_z2(cd)].push_back(cd);
      }
  return index;
}

std::string SearchIndex::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& [key, diagrams] : by_key) {
    nlohmann::json entry;
    entry["conway"] = nlohmann::json::array();
    for (int d = 0; d <= key.degree(); ++d) entry["conway"].push_back(key.coeff(d).get_str());
    entry["diagrams"] = nlohmann::json::array();
    for (const BipartiteChordDiagram& cd : diagrams) entry["diagrams"].push_back(render_chords(cd));
    doc.push_back(std::move(entry));
  }
  return doc.dump(2);
}

MatchResult match_knot(const PDCode& knot, const SearchIndex& index) {
  MatchResult r;
  r.alexander = alexander_polynomial(fox_alexander(knot));
  auto key = conway_key(r.alexander);
  if (!key) return r;
  r.z2_expressible = true;
  r.key = *key;
  auto it = index.by_key.find(r.key);
  if (it != index.by_key.end()) r.candidates = it->second;
  return r;
}

std::map<IntPoly, std::vector<BipartiteChordDiagram>> search_conway(
    const std::set<IntPoly>& keys, int max_inner, int max_outer, size_t per_key_cap,
    int max_total) {
  if (max_inner < 0 || max_outer < 0) throw std::invalid_argument("negative part size");
  if (max_inner + max_outer > max_total) throw std::invalid_argument("enumeration bound exceeded");
  std::map<IntPoly, std::set<BipartiteChordDiagram>> found;
  for (const IntPoly& k : keys) found[k];
  std::set<BipartiteChordDiagram> seen_shapes;
  auto all_capped = [&] {
    for (const auto& [k, v] : found)
      if (v.size() < per_key_cap) return false;
    return true;
  };
  for (int a = 0; a <= max_inner && !all_capped(); ++a)
    for (int b = 0; b <= max_outer && !all_capped(); ++b)
      for_each_unsigned_shape(a, b, seen_shapes, [&](const BipartiteChordDiagram& shape) {
        int k = static_cast<int>(shape.chords.size());
        BipartiteChordDiagram cd = shape;
        for (int signs = 0; signs < (1 << k); ++signs) {
          for (int c = 0; c < k; ++c) cd.chords[c].sign = (signs >> c & 1) ? -1 : 1;
          IntPoly key = conway_z2(cd);
          auto it = found.find(key);
          if (it == found.end() || it->second.size() >= per_key_cap) continue;
          it->second.insert(canonicalize(cd));
        }
      });
  std::map<IntPoly, std::vector<BipartiteChordDiagram>> out;
  for (auto& [k, v] : found) out[k] = {v.begin(), v.end()};
  return out;
}

}  // namespace bipknot
