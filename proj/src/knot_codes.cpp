#include "bipknot/knot_codes.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bipknot {

namespace {

int next_arc(int x, int two_n) { return x % two_n + 1; }

// +1 if the over-strand runs d -> b, -1 if it runs b -> d.
int crossing_sign(const PDCrossing& x, int two_n) {
  bool pos = x.b == next_arc(x.d, two_n);
  bool neg = x.d == next_arc(x.b, two_n);
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  if (pos && neg) return 1;  // 1-crossing kink: both readings give the unknot
  throw std::invalid_argument("PD crossing has non-consecutive over-strand labels");
}

// Incoming passes per arc label: (crossing index, is_over).
std::vector<std::pair<int, bool>> incoming_passes(const PDCode& pd) {
  int n = pd.size();
  int two_n = 2 * n;
  std::map<int, int> count;
  for (const PDCrossing& x : pd.crossings)
    for (int lbl : {x.a, x.b, x.c, x.d}) {
      if (lbl < 1 || lbl > two_n)
        throw std::invalid_argument("PD arc label out of range 1..2n");
      ++count[lbl];
    }
  for (int lbl = 1; lbl <= two_n; ++lbl)
    if (count[lbl] != 2)
      throw std::invalid_argument("PD arc label must appear exactly twice");
  std::vector<std::pair<int, bool>> in(two_n + 1, {-1, false});
  for (int i = 0; i < n; ++i) {
    const PDCrossing& x = pd.crossings[i];
    if (x.c != next_arc(x.a, two_n))
      throw std::invalid_argument("PD under-strand labels not consecutive");
    int s = crossing_sign(x, two_n);
    int over_in = s > 0 ? x.d : x.b;
    for (auto [lbl, over] : {std::pair(x.a, false), std::pair(over_in, true)}) {
      if (in[lbl].first != -1)
        throw std::invalid_argument("PD arc is incoming at two crossings");
      in[lbl] = {i, over};
    }
  }
  for (int lbl = 1; lbl <= two_n; ++lbl)
    if (in[lbl].first == -1)
      throw std::invalid_argument("PD code does not close into a single component");
  return in;
}

void validate_pd(const PDCode& pd) {
  if (!pd.is_unknot()) incoming_passes(pd);
}

}  // namespace

PDCode parse_pd(const std::string& text) {
  PDCode pd;
  size_t i = 0;
  bool unknot_token = false;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty PD code (use the token \"unknot\")");
  while (i < text.size()) {
    if (text.compare(i, 6, "unknot") == 0) {
      unknot_token = true;
      i += 6;
      skip_ws();
      continue;
    }
    if (text[i] != 'X') throw std::invalid_argument("expected 'X[' in PD code");
    ++i;
    if (i >= text.size() || text[i] != '[') throw std::invalid_argument("expected '[' in PD code");
    ++i;
    int vals[4];
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw std::invalid_argument("expected arc label in PD code");
      vals[k] = std::stoi(text.substr(i, j - i));
      i = j;
      skip_ws();
      if (k < 3) {
        if (i >= text.size() || text[i] != ',')
          throw std::invalid_argument("expected ',' in PD crossing");
        ++i;
      }
    }
    if (i >= text.size() || text[i] != ']') throw std::invalid_argument("expected ']' in PD crossing");
    ++i;
    pd.crossings.push_back({vals[0], vals[1], vals[2], vals[3]});
    skip_ws();
  }
  if (unknot_token && !pd.crossings.empty())
    throw std::invalid_argument("\"unknot\" cannot be mixed with crossings");
  validate_pd(pd);
  return pd;
}

std::string render_pd(const PDCode& pd) {
  if (pd.is_unknot()) return "unknot";
  std::ostringstream out;
  for (int i = 0; i < pd.size(); ++i) {
    const PDCrossing& x = pd.crossings[i];
    if (i) out << ' ';
    out << "X[" << x.a << ',' << x.b << ',' << x.c << ',' << x.d << ']';
  }
  return out.str();
}

std::string gauss_violation(const GaussCode& gc) {
  int n = gc.num_crossings();
  if (static_cast<int>(gc.entries.size()) != 2 * n) return "odd number of passes";
  std::map<int, std::vector<const GaussEntry*>> by_id;
  for (const GaussEntry& e : gc.entries) {
    if (e.sign != 1 && e.sign != -1) return "crossing sign must be +-1";
    by_id[e.crossing].push_back(&e);
  }
  if (static_cast<int>(by_id.size()) != n) return "crossing ids must cover exactly n values";
  for (auto& [id, es] : by_id) {
    if (es.size() != 2) return "crossing " + std::to_string(id) + " does not appear exactly twice";
    if (es[0]->over == es[1]->over)
      return "crossing " + std::to_string(id) + " lacks an over/under pair";
    if (es[0]->sign != es[1]->sign)
      return "crossing " + std::to_string(id) + " has inconsistent signs";
  }
  return "";
}

GaussCode pd_to_gauss(const PDCode& pd) {
  GaussCode gc;
  if (pd.is_unknot()) return gc;
  auto in = incoming_passes(pd);
  int two_n = 2 * pd.size();
  std::map<int, int> id;  // crossing index -> dense 0-based id in order of first visit
  for (int arc = 1; arc <= two_n; ++arc) {
    auto [ci, over] = in[arc];
    if (!id.count(ci)) id[ci] = static_cast<int>(id.size());
    gc.entries.push_back({id[ci], over, crossing_sign(pd.crossings[ci], two_n)});
  }
  return gc;
}

namespace {

struct Rotations {
  // slot_arc[v][s], slot_out[v][s]: CCW slots per crossing.
  std::vector<std::array<int, 4>> arc;
  std::vector<std::array<bool, 4>> out;
  // Position of each directed arc end: where arc j arrives / leaves.
  std::vector<std::pair<int, int>> head, tail;  // arc -> (crossing, slot)
};

Rotations build_rotations(const GaussCode& gc) {
  int n = gc.num_crossings();
  int two_n = 2 * n;
  std::vector<int> over_at(n, -1), under_at(n, -1), sign(n, 0);
  for (int i = 0; i < two_n; ++i) {
    const GaussEntry& e = gc.entries[i];
    (e.over ? over_at : under_at)[e.crossing] = i;
    sign[e.crossing] = e.sign;
  }
  Rotations r;
  r.arc.resize(n);
  r.out.resize(n);
  r.head.assign(two_n, {-1, -1});
  r.tail.assign(two_n, {-1, -1});
  for (int v = 0; v < n; ++v) {
    int u = under_at[v], o = over_at[v];
    int u_in = u, u_out = (u + 1) % two_n;
    int o_in = o, o_out = (o + 1) % two_n;
    // CCW from incoming under: positive (U_in, O_out, U_out, O_in),
    // negative (U_in, O_in, U_out, O_out).
    if (sign[v] > 0) {
      r.arc[v] = {u_in, o_out, u_out, o_in};
      r.out[v] = {false, true, true, false};
    } else {
      r.arc[v] = {u_in, o_in, u_out, o_out};
      r.out[v] = {false, false, true, true};
    }
    for (int s = 0; s < 4; ++s) {
      if (r.out[v][s])
        r.tail[r.arc[v][s]] = {v, s};
      else
        r.head[r.arc[v][s]] = {v, s};
    }
  }
  return r;
}

}  // namespace

bool gauss_realizable(const GaussCode& gc) {
  if (!gauss_violation(gc).empty()) return false;
  int n = gc.num_crossings();
  if (n == 0) return true;
  int two_n = 2 * n;
  Rotations r = build_rotations(gc);
  // Count faces of the rotation system; planar iff V - E + F = 2.
  std::set<std::pair<int, bool>> seen;  // (arc, forward)
  int faces = 0;
  for (int arc0 = 0; arc0 < two_n; ++arc0)
    for (bool fwd0 : {true, false}) {
      if (seen.count({arc0, fwd0})) continue;
      ++faces;
      int arc = arc0;
      bool fwd = fwd0;
      do {
        seen.insert({arc, fwd});
        auto [v, s] = fwd ? r.head[arc] : r.tail[arc];
        int s2 = (s + 1) % 4;
        arc = r.arc[v][s2];
        fwd = r.out[v][s2];
      } while (!(arc == arc0 && fwd == fwd0));
    }
  return faces == n + 2;
}

PDCode gauss_to_pd(const GaussCode& gc) {
  std::string v = gauss_violation(gc);
  if (!v.empty()) throw std::invalid_argument("invalid Gauss code: " + v);
  if (!gauss_realizable(gc)) throw std::invalid_argument("Gauss code is not realizable");
  PDCode pd;
  int n = gc.num_crossings();
  if (n == 0) return pd;
  int two_n = 2 * n;
  std::vector<int> over_at(n, -1), under_at(n, -1), sign(n, 0);
  for (int i = 0; i < two_n; ++i) {
    const GaussEntry& e = gc.entries[i];
    (e.over ? over_at : under_at)[e.crossing] = i;
    sign[e.crossing] = e.sign;
  }
  auto in_lbl = [&](int entry) { return entry + 1; };
  auto out_lbl = [&](int entry) { return (entry + 1) % two_n + 1; };
  for (int v2 = 0; v2 < n; ++v2) {
    int u = under_at[v2], o = over_at[v2];
    if (sign[v2] > 0)
      pd.crossings.push_back({in_lbl(u), out_lbl(o), out_lbl(u), in_lbl(o)});
    else
      pd.crossings.push_back({in_lbl(u), in_lbl(o), out_lbl(u), out_lbl(o)});
  }
  validate_pd(pd);
  return pd;
}

std::vector<TableEntry> ingest_table(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("knot table is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("knot table must be a JSON array");
  std::vector<TableEntry> table;
  std::set<std::string> names;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item.contains("pd") ||
        !item["name"].is_string() || !item["pd"].is_array())
      throw std::invalid_argument("knot table entry must be {\"name\": str, \"pd\": [[...]]}");
    TableEntry e;
    e.name = item["name"].get<std::string>();
    if (!names.insert(e.name).second)
      throw std::invalid_argument("duplicate knot name: " + e.name);
    for (const auto& row : item["pd"]) {
      if (!row.is_array() || row.size() != 4)
        throw std::invalid_argument("PD crossing must be a 4-tuple in entry " + e.name);
      e.pd.crossings.push_back(
          {row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()});
    }
    try {
      validate_pd(e.pd);
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("entry " + e.name + ": " + err.what());
    }
    table.push_back(std::move(e));
  }
  return table;
}

std::vector<TableEntry> ingest_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open knot table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ingest_table(buf.str());
}

}  // namespace bipknot
