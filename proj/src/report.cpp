#include "bipknot/report.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

#include "bipknot/matrix.hpp"

namespace bipknot {

namespace {

long long now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

nlohmann::json record_json(const KnotRecord& r, bool include_timing) {
  nlohmann::json doc;
  doc["name"] = r.name;
  doc["alexander"] = r.alexander;
  doc["conway_z2"] = r.conway_z2 ? nlohmann::json(*r.conway_z2) : nlohmann::json();
  doc["ideal_2"] = r.ideal2;
  if (!r.verdict.empty()) {
    doc["verdict"] = r.verdict;
    doc["status"] = r.status;
  }
  if (r.certificate &&
      r.certificate->verdict == Certificate::Verdict::certified_not_bipartite) {
    doc["certificate"] = nlohmann::json::parse(r.certificate->to_json());
  }
  if (include_timing) doc["timing_ms"] = r.timing_ms;
  return doc;
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::json doc;
  doc["command"] = command;
  doc["records"] = nlohmann::json::array();
  for (const KnotRecord& r : records) doc["records"].push_back(record_json(r, include_timing));
  return doc.dump(2) + "\n";
}

std::string RunReport::to_table() const {
  std::ostringstream os;
  os << "name            verdict                  alexander\n";
  for (const KnotRecord& r : records) {
    std::string v = r.verdict.empty() ? "-" : r.verdict;
    os << r.name;
    for (size_t i = r.name.size(); i < 16; ++i) os << ' ';
    os << v;
    for (size_t i = v.size(); i < 25; ++i) os << ' ';
    os << r.alexander << "\n";
  }
  return os.str();
}

KnotRecord analyze_knot(const std::string& name, const PDCode& pd, bool certify, int m_max) {
  long long t0 = now_ms();
  KnotRecord rec;
  rec.name = name;
  AlexanderData ad = fox_alexander(pd);
  LaurentPoly delta = alexander_polynomial(ad);
  rec.alexander = delta.render();
  if (auto key = conway_key(delta)) rec.conway_z2 = key->render();
  LaurentIdeal i2 = alexander_ideal(ad, 2);
  for (const LaurentPoly& g : i2.generators()) rec.ideal2.push_back(g.render());
  if (certify) {
    Certificate cert = certify_not_bipartite(pd, m_max, name);
    bool ok = cert.verdict == Certificate::Verdict::certified_not_bipartite;
    rec.verdict = ok ? "certified_not_bipartite" : "no_certificate";
    rec.status = ok ? "not_bipartite" : "unknown";
    rec.certificate = std::move(cert);
  }
  rec.timing_ms = now_ms() - t0;
  return rec;
}

KnotRecord analyze_chords(const std::string& name, const BipartiteChordDiagram& cd) {
  long long t0 = now_ms();
  auto bad = validate(cd);
  if (bad) throw std::invalid_argument("invalid chord diagram: " + *bad);
  LaurentPoly oracle = alexander_polynomial(fox_alexander(to_gauss_code(cd)));
  LaurentPoly via_blocks = alexander_polynomial(bipartite_alexander(cd));
  LaurentPoly via_conway = canonical_unit_form(substitute_z2(conway_z2(cd)));
  if (via_blocks != oracle || via_conway != oracle)
    throw internal_check_error("chord-diagram routes disagree for " + name + ": oracle " +
                               oracle.render() + ", blocks " + via_blocks.render() +
                               ", conway " + via_conway.render());
  KnotRecord rec;
  rec.name = name;
  rec.alexander = oracle.render();
  rec.conway_z2 = conway_z2(cd).render();
  AlexanderData ad = bipartite_alexander(cd);
  LaurentIdeal i2 = alexander_ideal(ad, 2);
  for (const LaurentPoly& g : i2.generators()) rec.ideal2.push_back(g.render());
  rec.timing_ms = now_ms() - t0;
  return rec;
}

RunReport run_invariants(const std::vector<TableEntry>& entries) {
  RunReport rep;
  rep.command = "invariants";
  for (const TableEntry& e : entries) rep.records.push_back(analyze_knot(e.name, e.pd, false));
  return rep;
}

RunReport run_certify(const std::vector<TableEntry>& entries, int m_max) {
  RunReport rep;
  rep.command = "certify";
  for (const TableEntry& e : entries)
    rep.records.push_back(analyze_knot(e.name, e.pd, true, m_max));
  return rep;
}

std::string SearchReport::to_json() const {
  nlohmann::json doc;
  doc["command"] = "search";
  doc["target"] = target;
  doc["max_inner"] = max_inner;
  doc["max_outer"] = max_outer;
  doc["alexander"] = result.alexander.render();
  doc["z2_expressible"] = result.z2_expressible;
  if (result.z2_expressible) doc["conway_z2"] = result.key.render();
  doc["candidates"] = nlohmann::json::array();
  for (const BipartiteChordDiagram& cd : result.candidates)
    doc["candidates"].push_back(render_chords(cd));
  if (include_timing) doc["timing_ms"] = timing_ms;
  return doc.dump(2) + "\n";
}

std::string SearchReport::to_table() const {
  std::ostringstream os;
  os << "target " << target << ": ";
  if (!result.z2_expressible)
    os << "Alexander polynomial not expressible through z^2\n";
  else
    os << result.candidates.size() << " candidate diagram(s) for Conway key "
       << result.key.render() << "\n";
  return os.str();
}

SearchReport run_search(const std::string& target, const std::vector<TableEntry>& entries,
                        int max_inner, int max_outer, size_t per_key_cap) {
  const TableEntry* hit = nullptr;
  for (const TableEntry& e : entries)
    if (e.name == target) hit = &e;
  if (!hit) throw std::invalid_argument("unknown target name: " + target);
  SearchReport rep;
  rep.target = target;
  rep.max_inner = max_inner;
  rep.max_outer = max_outer;
  long long t0 = now_ms();
  AlexanderData ad = fox_alexander(hit->pd);
  LaurentPoly delta = alexander_polynomial(ad);
  rep.result.alexander = delta;
  if (auto key = conway_key(delta)) {
    rep.result.z2_expressible = true;
    rep.result.key = *key;
    auto found = search_conway({*key}, max_inner, max_outer, per_key_cap);
    rep.result.candidates = found[*key];
  }
  rep.timing_ms = now_ms() - t0;
  return rep;
}

void self_check(int max_in, int max_out, bool perturb_rule) {
  FRule rule = pinned_f_rule();
  if (perturb_rule) rule.gamma = 1;  // deliberately outside the calibrated set
  for (int a = 0; a <= max_in; ++a)
    for (int b = 0; b <= max_out; ++b)
      for (const BipartiteChordDiagram& cd : enumerate_diagrams(a, b)) {
        LaurentPoly oracle = alexander_polynomial(fox_alexander(to_gauss_code(cd)));
        SeifertBlockMatrix sb = block_seifert_with_rule(cd, rule);
        LaurentPoly blocks =
            canonical_unit_form(det(assemble_alexander(sb.seifert())));
        LaurentPoly conway = canonical_unit_form(substitute_z2(conway_z2(cd)));
        if (blocks != oracle || conway != oracle)
          throw internal_check_error("Seifert block rule disagrees with the Fox oracle on " +
                                     render_chords(cd));
      }
}

}  // namespace bipknot
