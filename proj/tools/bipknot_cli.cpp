// bipknot: exact Alexander-ideal invariants, non-bipartiteness
// certification, and bipartite chord-diagram search for knots.
//
// JSON reports go to stdout (the machine contract); a short human table
// goes to stderr.  Exit codes: 0 success, 2 parse/usage error, 3 internal
// validation failure (two computation routes disagreed).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "bipknot/report.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<bipknot::TableEntry> load_inputs(const std::string& table_file,
                                             const std::string& pd_text) {
  if (!table_file.empty()) return bipknot::ingest_table_file(table_file);
  return {{"pd", bipknot::parse_pd(pd_text)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipartite-knot obstruction toolkit"};
  app.require_subcommand(1);

  std::string table_file, pd_text, chords_file, target, convert_to = "gauss";
  int m_max = 3;
  std::vector<int> max_chords{4, 4};
  bool no_timing = false;
  std::vector<int> self_max{3, 3};
  bool inject_fault = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--no-timing", no_timing, "omit timing fields from the JSON report");
  };

  CLI::App* inv = app.add_subcommand("invariants", "Delta, I_2 and Conway-z^2 status");
  inv->add_option("--table", table_file, "knot table JSON file");
  inv->add_option("--pd", pd_text, "single PD code, e.g. \"X[1,5,2,4] ...\"");
  inv->add_option("--chords", chords_file, "bipartite chord diagram file");
  add_common(inv);

  CLI::App* cert = app.add_subcommand("certify", "non-bipartiteness certificates");
  cert->add_option("--table", table_file, "knot table JSON file")->required();
  cert->add_option("--m-max", m_max, "largest ideal index to try");
  add_common(cert);

  CLI::App* search = app.add_subcommand("search", "bipartite diagrams matching a table knot");
  search->add_option("--target", target, "knot name in the table")->required();
  search->add_option("--table", table_file, "knot table JSON file")->required();
  search->add_option("--max-chords", max_chords, "inner and outer chord bounds")
      ->expected(2);
  add_common(search);

  CLI::App* conv = app.add_subcommand("convert", "chord diagram to gauss/pd code");
  conv->add_option("--chords", chords_file, "bipartite chord diagram file")->required();
  conv->add_option("--to", convert_to, "output format: gauss or pd");

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "cross-validate the Seifert block rule against the oracle");
  selfcheck->add_option("--max", self_max, "inner and outer part-size bounds")->expected(2);
  selfcheck->add_flag("--inject-fault", inject_fault,
                      "mis-wire the rule on purpose; must abort with exit 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) {
      if (!chords_file.empty()) {
        bipknot::BipartiteChordDiagram cd = bipknot::parse_chords(slurp(chords_file));
        bipknot::RunReport rep;
        rep.command = "invariants";
        rep.include_timing = !no_timing;
        rep.records.push_back(bipknot::analyze_chords(chords_file, cd));
        std::cout << rep.to_json();
        std::cerr << rep.to_table();
      } else {
        if (table_file.empty() && pd_text.empty())
          throw std::invalid_argument("one of --table, --pd, --chords is required");
        bipknot::RunReport rep = bipknot::run_invariants(load_inputs(table_file, pd_text));
        rep.include_timing = !no_timing;
        std::cout << rep.to_json();
        std::cerr << rep.to_table();
      }
    } else if (cert->parsed()) {
      bipknot::RunReport rep =
          bipknot::run_certify(bipknot::ingest_table_file(table_file), m_max);
      rep.include_timing = !no_timing;
      std::cout << rep.to_json();
      std::cerr << rep.to_table();
    } else if (search->parsed()) {
      bipknot::SearchReport rep = bipknot::run_search(
          target, bipknot::ingest_table_file(table_file), max_chords[0], max_chords[1]);
      rep.include_timing = !no_timing;
      std::cout << rep.to_json();
      std::cerr << rep.to_table();
    } else if (conv->parsed()) {
      bipknot::BipartiteChordDiagram cd = bipknot::parse_chords(slurp(chords_file));
      if (auto bad = bipknot::validate(cd))
        throw std::invalid_argument("invalid chord diagram: " + *bad);
      bipknot::GaussCode gc = bipknot::to_gauss_code(cd);
      if (convert_to == "gauss") {
        for (const bipknot::GaussEntry& e : gc.entries)
          std::cout << (e.over ? "O" : "U") << e.crossing + 1 << (e.sign > 0 ? "+" : "-") << " ";
        std::cout << "\n";
      } else if (convert_to == "pd") {
        std::cout << bipknot::render_pd(bipknot::gauss_to_pd(gc)) << "\n";
      } else {
        throw std::invalid_argument("unknown conversion format: " + convert_to);
      }
    } else if (selfcheck->parsed()) {
      bipknot::self_check(self_max[0], self_max[1], inject_fault);
      std::cout << "{\n  \"command\": \"selfcheck\",\n  \"result\": \"ok\"\n}\n";
    }
  } catch (const bipknot::internal_check_error& e) {
    std::cerr << "internal validation failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
