// SPDX-License-Identifier: Apache-2.0
// adjlab: classification runs, drill-downs and single computations.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "adjlab/classify.hpp"
#include "adjlab/dinv.hpp"
#include "adjlab/errors.hpp"
#include "adjlab/seifert.hpp"
#include "adjlab/vsolver.hpp"

namespace fs = std::filesystem;
using namespace adjlab;

namespace {

struct Common {
  std::string table;
  std::string lifts;
  std::vector<std::string> known;
  std::string output;
  double threshold = kDefaultThreshold;
  unsigned jobs = 1;
  bool pretty = false;
};

void add_common(CLI::App* app, Common& c, bool table_flags) {
  if (table_flags) {
    app->add_option("--table", c.table, "knot table CSV (default: fixtures/knots_le12.csv)");
    app->add_option("--lifts", c.lifts, "lifts JSON (default: fixtures/lifts.json)");
    app->add_option("--known", c.known,
                    "name list(s) of knots with a known 2-adjacency set "
                    "(default: fixtures/two_adjacent_*.txt)");
    app->add_option("--threshold", c.threshold, "root test threshold")
        ->check(CLI::PositiveNumber);
  }
  app->add_option("--output,-o", c.output, "write output here instead of stdout");
  app->add_flag("--pretty", c.pretty, "indent JSON output");
}

std::string dump(const nlohmann::json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

class Out {
 public:
  explicit Out(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

ClassifyConfig make_config(const Common& c) {
  ClassifyConfig cfg;
  cfg.threshold = c.threshold;
  cfg.jobs = c.jobs;
  fs::path lifts = c.lifts.empty() ? fixtures_dir() / "lifts.json" : fs::path(c.lifts);
  if (!c.lifts.empty() || fs::exists(lifts)) cfg.lifts = load_lifts(lifts);
  std::vector<fs::path> known;
  if (c.known.empty()) {
    for (const char* f : {"two_adjacent_le12.txt", "two_adjacent_13.txt"})
      if (fs::exists(fixtures_dir() / f)) known.push_back(fixtures_dir() / f);
  } else {
    known.assign(c.known.begin(), c.known.end());
  }
  for (const auto& k : known)
    for (auto& n : load_name_list(k)) cfg.known.insert(std::move(n));
  return cfg;
}

std::vector<KnotRecord> load_default_table(const Common& c) {
  return load_table(c.table.empty() ? fixtures_dir() / "knots_le12.csv" : fs::path(c.table));
}

// Looks in --table, else in the shipped tables.
std::optional<KnotRecord> lookup(const Common& c, const std::string& name) {
  std::vector<fs::path> paths;
  if (!c.table.empty())
    paths.push_back(c.table);
  else
    paths = {fixtures_dir() / "knots_le12.csv", fixtures_dir() / "knots_13.csv"};
  for (const auto& p : paths) {
    auto table = load_table(p);
    if (const KnotRecord* r = find_knot(table, name)) return *r;
  }
  return std::nullopt;
}

std::vector<Rational> parse_rationals(const nlohmann::json& j) {
  return dinv_from_json(j).values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-adjacency obstruction toolkit"};
  app.require_subcommand(1);

  Common common;

  auto* classify = app.add_subcommand("classify", "classify every knot of a table");
  add_common(classify, common, true);
  classify->add_option("--jobs,-j", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  bool summary_only = false;
  classify->add_flag("--summary-only", summary_only, "print only the summary block");

  std::string knot_name;
  auto* drill = app.add_subcommand("drilldown", "trace every filter for one knot");
  drill->add_option("knot", knot_name, "knot name, e.g. 11a_255")->required();
  add_common(drill, common, true);

  auto* dinv = app.add_subcommand("dinv", "d-invariants");
  dinv->require_subcommand(1);
  long p = 0, q = 0;
  auto* dlens = dinv->add_subcommand("lens", "d(L(p,q), i) for i = 0..p-1, one per line");
  dlens->add_option("p", p)->required();
  dlens->add_option("q", q)->required();
  auto* dsurg = dinv->add_subcommand("surgery", "d(S^3_{p/q}(J), i) from the Alexander polynomial of J");
  dsurg->add_option("p", p)->required();
  dsurg->add_option("q", q)->required();
  std::string alex_text;
  dsurg->add_option("--alexander", alex_text, "symmetrized coefficients as a JSON array, or a Laurent polynomial in t")
      ->required();

  auto* vsolve = app.add_subcommand("vsolve", "all V sequences consistent with d-invariants");
  long lens_d = 0;
  std::string sigma_path;
  vsolve->add_option("--lens", lens_d, "odd determinant d (lens space L(d,2))")->required();
  vsolve->add_option("--sigma", sigma_path, "JSON array of \"num/den\" d-invariants")->required();
  add_common(vsolve, common, false);

  auto* obstruct = app.add_subcommand("obstruct", "run the Floer/root-of-unity pipeline on one knot");
  obstruct->add_option("--knot", knot_name)->required();
  add_common(obstruct, common, true);

  auto* construct = app.add_subcommand("construct", "Seifert matrix construction");
  TangleParams tp;
  construct->add_option("--linking", tp.linking)->required();
  construct->add_option("--h1", tp.h1)->required()->check(CLI::IsMember({-1, 1}));
  construct->add_option("--h2", tp.h2)->required()->check(CLI::IsMember({-1, 1}));
  bool inter = false, non_inter = false;
  auto* oi = construct->add_flag("--interleaved", inter);
  auto* on = construct->add_flag("--non-interleaved", non_inter);
  oi->excludes(on);
  add_common(construct, common, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      std::vector<KnotRecord> table;
      ClassifyConfig cfg;
      try {
        table = load_default_table(common);
        cfg = make_config(common);
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      auto reports = classify_table(table, cfg);
      Out out(common.output);
      if (!summary_only)
        for (const auto& r : reports) out.stream() << dump(to_json(r), common.pretty) << "\n";
      out.stream() << dump({{"summary", to_json(summarize(reports))}}, common.pretty) << "\n";
      return 0;
    }
    if (*drill) {
      auto rec = lookup(common, knot_name);
      if (!rec) {
        std::cerr << "unknown knot " << knot_name << "\n";
        return 2;
      }
      Out out(common.output);
      out.stream() << drilldown(*rec, make_config(common));
      return 0;
    }
    if (*dlens) {
      Out out(common.output);
      for (const auto& v : lens_d_vector(p, q).values) out.stream() << v.str() << "\n";
      return 0;
    }
    if (*dsurg) {
      SymmetrizedAlex a;
      std::string t = alex_text;
      if (t.find('[') != std::string::npos)
        a = alex_from_json(nlohmann::json::parse(t));
      else
        a = symmetrize(parse_laurent(t, 't'));
      Out out(common.output);
      for (const auto& v : niwu_surgery_d(p, q, v_from_alex(a)).values)
        out.stream() << v.str() << "\n";
      return 0;
    }
    if (*vsolve) {
      std::ifstream in(sigma_path);
      if (!in) throw Error("cannot open " + sigma_path);
      auto sigma = parse_rationals(nlohmann::json::parse(in, nullptr, true, true));
      DInvariantVector lens = lens_d_vector(lens_d, 2);
      DInvariantVector s{SurgeredSpace{"", lens_d, 2}, sigma};
      VSolution sol = admissible_v_sequences(lens, s, 2);
      Out out(common.output);
      for (const auto& v : sol.sequences) out.stream() << v.str() << "\n";
      out.stream() << (sol.sequences.empty() ? "no consistent sequence"
                       : sol.unique          ? "unique"
                                             : "not unique")
                   << " (" << sol.sequences.size() << " sequences, " << sol.nodes << " nodes)\n";
      return 0;
    }
    if (*obstruct) {
      auto rec = lookup(common, knot_name);
      if (!rec) {
        std::cerr << "unknown knot " << knot_name << "\n";
        return 2;
      }
      ClassifyConfig cfg = make_config(common);
      FilterOutcome f = filter_floer(*rec, find_lift(cfg.lifts, rec->name), common.threshold);
      nlohmann::json j = to_json(f);
      j["knot"] = rec->name;
      Out out(common.output);
      out.stream() << dump(j, common.pretty) << "\n";
      return 0;
    }
    if (*construct) {
      if (!inter && !non_inter) {
        std::cerr << "construct: give --interleaved or --non-interleaved\n";
        return 1;
      }
      tp.interleaved = inter;
      Out out(common.output);
      out.stream() << dump(construct_report(tp), common.pretty) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
