// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/knotdata.hpp"
#include "adjlab/obstruct.hpp"

namespace adjlab {

struct ClassifyConfig {
  double threshold = kDefaultThreshold;
  unsigned jobs = 1;
  std::set<std::string> known;  // knots with an exhibited 2-adjacency set
  std::vector<LiftRecord> lifts;
};

// Runs every filter (classical ones, then floer_torres when a lift is
// available).  eliminated_by lists the failing filters in attribution order.
ObstructionReport classify_knot(const KnotRecord& record, const ClassifyConfig& config);

// Reports sorted by knot_name_less; identical for every jobs setting.
std::vector<ObstructionReport> classify_table(const std::vector<KnotRecord>& table,
                                              const ClassifyConfig& config);

struct ClassifySummary {
  std::size_t total = 0;
  std::size_t known = 0;
  std::size_t obstructed = 0;
  std::size_t unresolved = 0;
  std::map<std::string, std::size_t> attributed;  // first failing filter -> count
};

ClassifySummary summarize(const std::vector<ObstructionReport>& reports);
nlohmann::json to_json(const ClassifySummary& s);

// Human-readable trace: every filter verdict, then the Floer pipeline's
// d-invariants, V solutions and root evaluations when it ran.
std::string drilldown(const KnotRecord& record, const ClassifyConfig& config);

// ADJLAB_FIXTURES, else the source tree's fixtures/ directory.
std::filesystem::path fixtures_dir();

}  // namespace adjlab
