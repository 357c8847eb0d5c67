// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/dinv.hpp"
#include "adjlab/filters.hpp"
#include "adjlab/knotdata.hpp"
#include "adjlab/vsolver.hpp"

namespace adjlab {

inline constexpr double kDefaultThreshold = 1e-6;

// Sigma(K) = S^3_{slope_sign * d/2}(J) for the lift J of an unknotting
// crossing of sign crossing_sign.  use_mirror: the pipeline works with
// Sigma(-K) = S^3_{+d/2}(-J) instead.
struct SlopeDescriptor {
  int epsilon = 1;
  int slope_sign = -1;
  bool use_mirror = false;
  std::string str() const;
};

SlopeDescriptor surgery_sign(int sigma, int crossing_sign);

struct RootWitness {
  long ell = 0;  // z = exp((2 ell + 1) pi i / omega)
  ComplexApprox value;
  double distance = 0.0;  // |value - 1|
};

struct CandidateWitness {
  SymmetrizedAlex candidate;
  std::vector<RootWitness> roots;
  bool fails = false;
};

struct TorresVerdict {
  bool obstructed = false;
  std::vector<CandidateWitness> witnesses;
};

TorresVerdict torres_obstruction(const std::vector<SymmetrizedAlex>& candidates, long omega,
                                 double threshold = kDefaultThreshold);

nlohmann::json to_json(const TorresVerdict& v);

// Lift of an unknotting crossing arc (or rational tangle replacement):
// S^3_{d/surgery_q}(J) is the branched double cover (trusted input).
struct LiftRecord {
  std::string knot;
  std::vector<long> dt_code;  // provenance only
  SymmetrizedAlex alexander;
  long surgery_q = 2;
  std::string note;
  std::optional<std::string> raw_alexander;             // as printed, before repair
  std::optional<SymmetrizedAlex> reported_inverse_alexander;  // printed candidate, if any
};

std::vector<LiftRecord> load_lifts(const std::filesystem::path& path);
std::vector<LiftRecord> lifts_from_json(const nlohmann::json& j);
const LiftRecord* find_lift(const std::vector<LiftRecord>& lifts, const std::string& knot);

enum class PipelineStatus {
  Obstructed,               // every candidate fails the root test
  ObstructedByInconsistency,  // no half-integral surgery is consistent
  NotObstructed,
  Vacuous,                  // omega = 0
  Inconclusive              // slope sign undetermined
};

std::string to_string(PipelineStatus s);

struct PipelineResult {
  PipelineStatus status = PipelineStatus::NotObstructed;
  DetForm form;
  SlopeDescriptor slope;
  std::optional<VSequence> lift_v;
  std::optional<DInvariantVector> lift_sigma;  // S^3_{d/q}(J) when q != 2
  std::optional<std::string> inversion_error;  // invert_niwu diagnostic
  std::optional<VSequence> inverted_v;
  std::optional<DInvariantVector> sigma;       // d-invariants at slope d/2
  std::optional<VSolution> solution;
  std::vector<SymmetrizedAlex> candidates;
  std::optional<TorresVerdict> torres;
  std::optional<TorresVerdict> lift_torres;    // root test on the q != 2 lift itself

  bool obstructed() const {
    return status == PipelineStatus::Obstructed ||
           status == PipelineStatus::ObstructedByInconsistency;
  }
};

PipelineResult floer_pipeline(const KnotRecord& record, const SymmetrizedAlex& lift_alex,
                              long lift_surgery_q, double threshold = kDefaultThreshold);

nlohmann::json to_json(const PipelineResult& r);

// floer_torres as a filter: inapplicable without L-space cover or lift data.
FilterOutcome filter_floer(const KnotRecord& record, const LiftRecord* lift,
                           double threshold = kDefaultThreshold);

}  // namespace adjlab
