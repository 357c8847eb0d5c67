// SPDX-License-Identifier: Apache-2.0
#include "adjlab/obstruct.hpp"

#include <cmath>
#include <fstream>
#include <numbers>

#include "adjlab/errors.hpp"

namespace adjlab {

std::string SlopeDescriptor::str() const {
  std::string s = slope_sign > 0 ? "Sigma(K) = S^3_{+d/2}(J)" : "Sigma(K) = S^3_{-d/2}(J)";
  if (use_mirror) s += "; use Sigma(-K) = S^3_{+d/2}(-J)";
  return s;
}

SlopeDescriptor surgery_sign(int sigma, int crossing_sign) {
  if (sigma % 2 != 0) throw PreconditionError("signature must be even");
  if (sigma > 2 || sigma < -2)
    throw PreconditionError("|sigma| > 2 cannot be 2-adjacent");
  if (crossing_sign != 1 && crossing_sign != -1)
    throw PreconditionError("crossing sign must be +1 or -1");
  SlopeDescriptor d;
  d.epsilon = (sigma / 2) % 2 == 0 ? 1 : -1;
  // A negative crossing gives slope -epsilon d/2; a positive one is handled
  // on the mirror, which flips the orientation of Sigma(K).
  d.slope_sign = crossing_sign == -1 ? -d.epsilon : d.epsilon;
  d.use_mirror = d.slope_sign < 0;
  return d;
}

TorresVerdict torres_obstruction(const std::vector<SymmetrizedAlex>& candidates, long omega,
                                 double threshold) {
  if (omega < 1) throw PreconditionError("root test needs omega >= 1");
  if (candidates.empty()) throw PreconditionError("root test needs at least one candidate");
  if (!(threshold > 0)) throw PreconditionError("threshold must be positive");
  TorresVerdict v;
  v.obstructed = true;
  for (const auto& c : candidates) {
    CandidateWitness w;
    w.candidate = c;
    IntLaurentPoly p = c.to_laurent();
    for (long ell = 0; ell < omega; ++ell) {
      ComplexApprox z = laurent_eval_root_of_unity(p, 2 * ell + 1, 2 * omega);
      double dist = std::abs(z - ComplexApprox(1.0, 0.0));
      w.roots.push_back({ell, z, dist});
      if (dist > threshold) w.fails = true;
    }
    if (!w.fails) v.obstructed = false;
    v.witnesses.push_back(std::move(w));
  }
  return v;
}

namespace {

nlohmann::json complex_json(ComplexApprox z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json vseq_json(const VSequence& v) { return v.values(); }

}  // namespace

nlohmann::json to_json(const TorresVerdict& v) {
  nlohmann::json j;
  j["obstructed"] = v.obstructed;
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : v.witnesses) {
    nlohmann::json wj;
    wj["candidate"] = to_json(w.candidate);
    wj["fails"] = w.fails;
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : w.roots)
      roots.push_back({{"ell", r.ell}, {"value", complex_json(r.value)}, {"distance", r.distance}});
    wj["roots"] = roots;
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  return j;
}

std::vector<LiftRecord> lifts_from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_object() && j.contains("lifts") ? j.at("lifts") : j;
  if (!arr.is_array()) throw DomainError("lifts must be a JSON array");
  std::vector<LiftRecord> out;
  for (const auto& e : arr) {
    LiftRecord r;
    try {
      r.knot = e.at("knot").get<std::string>();
      if (e.contains("dt_code")) r.dt_code = e.at("dt_code").get<std::vector<long>>();
      r.alexander = alex_from_json(e.at("alexander"));
      r.surgery_q = e.at("surgery_q").get<long>();
      if (e.contains("note")) r.note = e.at("note").get<std::string>();
      if (e.contains("raw_alexander")) r.raw_alexander = e.at("raw_alexander").get<std::string>();
      if (e.contains("reported_inverse_alexander"))
        r.reported_inverse_alexander = alex_from_json(e.at("reported_inverse_alexander"));
    } catch (const nlohmann::json::exception& ex) {
      throw DomainError(std::string("bad lift record: ") + ex.what());
    }
    if (r.surgery_q < 1) throw DomainError("lift " + r.knot + ": surgery_q must be positive");
    if (r.alexander.at_one() != 1)
      throw DomainError("lift " + r.knot + ": Alexander polynomial must be 1 at t = 1");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<LiftRecord> load_lifts(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lifts file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("bad JSON in " + path.string() + ": " + e.what());
  }
  return lifts_from_json(j);
}

const LiftRecord* find_lift(const std::vector<LiftRecord>& lifts, const std::string& knot) {
  for (const auto& l : lifts)
    if (l.knot == knot) return &l;
  return nullptr;
}

std::string to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::Obstructed: return "obstructed";
    case PipelineStatus::ObstructedByInconsistency: return "obstructed_by_inconsistency";
    case PipelineStatus::NotObstructed: return "not_obstructed";
    case PipelineStatus::Vacuous: return "vacuous";
    case PipelineStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

PipelineResult floer_pipeline(const KnotRecord& record, const SymmetrizedAlex& lift_alex,
                              long q, double threshold) {
  if (!record.is_lspace_dbc)
    throw PreconditionError(record.name + ": branched double cover is not known to be an L-space");
  auto form = det_form(record.determinant);
  if (!form) throw PreconditionError(record.name + ": determinant is not 4w^2 +- 1");
  if (q < 1) throw PreconditionError("surgery denominator must be positive");

  PipelineResult res;
  res.form = *form;
  if (form->omega == 0) {
    res.status = PipelineStatus::Vacuous;
    return res;
  }

  // Crossing signs of a 2-adjacency set: sigma = +2 forces negative
  // crossings, -2 positive ones; a 4w^2+1 determinant forces one of each,
  // so positive d/2 surgery on Sigma(K) must be obstructed.
  int crossing_sign = 0;
  if (record.signature == 2) crossing_sign = -1;
  if (record.signature == -2) crossing_sign = 1;
  if (record.signature == 0 && form->sign == DetSign::PlusOne) crossing_sign = 1;
  if (crossing_sign == 0) {
    // same-sign crossings with sigma = 0: both slope signs are possible and
    // one lift covers only one of them
    res.status = PipelineStatus::Inconclusive;
    return res;
  }
  res.slope = surgery_sign(record.signature, crossing_sign);

  const long d = record.determinant;
  res.lift_v = v_from_alex(lift_alex);
  if (q == 2) {
    res.sigma = niwu_surgery_d(d, 2, *res.lift_v, record.name);
  } else {
    res.lift_sigma = niwu_surgery_d(d, q, *res.lift_v, record.name);
    res.lift_torres = torres_obstruction({lift_alex}, form->omega, threshold);
    try {
      DInvariantVector aligned = align_to_surgery_order(*res.lift_sigma, d, 2);
      res.inverted_v = invert_niwu(aligned, d, 2);
      res.sigma = aligned;
    } catch (const InconsistencyError& e) {
      res.inversion_error = e.what();
      res.sigma = *res.lift_sigma;  // multiset is all the solver needs
    }
  }

  res.solution = admissible_v_sequences(lens_d_vector(d, 2), *res.sigma, 2);
  if (res.solution->sequences.empty()) {
    res.status = PipelineStatus::ObstructedByInconsistency;
    return res;
  }
  for (const auto& v : res.solution->sequences) res.candidates.push_back(alex_from_v(v));
  res.torres = torres_obstruction(res.candidates, form->omega, threshold);
  res.status = res.torres->obstructed ? PipelineStatus::Obstructed : PipelineStatus::NotObstructed;
  return res;
}

nlohmann::json to_json(const PipelineResult& r) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  j["omega"] = r.form.omega;
  j["det_form"] = r.form.str();
  if (r.status == PipelineStatus::Vacuous || r.status == PipelineStatus::Inconclusive) return j;
  j["slope"] = {{"epsilon", r.slope.epsilon},
                {"slope_sign", r.slope.slope_sign},
                {"use_mirror", r.slope.use_mirror}};
  if (r.lift_v) j["lift_v"] = vseq_json(*r.lift_v);
  if (r.inversion_error) j["inversion_error"] = *r.inversion_error;
  if (r.inverted_v) j["inverted_v"] = vseq_json(*r.inverted_v);
  if (r.solution) {
    nlohmann::json seqs = nlohmann::json::array();
    for (const auto& v : r.solution->sequences) seqs.push_back(vseq_json(v));
    j["admissible_v"] = seqs;
    j["unique"] = r.solution->unique;
    j["candidate_count"] = r.solution->sequences.size();
  }
  if (r.torres) j["torres"] = to_json(*r.torres);
  if (r.lift_torres) j["lift_torres"] = to_json(*r.lift_torres);
  return j;
}

FilterOutcome filter_floer(const KnotRecord& record, const LiftRecord* lift, double threshold) {
  FilterOutcome f;
  f.id = kFilterFloer;
  if (!record.is_lspace_dbc) {
    f.status = FilterStatus::Inapplicable;
    f.reason = "branched double cover not known to be an L-space";
    return f;
  }
  if (!lift) {
    f.status = FilterStatus::Skipped;
    f.reason = "skipped: missing data (no lift)";
    return f;
  }
  auto form = det_form(record.determinant);
  if (!form) {
    f.status = FilterStatus::Inapplicable;
    f.reason = "determinant is not 4w^2 +- 1";
    return f;
  }
  PipelineResult r = floer_pipeline(record, lift->alexander, lift->surgery_q, threshold);
  f.data_assisted = true;  // L-space flag and lift are curated inputs
  f.payload = to_json(r);
  switch (r.status) {
    case PipelineStatus::Obstructed:
      f.status = FilterStatus::Fail;
      f.reason = "every admissible Alexander polynomial fails the root test; omega=" +
                 std::to_string(form->omega);
      break;
    case PipelineStatus::ObstructedByInconsistency:
      f.status = FilterStatus::Fail;
      f.reason = "no half-integral surgery is consistent with the d-invariants; omega=" +
                 std::to_string(form->omega);
      break;
    case PipelineStatus::Vacuous:
      f.status = FilterStatus::Pass;
      f.reason = "gate passed vacuously (omega = 0)";
      break;
    case PipelineStatus::Inconclusive:
      f.status = FilterStatus::Pass;
      f.reason = "slope sign undetermined; not obstructed";
      break;
    case PipelineStatus::NotObstructed:
      f.status = FilterStatus::Pass;
      f.reason = "some admissible Alexander polynomial passes the root test";
      break;
  }
  return f;
}

}  // namespace adjlab
