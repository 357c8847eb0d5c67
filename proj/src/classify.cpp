// SPDX-License-Identifier: Apache-2.0
#include "adjlab/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "adjlab/errors.hpp"

#ifndef ADJLAB_DEFAULT_FIXTURES
#define ADJLAB_DEFAULT_FIXTURES "fixtures"
#endif

namespace adjlab {

namespace {

std::vector<FilterOutcome> all_outcomes(const KnotRecord& r, const ClassifyConfig& cfg) {
  std::vector<FilterOutcome> out = run_classical_filters(r);
  const LiftRecord* lift = find_lift(cfg.lifts, r.name);
  try {
    out.push_back(filter_floer(r, lift, cfg.threshold));
  } catch (const Error& e) {
    FilterOutcome f;
    f.id = kFilterFloer;
    f.status = FilterStatus::Skipped;
    f.reason = std::string("skipped: ") + e.what();
    out.push_back(f);
  }
  return out;
}

ObstructionReport report_from(const KnotRecord& r, const ClassifyConfig& cfg,
                              const std::vector<FilterOutcome>& outcomes) {
  ObstructionReport rep;
  rep.knot = r.name;
  for (const auto& id : filter_order())
    for (const auto& f : outcomes)
      if (f.id == id && f.failed()) rep.eliminated_by.push_back(id);
  for (const auto& f : outcomes) rep.detail[f.id] = to_json(f);
  const bool known = cfg.known.count(r.name) > 0;
  if (!rep.eliminated_by.empty()) {
    rep.verdict = Verdict::Obstructed;
    if (known) rep.detail["contradicts_known_two_adjacency"] = true;
  } else {
    rep.verdict = known ? Verdict::KnownTwoAdjacent : Verdict::Unresolved;
  }
  return rep;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string fmt_complex(ComplexApprox z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f%+.4fi", z.real(), z.imag());
  return buf;
}

std::string join_values(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + ")";
}

void trace_pipeline(std::ostream& os, const KnotRecord& r, const LiftRecord& lift,
                    double threshold) {
  PipelineResult p = floer_pipeline(r, lift.alexander, lift.surgery_q, threshold);
  os << "floer pipeline: det " << r.determinant << " = " << p.form.str() << ", lift surgery "
     << r.determinant << "/" << lift.surgery_q << "\n";
  os << "  status: " << to_string(p.status) << "\n";
  if (p.status == PipelineStatus::Vacuous || p.status == PipelineStatus::Inconclusive) return;
  os << "  slope: " << p.slope.str() << "\n";
  if (p.lift_v) os << "  V of lift: " << p.lift_v->str() << "\n";
  if (p.lift_sigma) {
    os << "  d(S^3_{" << r.determinant << "/" << lift.surgery_q << "}(J)): " << join_values(p.lift_sigma->values)
       << "\n";
    os << "  invert at (" << r.determinant << ", 2): "
       << (p.inverted_v ? p.inverted_v->str() : "failed: " + p.inversion_error.value_or("?")) << "\n";
  }
  os << "  d(L(" << r.determinant << ",2)): " << join_values(lens_d_vector(r.determinant, 2).values)
     << "\n";
  if (p.sigma) os << "  d(Sigma(K)): " << join_values(p.sigma->values) << "\n";
  if (p.solution) {
    os << "  admissible V: " << p.solution->sequences.size()
       << (p.solution->unique ? " (unique)" : "") << ", " << p.solution->nodes << " nodes\n";
    for (const auto& v : p.solution->sequences) os << "    " << v.str() << "\n";
  }
  auto roots = [&](const char* label, const TorresVerdict& t) {
    os << "  " << label << ", omega=" << p.form.omega << ": "
       << (t.obstructed ? "every candidate fails" : "some candidate passes") << "\n";
    for (std::size_t c = 0; c < t.witnesses.size(); ++c) {
      const auto& w = t.witnesses[c];
      os << "    candidate " << c + 1 << (w.fails ? " fails" : " passes") << "\n";
      for (const auto& rt : w.roots)
        os << "      l=" << rt.ell << "  " << fmt_complex(rt.value) << "  |v-1|=" << rt.distance
           << "\n";
    }
  };
  if (p.lift_torres) roots("root test on the lift", *p.lift_torres);
  if (p.torres) roots("root test", *p.torres);
  if (lift.reported_inverse_alexander)
    roots("root test on the lift and the published inverse candidate",
          torres_obstruction({lift.alexander, *lift.reported_inverse_alexander}, p.form.omega,
                             threshold));
}

}  // namespace

ObstructionReport classify_knot(const KnotRecord& record, const ClassifyConfig& config) {
  return report_from(record, config, all_outcomes(record, config));
}

std::vector<ObstructionReport> classify_table(const std::vector<KnotRecord>& table,
                                              const ClassifyConfig& config) {
  std::vector<ObstructionReport> out(table.size());
  unsigned jobs = std::max(1u, config.jobs);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(table.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < table.size(); k = next++) out[k] = classify_knot(table[k], config);
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return knot_name_less(a.knot, b.knot);
  });
  return out;
}

ClassifySummary summarize(const std::vector<ObstructionReport>& reports) {
  ClassifySummary s;
  s.total = reports.size();
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::KnownTwoAdjacent: ++s.known; break;
      case Verdict::Obstructed:
        ++s.obstructed;
        ++s.attributed[r.eliminated_by.front()];
        break;
      case Verdict::Unresolved: ++s.unresolved; break;
    }
  }
  return s;
}

nlohmann::json to_json(const ClassifySummary& s) {
  return {{"total", s.total},
          {"KnownTwoAdjacent", s.known},
          {"Obstructed", s.obstructed},
          {"Unresolved", s.unresolved},
          {"attributed", s.attributed}};
}

std::string drilldown(const KnotRecord& r, const ClassifyConfig& cfg) {
  std::ostringstream os;
  os << r.name << ": " << r.crossing_number << " crossings, "
     << (r.alternating ? "alternating" : "non-alternating") << ", det " << r.determinant
     << ", signature " << r.signature << ", unknotting number " << r.unknotting.str() << "\n";
  if (r.conway_coeffs) {
    IntLaurentPoly nabla;
    for (std::size_t k = 0; k < r.conway_coeffs->size(); ++k)
      nabla += IntLaurentPoly::monomial((*r.conway_coeffs)[k], static_cast<int>(2 * k));
    os << "Conway: " << nabla.str("z") << "\n";
  }
  if (r.homfly_p0) os << "p0: " << r.homfly_p0->str("l") << "\n";
  if (r.homfly_p2) os << "p2: " << r.homfly_p2->str("l") << "\n";

  std::vector<FilterOutcome> outcomes = all_outcomes(r, cfg);
  for (const auto& f : outcomes)
    os << "  " << pad(f.id, 14) << pad(to_string(f.status), 13) << f.reason
       << (f.data_assisted ? " [data-assisted]" : "") << "\n";

  if (const LiftRecord* lift = find_lift(cfg.lifts, r.name); lift && r.is_lspace_dbc) {
    try {
      trace_pipeline(os, r, *lift, cfg.threshold);
    } catch (const Error& e) {
      os << "floer pipeline: " << e.what() << "\n";
    }
  }

  ObstructionReport rep = report_from(r, cfg, outcomes);
  switch (rep.verdict) {
    case Verdict::KnownTwoAdjacent: os << "KnownTwoAdjacent; all filters pass\n"; break;
    case Verdict::Unresolved: os << "Unresolved; no filter fails\n"; break;
    case Verdict::Obstructed: {
      const std::string& first = rep.eliminated_by.front();
      os << "obstructed by " << first;
      if (first == kFilterFloer) os << "; ω=" << det_form(r.determinant)->omega;
      if (rep.eliminated_by.size() > 1) {
        os << " (also fails:";
        for (std::size_t k = 1; k < rep.eliminated_by.size(); ++k) os << " " << rep.eliminated_by[k];
        os << ")";
      }
      os << "\n";
      break;
    }
  }
  return os.str();
}

std::filesystem::path fixtures_dir() {
  if (const char* env = std::getenv("ADJLAB_FIXTURES"); env && *env) return env;
  return ADJLAB_DEFAULT_FIXTURES;
}

}  // namespace adjlab
