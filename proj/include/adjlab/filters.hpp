// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/knotdata.hpp"

namespace adjlab {

enum class DetSign { PlusOne, MinusOne };

struct DetForm {
  long omega = 0;
  DetSign sign = DetSign::PlusOne;

  long value() const { return 4 * omega * omega + (sign == DetSign::PlusOne ? 1 : -1); }
  std::string str() const;  // "4(5^2)+1"
  friend bool operator==(const DetForm&, const DetForm&) = default;
};

std::string to_string(DetSign s);

// d = 4 omega^2 +- 1, or nothing.  d must be odd and positive.
std::optional<DetForm> det_form(long d);

enum class FilterStatus { Pass, Fail, Inapplicable, Skipped };

std::string to_string(FilterStatus s);

struct FilterOutcome {
  std::string id;
  FilterStatus status = FilterStatus::Pass;
  std::string reason;
  nlohmann::json payload = nlohmann::json::object();
  bool data_assisted = false;  // consumed curated annotations

  bool failed() const { return status == FilterStatus::Fail; }
};

nlohmann::json to_json(const FilterOutcome& f);

// Filter identifiers, in the order used for attribution.
inline constexpr const char* kFilterUnknotting = "unknotting";
inline constexpr const char* kFilterDetForm = "det_form";
inline constexpr const char* kFilterSignature = "signature";
inline constexpr const char* kFilterRational = "rational";
inline constexpr const char* kFilterConway = "conway_a2a4";
inline constexpr const char* kFilterMcCoy = "mccoy";
inline constexpr const char* kFilterTaoP0 = "tao_p0";
inline constexpr const char* kFilterTaoP2 = "tao_p2";
inline constexpr const char* kFilterTaoMixed = "tao_mixed";
inline constexpr const char* kFilterFloer = "floer_torres";

const std::vector<std::string>& filter_order();
const std::vector<std::string>& basic_filters();

FilterOutcome filter_unknotting(const KnotRecord& r);
FilterOutcome filter_det_form(const KnotRecord& r);
FilterOutcome filter_signature(const KnotRecord& r);
FilterOutcome filter_rational(const KnotRecord& r);
FilterOutcome filter_conway(const KnotRecord& r);
FilterOutcome filter_tao_p0(const KnotRecord& r);
FilterOutcome filter_tao_p2(const KnotRecord& r);
FilterOutcome filter_tao_mixed(const KnotRecord& r);
FilterOutcome filter_mccoy(const KnotRecord& r);

// The classical filters in attribution order (no floer_torres).
std::vector<FilterOutcome> run_classical_filters(const KnotRecord& r);

}  // namespace adjlab
