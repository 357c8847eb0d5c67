// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/algebra.hpp"

namespace adjlab {

struct UnknottingBounds {
  std::optional<int> min;
  std::optional<int> max;

  // "1", "1..2", "?" when nothing is known
  std::string str() const;
  friend bool operator==(const UnknottingBounds&,
                         const UnknottingBounds&) = default;
};

struct McCoyAnnotations {
  bool positive = false;  // a minimal diagram shows a positive unknotting crossing
  bool negative = false;
  friend bool operator==(const McCoyAnnotations&,
                         const McCoyAnnotations&) = default;
};

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  bool alternating = false;
  long determinant = 1;
  int signature = 0;
  UnknottingBounds unknotting;
  std::optional<std::vector<Integer>> conway_coeffs;  // a_0, a_2, a_4, ...
  std::optional<SymmetrizedAlex> alexander;
  std::optional<IntLaurentPoly> homfly_p0;  // in l
  std::optional<IntLaurentPoly> homfly_p2;
  bool is_lspace_dbc = false;
  bool is_rational_knot = false;
  std::optional<McCoyAnnotations> mccoy;

  Integer conway_a(int degree) const;  // a_degree, 0 when absent
  friend bool operator==(const KnotRecord&, const KnotRecord&) = default;
};

// Violation codes: determinant_even, determinant_nonpositive, signature_odd,
// conway_constant, alexander_at_one, determinant_mismatch,
// alexander_conway_mismatch, unknotting_bounds.
std::vector<std::string> validate(const KnotRecord& record);

std::vector<KnotRecord> read_table(std::istream& in);
std::vector<KnotRecord> load_table(const std::filesystem::path& path);
void write_table(std::ostream& out, const std::vector<KnotRecord>& records);
void save_table(const std::filesystem::path& path,
                const std::vector<KnotRecord>& records);

const KnotRecord* find_knot(const std::vector<KnotRecord>& table,
                            const std::string& name);

// One name per line; blank lines and '#' comments ignored.
std::vector<std::string> load_name_list(const std::filesystem::path& path);

enum class Verdict { KnownTwoAdjacent, Obstructed, Unresolved };

std::string to_string(Verdict v);

struct ObstructionReport {
  std::string knot;
  Verdict verdict = Verdict::Unresolved;
  std::vector<std::string> eliminated_by;  // attribution order; first entry is the attribution
  nlohmann::json detail = nlohmann::json::object();
};

nlohmann::json to_json(const ObstructionReport& r);

// Orders knots as in the tables: crossing number, then a/n, then index.
bool knot_name_less(const std::string& a, const std::string& b);

}  // namespace adjlab
