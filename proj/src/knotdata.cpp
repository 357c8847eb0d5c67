// SPDX-License-Identifier: Apache-2.0
#include "adjlab/knotdata.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "adjlab/errors.hpp"

namespace adjlab {

namespace {

constexpr std::array<const char*, 15> kColumns = {
    "name",          "crossing_number", "alternating",
    "determinant",   "signature",       "unknotting_min",
    "unknotting_max", "conway_coeffs",  "alexander_symmetrized",
    "homfly_p0",     "homfly_p2",       "is_lspace_dbc",
    "is_rational_knot", "mccoy_pos",    "mccoy_neg"};

struct Cell {
  std::string text;
  std::size_t line;
  std::size_t column;  // 1-based character column of the cell start
};

using Row = std::vector<Cell>;

// RFC 4180 style: quoted cells may contain commas, doubled quotes and
// newlines.  Lines whose first character is '#' are comments.
std::vector<Row> split_csv(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::vector<Row> rows;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  const std::size_t n = data.size();
  while (i < n) {
    if (data[i] == '#' && col == 1) {
      while (i < n && data[i] != '\n') ++i;
      if (i < n) ++i;
      ++line;
      col = 1;
      continue;
    }
    if (data[i] == '\n' || data[i] == '\r') {  // blank line
      if (data[i] == '\r' && i + 1 < n && data[i + 1] == '\n') ++i;
      ++i;
      ++line;
      col = 1;
      continue;
    }
    Row row;
    bool end_of_row = false;
    while (!end_of_row) {
      Cell cell{"", line, col};
      if (i < n && data[i] == '"') {
        ++i;
        ++col;
        bool closed = false;
        while (i < n) {
          char c = data[i];
          if (c == '"') {
            if (i + 1 < n && data[i + 1] == '"') {
              cell.text.push_back('"');
              i += 2;
              col += 2;
              continue;
            }
            ++i;
            ++col;
            closed = true;
            break;
          }
          if (c == '\n') {
            ++line;
            col = 0;
          }
          cell.text.push_back(c);
          ++i;
          ++col;
        }
        if (!closed) throw ParseError("unterminated quoted cell", cell.line, cell.column);
        if (i < n && data[i] != ',' && data[i] != '\n' && data[i] != '\r')
          throw ParseError("text after closing quote", line, col);
      } else {
        while (i < n && data[i] != ',' && data[i] != '\n' && data[i] != '\r') {
          if (data[i] == '"') throw ParseError("stray quote in unquoted cell", line, col);
          cell.text.push_back(data[i]);
          ++i;
          ++col;
        }
      }
      row.push_back(std::move(cell));
      if (i < n && data[i] == ',') {
        ++i;
        ++col;
      } else {
        if (i < n && data[i] == '\r') ++i;
        if (i < n && data[i] == '\n') ++i;
        ++line;
        col = 1;
        end_of_row = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const Cell& c, const char* what) {
  std::string s = trim(c.text);
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw ParseError(std::string("bad ") + what + " '" + c.text + "'", c.line,
                     c.column);
  return v;
}

bool parse_bool(const Cell& c, const char* what) {
  std::string s = trim(c.text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (s == "true" || s == "1" || s == "y" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "n" || s == "no" || s.empty()) return false;
  throw ParseError(std::string("bad boolean for ") + what + " '" + c.text + "'",
                   c.line, c.column);
}

nlohmann::json parse_json_cell(const Cell& c, const char* what) {
  try {
    return nlohmann::json::parse(c.text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON in ") + what + ": " + e.what(), c.line,
                     c.column);
  }
}

template <typename F>
auto with_position(const Cell& c, const char* what, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what(), c.line, c.column);
  }
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string describe(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

}  // namespace

std::string UnknottingBounds::str() const {
  if (!min && !max) return "?";
  std::string lo = min ? std::to_string(*min) : "?";
  std::string hi = max ? std::to_string(*max) : "?";
  return lo == hi ? lo : lo + ".." + hi;
}

Integer KnotRecord::conway_a(int degree) const {
  if (!conway_coeffs || degree < 0 || degree % 2 != 0) return Integer(0);
  std::size_t k = static_cast<std::size_t>(degree / 2);
  return k < conway_coeffs->size() ? (*conway_coeffs)[k] : Integer(0);
}

std::vector<std::string> validate(const KnotRecord& r) {
  std::vector<std::string> v;
  if (r.determinant <= 0)
    v.push_back("determinant_nonpositive");
  else if (r.determinant % 2 == 0)
    v.push_back("determinant_even");
  if (r.signature % 2 != 0) v.push_back("signature_odd");
  if (r.conway_coeffs && (r.conway_coeffs->empty() || (*r.conway_coeffs)[0] != 1))
    v.push_back("conway_constant");
  bool alex_ok = true;
  if (r.alexander && r.alexander->at_one() != 1) {
    v.push_back("alexander_at_one");
    alex_ok = false;
  }
  bool mismatch = false;
  if (r.alexander) {
    Rational at = laurent_eval_int(r.alexander->to_laurent(), Integer(-1));
    if (abs(at.numerator()) != r.determinant) mismatch = true;
  }
  if (r.conway_coeffs) {
    // z^2 = -4 at t = -1
    Integer s = 0;
    Integer pw = 1;
    for (const auto& c : *r.conway_coeffs) {
      s += c * pw;
      pw *= -4;
    }
    if (abs(s) != r.determinant) mismatch = true;
  }
  if (mismatch) v.push_back("determinant_mismatch");
  if (r.alexander && r.conway_coeffs && alex_ok) {
    std::vector<Integer> from_alex =
        conway_coeff_vector(alexander_to_conway(*r.alexander));
    std::vector<Integer> given = *r.conway_coeffs;
    while (given.size() > 1 && given.back() == 0) given.pop_back();
    if (from_alex != given) v.push_back("alexander_conway_mismatch");
  }
  if (r.unknotting.min && r.unknotting.max && *r.unknotting.min > *r.unknotting.max)
    v.push_back("unknotting_bounds");
  return v;
}

std::vector<KnotRecord> read_table(std::istream& in) {
  std::vector<Row> rows = split_csv(in);
  std::vector<KnotRecord> out;
  if (rows.empty()) return out;

  const Row& header = rows.front();
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < header.size(); ++k) {
    std::string h = trim(header[k].text);
    if (index.count(h)) throw ParseError("duplicate column '" + h + "'", header[k].line, header[k].column);
    index[h] = k;
  }
  for (const char* col : kColumns)
    if (!index.count(col))
      throw ParseError(std::string("missing column '") + col + "'", header.front().line, 1);

  for (std::size_t rix = 1; rix < rows.size(); ++rix) {
    const Row& row = rows[rix];
    if (row.size() != header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " cells, found " +
                           std::to_string(row.size()),
                       row.front().line, row.back().column);
    auto cell = [&](const char* name) -> const Cell& { return row[index.at(name)]; };
    auto present = [&](const char* name) { return !trim(cell(name).text).empty(); };

    KnotRecord r;
    r.name = trim(cell("name").text);
    if (r.name.empty()) throw ParseError("empty knot name", cell("name").line, cell("name").column);
    r.crossing_number = parse_number<int>(cell("crossing_number"), "crossing_number");
    r.alternating = parse_bool(cell("alternating"), "alternating");
    r.determinant = parse_number<long>(cell("determinant"), "determinant");
    r.signature = parse_number<int>(cell("signature"), "signature");
    if (present("unknotting_min"))
      r.unknotting.min = parse_number<int>(cell("unknotting_min"), "unknotting_min");
    if (present("unknotting_max"))
      r.unknotting.max = parse_number<int>(cell("unknotting_max"), "unknotting_max");
    if (present("conway_coeffs")) {
      const Cell& c = cell("conway_coeffs");
      nlohmann::json j = parse_json_cell(c, "conway_coeffs");
      r.conway_coeffs = with_position(c, "conway_coeffs", [&] {
        if (!j.is_array() || j.empty()) throw DomainError("expected a nonempty array");
        std::vector<Integer> v;
        for (const auto& x : j) v.push_back(integer_from_json(x));
        return v;
      });
    }
    if (present("alexander_symmetrized")) {
      const Cell& c = cell("alexander_symmetrized");
      nlohmann::json j = parse_json_cell(c, "alexander_symmetrized");
      r.alexander = with_position(c, "alexander_symmetrized", [&] { return alex_from_json(j); });
    }
    for (auto [col, slot] : {std::pair{"homfly_p0", &r.homfly_p0},
                             std::pair{"homfly_p2", &r.homfly_p2}}) {
      if (!present(col)) continue;
      const Cell& c = cell(col);
      nlohmann::json j = parse_json_cell(c, col);
      *slot = with_position(c, col, [&] { return laurent_from_json(j); });
    }
    r.is_lspace_dbc = parse_bool(cell("is_lspace_dbc"), "is_lspace_dbc");
    r.is_rational_knot = parse_bool(cell("is_rational_knot"), "is_rational_knot");
    bool mp = present("mccoy_pos");
    bool mn = present("mccoy_neg");
    if (mp != mn)
      throw ParseError("McCoy annotations need both mccoy_pos and mccoy_neg",
                       cell(mp ? "mccoy_neg" : "mccoy_pos").line,
                       cell(mp ? "mccoy_neg" : "mccoy_pos").column);
    if (mp)
      r.mccoy = McCoyAnnotations{parse_bool(cell("mccoy_pos"), "mccoy_pos"),
                                 parse_bool(cell("mccoy_neg"), "mccoy_neg")};

    std::vector<std::string> bad = validate(r);
    if (!bad.empty())
      throw ValidationError("knot " + r.name + " (line " + std::to_string(row.front().line) +
                            ") violates: " + describe(bad));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<KnotRecord> load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open knot table " + path.string());
  return read_table(in);
}

void write_table(std::ostream& out, const std::vector<KnotRecord>& records) {
  for (std::size_t k = 0; k < kColumns.size(); ++k) out << (k ? "," : "") << kColumns[k];
  out << "\n";
  auto opt_int = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string(); };
  for (const auto& r : records) {
    std::vector<std::string> cells;
    cells.push_back(r.name);
    cells.push_back(std::to_string(r.crossing_number));
    cells.push_back(r.alternating ? "true" : "false");
    cells.push_back(std::to_string(r.determinant));
    cells.push_back(std::to_string(r.signature));
    cells.push_back(opt_int(r.unknotting.min));
    cells.push_back(opt_int(r.unknotting.max));
    if (r.conway_coeffs) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& c : *r.conway_coeffs) j.push_back(integer_to_json(c));
      cells.push_back(csv_quote(j.dump()));
    } else {
      cells.emplace_back();
    }
    cells.push_back(r.alexander ? csv_quote(to_json(*r.alexander).dump()) : "");
    cells.push_back(r.homfly_p0 ? csv_quote(to_json(*r.homfly_p0).dump()) : "");
    cells.push_back(r.homfly_p2 ? csv_quote(to_json(*r.homfly_p2).dump()) : "");
    cells.push_back(r.is_lspace_dbc ? "true" : "false");
    cells.push_back(r.is_rational_knot ? "true" : "false");
    cells.push_back(r.mccoy ? (r.mccoy->positive ? "true" : "false") : "");
    cells.push_back(r.mccoy ? (r.mccoy->negative ? "true" : "false") : "");
    for (std::size_t k = 0; k < cells.size(); ++k) out << (k ? "," : "") << cells[k];
    out << "\n";
  }
}

void save_table(const std::filesystem::path& path, const std::vector<KnotRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write knot table " + path.string());
  write_table(out, records);
}

const KnotRecord* find_knot(const std::vector<KnotRecord>& table, const std::string& name) {
  for (const auto& r : table)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<std::string> load_name_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open name list " + path.string());
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) names.push_back(line);
  }
  return names;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::KnownTwoAdjacent: return "KnownTwoAdjacent";
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Unresolved: return "Unresolved";
  }
  return "?";
}

nlohmann::json to_json(const ObstructionReport& r) {
  nlohmann::json j;
  j["knot"] = r.knot;
  j["verdict"] = to_string(r.verdict);
  j["eliminated_by"] = r.eliminated_by;
  j["detail"] = r.detail;
  return j;
}

bool knot_name_less(const std::string& a, const std::string& b) {
  auto key = [](const std::string& s) {
    int cr = 0;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) cr = cr * 10 + (s[i++] - '0');
    char kind = ' ';
    if (i < s.size() && (s[i] == 'a' || s[i] == 'n')) kind = s[i++];
    if (i < s.size() && s[i] == '_') ++i;
    long idx = 0;
    bool digits = i < s.size();
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        digits = false;
        break;
      }
      idx = idx * 10 + (s[k] - '0');
    }
    if (!digits) idx = -1;
    return std::tuple(cr, kind, idx, s);
  };
  return key(a) < key(b);
}

}  // namespace adjlab
