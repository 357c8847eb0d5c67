// SPDX-License-Identifier: Apache-2.0
#include "adjlab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "adjlab/errors.hpp"

namespace adjlab {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational: '" + std::string(text) + "'");
  }
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

// -------------------------------------------------------- GaussianRational

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DomainError("inverse of 0");
  Rational n = norm();
  return {re / n, -im / n};
}

std::string GaussianRational::str() const {
  std::string s = re.str();
  if (im.sign() < 0)
    s += " - " + (-im).str() + "i";
  else
    s += " + " + im.str() + "i";
  return s;
}

// ---------------------------------------------------------- IntLaurentPoly

IntLaurentPoly::IntLaurentPoly(const Integer& c) { add_term(0, c); }

IntLaurentPoly::IntLaurentPoly(
    std::initializer_list<std::pair<const int, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, Integer(c));
}

IntLaurentPoly IntLaurentPoly::monomial(const Integer& c, int e) {
  IntLaurentPoly p;
  p.add_term(e, c);
  return p;
}

IntLaurentPoly IntLaurentPoly::from_terms(const Terms& terms) {
  IntLaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void IntLaurentPoly::add_term(int e, const Integer& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int IntLaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.begin()->first;
}

int IntLaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no degree");
  return terms_.rbegin()->first;
}

Integer IntLaurentPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer IntLaurentPoly::coeff_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Integer IntLaurentPoly::abs_coeff_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

IntLaurentPoly IntLaurentPoly::shifted(int k) const {
  IntLaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
  IntLaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

IntLaurentPoly& IntLaurentPoly::operator+=(const IntLaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntLaurentPoly& IntLaurentPoly::operator-=(const IntLaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntLaurentPoly operator*(const IntLaurentPoly& a, const IntLaurentPoly& b) {
  IntLaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

IntLaurentPoly operator*(const Integer& c, const IntLaurentPoly& p) {
  IntLaurentPoly r;
  for (const auto& [e, x] : p.terms_) r.add_term(e, c * x);
  return r;
}

std::string IntLaurentPoly::str(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

[[noreturn]] void bad_poly(std::string_view text, std::size_t pos,
                           const std::string& why) {
  throw ParseError("bad polynomial '" + std::string(text) + "': " + why, 1,
                   pos + 1);
}

}  // namespace

IntLaurentPoly parse_laurent(std::string_view text, char var) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) bad_poly(text, 0, "empty");
  IntLaurentPoly out;
  std::size_t i = 0;
  auto digits = [&](std::size_t& k) {
    std::size_t b = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(b, k - b);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad_poly(text, i, "expected + or -");
    }
    Integer coeff = 1;
    std::string num = digits(i);
    bool have_num = !num.empty();
    if (have_num) coeff = Integer(num);
    if (i < s.size() && s[i] == '*') {
      if (!have_num) bad_poly(text, i, "dangling *");
      ++i;
      if (i >= s.size() || s[i] != var) bad_poly(text, i, "expected variable");
    }
    int e = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        bool brace = i < s.size() && s[i] == '{';
        if (brace) ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::string ed = digits(i);
        if (ed.empty()) bad_poly(text, i, "missing exponent");
        e = esign * std::stoi(ed);
        if (brace) {
          if (i >= s.size() || s[i] != '}') bad_poly(text, i, "missing }");
          ++i;
        }
      }
    } else if (!have_num) {
      bad_poly(text, i, "expected term");
    }
    out += IntLaurentPoly::monomial(sign * coeff, e);
  }
  return out;
}

// --------------------------------------------------------- SymmetrizedAlex

SymmetrizedAlex::SymmetrizedAlex(std::vector<Integer> a) : a_(std::move(a)) {
  while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
  if (a_.empty()) a_.push_back(Integer(0));
}

SymmetrizedAlex SymmetrizedAlex::from_ints(const std::vector<long>& a) {
  std::vector<Integer> v;
  v.reserve(a.size());
  for (long x : a) v.emplace_back(x);
  return SymmetrizedAlex(std::move(v));
}

Integer SymmetrizedAlex::coeff(int i) const {
  if (i < 0) i = -i;
  return i < static_cast<int>(a_.size()) ? a_[i] : Integer(0);
}

Integer SymmetrizedAlex::at_one() const {
  Integer s = a_[0];
  for (std::size_t i = 1; i < a_.size(); ++i) s += 2 * a_[i];
  return s;
}

IntLaurentPoly SymmetrizedAlex::to_laurent() const {
  IntLaurentPoly::Terms t;
  if (a_[0] != 0) t[0] = a_[0];
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (a_[i] == 0) continue;
    t[static_cast<int>(i)] = a_[i];
    t[-static_cast<int>(i)] = a_[i];
  }
  return IntLaurentPoly::from_terms(t);
}

bool operator<(const SymmetrizedAlex& x, const SymmetrizedAlex& y) {
  if (x.a_.size() != y.a_.size()) return x.a_.size() < y.a_.size();
  for (std::size_t i = 0; i < x.a_.size(); ++i)
    if (x.a_[i] != y.a_[i]) return x.a_[i] < y.a_[i];
  return false;
}

// ------------------------------------------------------------- evaluation

Rational laurent_eval_rational(const IntLaurentPoly& p, const Rational& t) {
  if (p.is_zero()) return Rational(0);
  if (t.sign() == 0 && p.min_exponent() < 0)
    throw DomainError("evaluation at 0 with negative exponents");
  // Horner on t^min * (poly in t).
  int lo = p.min_exponent();
  Rational acc(0);
  int e = p.max_exponent();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    while (e > it->first) {
      acc *= t;
      --e;
    }
    acc += Rational(it->second);
  }
  if (lo > 0) {
    for (int k = 0; k < lo; ++k) acc *= t;
  } else if (lo < 0) {
    Rational inv = Rational(1) / t;
    for (int k = 0; k < -lo; ++k) acc *= inv;
  }
  return acc;
}

Rational laurent_eval_int(const IntLaurentPoly& p, const Integer& t) {
  if (t == 0) throw DomainError("laurent_eval_int at t = 0");
  return laurent_eval_rational(p, Rational(t));
}

ComplexApprox laurent_eval_root_of_unity(const IntLaurentPoly& p, long k,
                                         long m) {
  if (m < 1) throw PreconditionError("root of unity order must be >= 1");
  long kr = ((k % m) + m) % m;
  double re = 0.0;
  double im = 0.0;
  for (const auto& [e, c] : p.terms()) {
    long er = ((static_cast<long>(e) % m) + m) % m;
    long r = static_cast<long>((static_cast<__int128>(er) * kr) % m);
    double ang = 2.0 * std::numbers::pi * static_cast<double>(r) /
                 static_cast<double>(m);
    double cd = c.get_d();
    re += cd * std::cos(ang);
    im += cd * std::sin(ang);
  }
  return {re, im};
}

IntLaurentPoly laurent_derivative(const IntLaurentPoly& p) {
  IntLaurentPoly::Terms t;
  for (const auto& [e, c] : p.terms())
    if (e != 0) t[e - 1] = c * e;
  return IntLaurentPoly::from_terms(t);
}

namespace {

GaussianRational gpow(GaussianRational base, int n) {
  GaussianRational r{Rational(1), Rational(0)};
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

}  // namespace

GaussianRational laurent_eval_gaussian(const IntLaurentPoly& p,
                                       const GaussianRational& z) {
  GaussianRational acc{Rational(0), Rational(0)};
  if (p.is_zero()) return acc;
  if (z.is_zero() && p.min_exponent() < 0)
    throw DomainError("evaluation at 0 with negative exponents");
  if (z == GaussianRational::i()) {
    // i^e cycles with period 4
    for (const auto& [e, c] : p.terms()) {
      switch (((e % 4) + 4) % 4) {
        case 0: acc.re += Rational(c); break;
        case 1: acc.im += Rational(c); break;
        case 2: acc.re -= Rational(c); break;
        default: acc.im -= Rational(c); break;
      }
    }
    return acc;
  }
  GaussianRational zinv = z.is_zero() ? z : z.inverse();
  for (const auto& [e, c] : p.terms()) {
    GaussianRational pw = e >= 0 ? gpow(z, e) : gpow(zinv, -e);
    acc = acc + GaussianRational{Rational(c), Rational(0)} * pw;
  }
  return acc;
}

// ------------------------------------------------------------ symmetrize

SymmetrizeResult symmetrize_with_unit(const IntLaurentPoly& p) {
  if (p.is_zero()) throw NotAlexanderError("zero polynomial");
  int lo = p.min_exponent();
  int hi = p.max_exponent();
  if ((lo + hi) % 2 != 0)
    throw NotAlexanderError("odd span; no t^k makes '" + p.str() +
                            "' symmetric");
  int shift = -(lo + hi) / 2;
  IntLaurentPoly q = p.shifted(shift);
  for (const auto& [e, c] : q.terms())
    if (q.coeff(-e) != c)
      throw NotAlexanderError("'" + p.str() + "' is not symmetric up to units");
  Integer s = q.coeff_sum();
  if (s != 1 && s != -1)
    throw NotAlexanderError("'" + p.str() + "' has |value at 1| = " +
                            Integer(abs(s)).get_str());
  int sign = s > 0 ? 1 : -1;
  int g = q.max_exponent();
  std::vector<Integer> a(static_cast<std::size_t>(g) + 1);
  for (int i = 0; i <= g; ++i) a[i] = sign * q.coeff(i);
  return {SymmetrizedAlex(std::move(a)), sign, shift};
}

SymmetrizedAlex symmetrize(const IntLaurentPoly& p) {
  return symmetrize_with_unit(p).alex;
}

// ------------------------------------------------------------ Conway

namespace {

using UPoly = std::vector<Integer>;  // polynomial in u = z^2

void uadd(UPoly& acc, const UPoly& x, const Integer& c) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += c * x[i];
}

}  // namespace

IntLaurentPoly alexander_to_conway(const SymmetrizedAlex& a) {
  if (a.at_one() != 1)
    throw PreconditionError("alexander_to_conway needs value 1 at t = 1");
  // t^i + t^-i = T_i(x), x = t + t^-1 = u + 2, T_0 = 2, T_1 = x,
  // T_{i+1} = x T_i - T_{i-1}.
  UPoly result{a.coeffs()[0]};
  UPoly prev{Integer(2)};
  UPoly cur{Integer(2), Integer(1)};
  for (int i = 1; i <= a.genus(); ++i) {
    uadd(result, cur, a.coeffs()[i]);
    UPoly next(cur.size() + 1);
    for (std::size_t k = 0; k < cur.size(); ++k) {
      next[k] += 2 * cur[k];
      next[k + 1] += cur[k];
    }
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (result[0] != 1)
    throw InconsistencyError("Conway polynomial constant term is not 1");
  IntLaurentPoly::Terms t;
  for (std::size_t k = 0; k < result.size(); ++k)
    if (result[k] != 0) t[2 * static_cast<int>(k)] = result[k];
  return IntLaurentPoly::from_terms(t);
}

SymmetrizedAlex conway_to_alexander(const IntLaurentPoly& conway) {
  IntLaurentPoly base{{-1, 1}, {0, -2}, {1, 1}};  // z^2 = t - 2 + t^-1
  IntLaurentPoly acc;
  for (const auto& [e, c] : conway.terms()) {
    if (e < 0 || e % 2 != 0)
      throw InconsistencyError("Conway polynomial of a knot has only even powers");
    IntLaurentPoly pw(Integer(1));
    for (int k = 0; k < e / 2; ++k) pw = pw * base;
    acc += c * pw;
  }
  if (acc.is_zero()) throw InconsistencyError("zero Conway polynomial");
  int g = std::max(acc.max_exponent(), 0);
  std::vector<Integer> a(static_cast<std::size_t>(g) + 1);
  for (int i = 0; i <= g; ++i) a[i] = acc.coeff(i);
  return SymmetrizedAlex(std::move(a));
}

std::vector<Integer> conway_coeff_vector(const IntLaurentPoly& conway) {
  std::vector<Integer> v;
  for (const auto& [e, c] : conway.terms()) {
    if (e < 0 || e % 2 != 0)
      throw InconsistencyError("Conway polynomial of a knot has only even powers");
    std::size_t k = static_cast<std::size_t>(e / 2);
    if (v.size() <= k) v.resize(k + 1);
    v[k] = c;
  }
  if (v.empty()) v.push_back(Integer(0));
  return v;
}

IntLaurentPoly conway_from_coeff_vector(const std::vector<Integer>& c) {
  IntLaurentPoly::Terms t;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) t[2 * static_cast<int>(k)] = c[k];
  return IntLaurentPoly::from_terms(t);
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  if (root) *root = sqrt(n);
  return true;
}

// ------------------------------------------------------------ JSON

nlohmann::json integer_to_json(const Integer& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw DomainError("expected an integer, got " + j.dump());
}

nlohmann::json to_json(const IntLaurentPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = integer_to_json(c);
  return j;
}

IntLaurentPoly laurent_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("polynomial must be a JSON object");
  IntLaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      throw DomainError("bad exponent key '" + k + "'");
    }
    p += IntLaurentPoly::monomial(integer_from_json(v), e);
  }
  return p;
}

nlohmann::json to_json(const SymmetrizedAlex& a) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : a.coeffs()) j.push_back(integer_to_json(c));
  return j;
}

SymmetrizedAlex alex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw DomainError("symmetrized Alexander polynomial must be a nonempty array");
  std::vector<Integer> a;
  for (const auto& x : j) a.push_back(integer_from_json(x));
  return SymmetrizedAlex(std::move(a));
}

}  // namespace adjlab
