// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace adjlab {

using Integer = mpz_class;
using ComplexApprox = std::complex<double>;

// Lowest terms, positive denominator (mpq_class canonicalizes for us).
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  const mpq_class& raw() const { return q_; }

  // "n" for integers, "n/d" otherwise
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

struct GaussianRational {
  Rational re;
  Rational im;

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  bool is_zero() const { return re.sign() == 0 && im.sign() == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  GaussianRational inverse() const;
  std::string str() const;

  friend GaussianRational operator+(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a,
                                    const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a,
                         const GaussianRational& b) = default;
};

class IntLaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  IntLaurentPoly() = default;
  explicit IntLaurentPoly(const Integer& c);
  IntLaurentPoly(std::initializer_list<std::pair<const int, long>> terms);
  static IntLaurentPoly monomial(const Integer& c, int e);
  static IntLaurentPoly from_terms(const Terms& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int e) const;
  Integer coeff_sum() const;
  Integer abs_coeff_sum() const;

  IntLaurentPoly shifted(int k) const;  // multiply by var^k
  IntLaurentPoly operator-() const;
  IntLaurentPoly& operator+=(const IntLaurentPoly& o);
  IntLaurentPoly& operator-=(const IntLaurentPoly& o);
  friend IntLaurentPoly operator+(IntLaurentPoly a, const IntLaurentPoly& b) {
    return a += b;
  }
  friend IntLaurentPoly operator-(IntLaurentPoly a, const IntLaurentPoly& b) {
    return a -= b;
  }
  friend IntLaurentPoly operator*(const IntLaurentPoly& a,
                                  const IntLaurentPoly& b);
  friend IntLaurentPoly operator*(const Integer& c, const IntLaurentPoly& p);
  friend bool operator==(const IntLaurentPoly& a,
                         const IntLaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  // e.g. "t^-2 - 3 + 2*t^5"; zero prints as "0"
  std::string str(std::string_view var = "t") const;

 private:
  void add_term(int e, const Integer& c);
  Terms terms_;
};

// Accepts plain text ("2*t^-3 - t + 1") and the LaTeX forms used in print
// ("t^{-11}-t^{-10}+1").  Whitespace is ignored.
IntLaurentPoly parse_laurent(std::string_view text, char var = 't');

// Coefficients of an Alexander polynomial in symmetric form:
// a_0 + sum_{i>=1} a_i (t^i + t^-i).
class SymmetrizedAlex {
 public:
  SymmetrizedAlex() : a_{Integer(1)} {}
  explicit SymmetrizedAlex(std::vector<Integer> a);
  static SymmetrizedAlex from_ints(const std::vector<long>& a);

  const std::vector<Integer>& coeffs() const { return a_; }
  int genus() const { return static_cast<int>(a_.size()) - 1; }
  Integer coeff(int i) const;
  Integer at_one() const;
  IntLaurentPoly to_laurent() const;

  friend bool operator==(const SymmetrizedAlex&,
                         const SymmetrizedAlex&) = default;
  friend bool operator<(const SymmetrizedAlex& x, const SymmetrizedAlex& y);

 private:
  std::vector<Integer> a_;
};

struct SymmetrizeResult {
  SymmetrizedAlex alex;
  int unit_sign = 1;   // p * unit_sign * t^unit_shift is symmetric
  int unit_shift = 0;
};

Rational laurent_eval_int(const IntLaurentPoly& p, const Integer& t);
Rational laurent_eval_rational(const IntLaurentPoly& p, const Rational& t);
ComplexApprox laurent_eval_root_of_unity(const IntLaurentPoly& p, long k,
                                         long m);
IntLaurentPoly laurent_derivative(const IntLaurentPoly& p);
GaussianRational laurent_eval_gaussian(const IntLaurentPoly& p,
                                       const GaussianRational& z);
SymmetrizeResult symmetrize_with_unit(const IntLaurentPoly& p);
SymmetrizedAlex symmetrize(const IntLaurentPoly& p);

// Result is a polynomial in z with only even exponents.
IntLaurentPoly alexander_to_conway(const SymmetrizedAlex& a);
SymmetrizedAlex conway_to_alexander(const IntLaurentPoly& conway);

// Conway coefficient vector (a_0, a_2, a_4, ...) <-> polynomial in z.
std::vector<Integer> conway_coeff_vector(const IntLaurentPoly& conway);
IntLaurentPoly conway_from_coeff_vector(const std::vector<Integer>& c);

bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// JSON: polynomials as {"exponent": coefficient}, SymmetrizedAlex as array.
// Coefficients that do not fit in int64 are written as decimal strings.
nlohmann::json to_json(const IntLaurentPoly& p);
IntLaurentPoly laurent_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SymmetrizedAlex& a);
SymmetrizedAlex alex_from_json(const nlohmann::json& j);
nlohmann::json integer_to_json(const Integer& n);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace adjlab
