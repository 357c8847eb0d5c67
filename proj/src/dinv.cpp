// SPDX-License-Identifier: Apache-2.0
#include "adjlab/dinv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "adjlab/errors.hpp"

namespace adjlab {

std::string DInvariantVector::describe() const {
  std::ostringstream os;
  if (const auto* l = std::get_if<LensSpace>(&space)) {
    os << "L(" << l->p << "," << l->q << ")";
  } else {
    const auto& s = std::get<SurgeredSpace>(space);
    os << "S^3_{" << s.p << "/" << s.q << "}(" << (s.knot.empty() ? "J" : s.knot)
       << ")";
  }
  return os.str();
}

nlohmann::json to_json(const DInvariantVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : v.values) j.push_back(r.str());
  return j;
}

DInvariantVector dinv_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("d-invariant vector must be a JSON array");
  DInvariantVector out;
  for (const auto& x : j) {
    if (x.is_string())
      out.values.push_back(Rational::parse(x.get<std::string>()));
    else
      out.values.emplace_back(integer_from_json(x));
  }
  out.space = SurgeredSpace{"", static_cast<long>(out.values.size()), 1};
  return out;
}

// ---------------------------------------------------------------- VSequence

bool VSequence::valid(const std::vector<std::int64_t>& v) {
  if (v.empty() || v.back() != 0) return false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (i + 1 < v.size() && v[i + 1] != v[i] && v[i + 1] != v[i] - 1)
      return false;
  }
  return true;
}

VSequence::VSequence(std::vector<std::int64_t> v) : v_(std::move(v)) {
  if (!valid(v_))
    throw PreconditionError("not a V-sequence (needs V_i >= V_{i+1} >= V_i - 1, "
                            "V_i >= 0, ending in 0)");
  auto first_zero = std::find(v_.begin(), v_.end(), 0);
  v_.erase(first_zero + 1, v_.end());
}

std::string VSequence::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- lens spaces

Rational lens_d_recursive(long p, long q, long i) {
  if (p < 1 || q < 0) throw PreconditionError("lens space needs p >= 1, q >= 0");
  if (std::gcd(p, q) != 1) throw PreconditionError("gcd(p, q) must be 1");
  if (p > 1 && q >= p) throw PreconditionError("lens space needs q < p");
  if (i < 0 || i >= p + q) throw PreconditionError("Spin^c index out of range");
  Rational acc(0);
  int sign = 1;
  while (p != 1) {
    Integer pq = Integer(p) * q;
    Integer c = Integer(2 * i + 1) - p - q;
    Rational term(pq - c * c, 4 * pq);
    acc += sign == 1 ? term : -term;
    sign = -sign;
    long r = p % q;
    i %= q;
    p = q;
    q = r;
  }
  return acc;
}

Rational lens_d(long p, long q, long i) { return -lens_d_recursive(p, q, i); }

DInvariantVector lens_d_vector(long p, long q) {
  DInvariantVector v;
  v.space = LensSpace{p, q};
  v.values.reserve(static_cast<std::size_t>(p));
  for (long i = 0; i < p; ++i) v.values.push_back(lens_d(p, q, i));
  return v;
}

Rational lens_d2_closed(long d, long i) {
  if (d < 1 || d % 2 == 0) throw PreconditionError("L(d,2) needs odd d >= 1");
  if (i < 0 || i >= d + 2) throw PreconditionError("Spin^c index out of range");
  Integer c = Integer(2 * i + 1) - d - 2;
  Rational r = -Rational(Integer(2 * d) - c * c, Integer(8 * d));
  return r - Rational(i % 2 == 0 ? 1 : -1, 4);
}

long niwu_conjugate(long p, long q, long i) {
  return (((q - 1 - i) % p) + p) % p;
}

long niwu_slot(long p, long q, long i) {
  return std::min(i / q, (p + q - 1 - i) / q);
}

// ------------------------------------------------------------ V <-> Alexander

VSequence v_from_alex(const SymmetrizedAlex& a) {
  if (a.at_one() != 1)
    throw NotLSpaceKnotError("Alexander polynomial must be 1 at t = 1");
  const int g = a.genus();
  std::vector<std::int64_t> v(static_cast<std::size_t>(g) + 1);
  for (int i = 0; i <= g; ++i) {
    Integer s = 0;
    for (int j = 1; i + j <= g; ++j) s += j * a.coeffs()[i + j];
    if (!s.fits_slong_p())
      throw NotLSpaceKnotError("torsion coefficient out of range");
    v[i] = s.get_si();
  }
  if (!VSequence::valid(v)) {
    std::ostringstream os;
    os << "not an L-space knot polynomial: V = (";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ") violates V_i >= V_{i+1} >= V_i - 1 >= -1";
    throw NotLSpaceKnotError(os.str());
  }
  return VSequence(std::move(v));
}

SymmetrizedAlex alex_from_v(const VSequence& v) {
  const std::size_t m = v.size();
  std::vector<Integer> a(m + 1);
  Integer rest = 0;
  for (std::size_t i = 0; i < m; ++i) {
    a[i + 1] = Integer(v[i]) - 2 * Integer(v[i + 1]) + Integer(v[i + 2]);
    rest += a[i + 1];
  }
  a[0] = 1 - 2 * rest;
  return SymmetrizedAlex(std::move(a));
}

// ------------------------------------------------------------------- Ni-Wu

std::vector<Rational> surgery_d_from_lens(const std::vector<Rational>& lens,
                                          long q, const VSequence& v) {
  const long p = static_cast<long>(lens.size());
  std::vector<Rational> out;
  out.reserve(lens.size());
  for (long i = 0; i < p; ++i)
    out.push_back(lens[i] - Rational(2 * v[niwu_slot(p, q, i)]));
  return out;
}

DInvariantVector niwu_surgery_d(long p, long q, const VSequence& v,
                                const std::string& knot) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw PreconditionError("surgery coefficient p/q needs coprime p, q > 0");
  if (p > 1 && q >= p) throw PreconditionError("Ni-Wu surgery needs q < p");
  DInvariantVector lens = lens_d_vector(p, p == 1 ? 0 : q);
  DInvariantVector out;
  out.space = SurgeredSpace{knot, p, q};
  out.values = surgery_d_from_lens(lens.values, q, v);
  return out;
}

VSequence invert_niwu(const DInvariantVector& sigma_d, long p, long q) {
  if (static_cast<long>(sigma_d.size()) != p)
    throw PreconditionError("d-invariant vector has " +
                            std::to_string(sigma_d.size()) + " entries, expected " +
                            std::to_string(p));
  DInvariantVector lens = lens_d_vector(p, p == 1 ? 0 : q);
  long max_slot = 0;
  for (long i = 0; i < p; ++i) max_slot = std::max(max_slot, niwu_slot(p, q, i));
  std::vector<std::optional<std::int64_t>> slot(max_slot + 1);
  for (long i = 0; i < p; ++i) {
    Rational x = (lens[i] - sigma_d[i]) / Rational(2);
    if (!x.is_integer())
      throw InconsistencyError("index " + std::to_string(i) + ": (" +
                               lens[i].str() + " - " + sigma_d[i].str() +
                               ")/2 = " + x.str() + " is not an integer");
    if (x.sign() < 0)
      throw InconsistencyError("index " + std::to_string(i) + ": V would be " +
                               x.str() + " < 0");
    long k = niwu_slot(p, q, i);
    std::int64_t vk = x.numerator().get_si();
    if (slot[k] && *slot[k] != vk)
      throw InconsistencyError("V_" + std::to_string(k) + " would be both " +
                               std::to_string(*slot[k]) + " and " +
                               std::to_string(vk));
    slot[k] = vk;
  }
  std::vector<std::int64_t> v;
  for (const auto& s : slot) v.push_back(s.value_or(0));
  for (std::size_t k = 0; k + 1 < v.size(); ++k)
    if (v[k + 1] != v[k] && v[k + 1] != v[k] - 1)
      throw InconsistencyError("V_" + std::to_string(k + 1) + " = " +
                               std::to_string(v[k + 1]) + " breaks the unit-step chain after V_" +
                               std::to_string(k) + " = " + std::to_string(v[k]));
  if (v.back() != 0)
    throw InconsistencyError("V does not reach 0 on the observable range");
  return VSequence(std::move(v));
}

namespace {

// Key for a rational modulo 2Z: (denominator, numerator mod 2*denominator).
std::pair<Integer, Integer> mod2_key(const Rational& r) {
  Integer den = r.denominator();
  Integer m = 2 * den;
  Integer num = r.numerator() % m;
  if (num < 0) num += m;
  return {den, num};
}

}  // namespace

DInvariantVector align_to_surgery_order(const DInvariantVector& sigma_d,
                                        long p, long q) {
  if (static_cast<long>(sigma_d.size()) != p)
    throw PreconditionError("d-invariant vector length does not match p");
  DInvariantVector lens = lens_d_vector(p, q);

  std::map<Rational, long> count;
  for (const auto& x : sigma_d.values) ++count[x];
  std::optional<Rational> self_value;
  std::map<std::pair<Integer, Integer>, std::vector<Rational>> sigma_by_res;
  for (const auto& [x, m] : count) {
    if (m % 2 == 1) {
      if (self_value)
        throw InconsistencyError("more than one d-invariant of odd multiplicity");
      self_value = x;
    }
    for (long k = 0; k < m / 2; ++k) sigma_by_res[mod2_key(x)].push_back(x);
  }
  if (!self_value) throw InconsistencyError("no self-conjugate d-invariant");

  // Conjugation classes of the target labelling.
  std::map<std::pair<Integer, Integer>, std::vector<long>> lens_by_res;
  long self_index = -1;
  for (long i = 0; i < p; ++i) {
    long j = niwu_conjugate(p, q, i);
    if (j == i) {
      self_index = i;
    } else if (i < j) {
      lens_by_res[mod2_key(lens[i])].push_back(i);
    }
  }
  if (mod2_key(lens[self_index]) != mod2_key(*self_value))
    throw InconsistencyError("self-conjugate d-invariant " + self_value->str() +
                             " is not congruent mod 2 to " +
                             lens[self_index].str());

  DInvariantVector out;
  out.space = SurgeredSpace{"", p, q};
  if (const auto* s = std::get_if<SurgeredSpace>(&sigma_d.space))
    std::get<SurgeredSpace>(out.space).knot = s->knot;
  out.values.assign(static_cast<std::size_t>(p), Rational(0));
  out.values[self_index] = *self_value;
  if (lens_by_res.size() != sigma_by_res.size())
    throw InconsistencyError("mod 2 classes of the two descriptions differ");
  for (const auto& [res, idx] : lens_by_res) {
    auto it = sigma_by_res.find(res);
    if (it == sigma_by_res.end() || it->second.size() != idx.size())
      throw InconsistencyError("mod 2 class sizes of the two descriptions differ");
    std::vector<Rational> vals = it->second;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    if (vals.size() != 1 && idx.size() > 1)
      throw InconsistencyError(
          "mod 2 residues do not determine a unique matching; use the solver");
    for (std::size_t k = 0; k < idx.size(); ++k) {
      out.values[idx[k]] = it->second[k];
      out.values[niwu_conjugate(p, q, idx[k])] = it->second[k];
    }
  }
  return out;
}

}  // namespace adjlab
