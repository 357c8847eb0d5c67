// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "adjlab/algebra.hpp"

namespace adjlab {

struct LensSpace {
  long p = 1;
  long q = 0;
};

struct SurgeredSpace {
  std::string knot;  // may be empty for anonymous inputs
  long p = 1;
  long q = 1;
};

using SpaceDescriptor = std::variant<LensSpace, SurgeredSpace>;

struct DInvariantVector {
  SpaceDescriptor space;
  std::vector<Rational> values;  // indexed by Spin^c label i = 0..p-1

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t i) const { return values[i]; }
  std::string describe() const;
};

nlohmann::json to_json(const DInvariantVector& v);
// Accepts an array of "n/d" strings (or integers); the descriptor is left
// as an anonymous lens/surgery space of size p.
DInvariantVector dinv_from_json(const nlohmann::json& j);

// Non-increasing, unit steps, non-negative, eventually zero.  Stored
// trimmed so that the last entry is the first zero.
class VSequence {
 public:
  VSequence() : v_{0} {}
  explicit VSequence(std::vector<std::int64_t> v);  // throws PreconditionError

  static bool valid(const std::vector<std::int64_t>& v);

  const std::vector<std::int64_t>& values() const { return v_; }
  std::size_t size() const { return v_.size(); }
  std::int64_t operator[](std::size_t i) const {
    return i < v_.size() ? v_[i] : 0;
  }
  std::string str() const;

  friend bool operator==(const VSequence&, const VSequence&) = default;
  friend auto operator<=>(const VSequence& a, const VSequence& b) {
    return a.v_ <=> b.v_;
  }

 private:
  std::vector<std::int64_t> v_;
};

// d(-L(p,q), i) by the reciprocity recursion; 0 <= i < p+q, p > q >= 0
// (q = 0 only for p = 1).
Rational lens_d_recursive(long p, long q, long i);
// d(L(p,q), i) = -lens_d_recursive(p, q, i)
Rational lens_d(long p, long q, long i);
DInvariantVector lens_d_vector(long p, long q);
// Closed form for L(d,2), d odd.
Rational lens_d2_closed(long d, long i);

// Ni-Wu labelling of L(p,q) / S^3_{p/q}(J): conjugation pairs i with
// (q-1-i) mod p, and the V index entering the max is the smaller of
// floor(i/q) and floor((p+q-1-i)/q).
long niwu_conjugate(long p, long q, long i);
long niwu_slot(long p, long q, long i);

VSequence v_from_alex(const SymmetrizedAlex& a);
SymmetrizedAlex alex_from_v(const VSequence& v);

DInvariantVector niwu_surgery_d(long p, long q, const VSequence& v,
                                const std::string& knot = "");
// Same formula over an explicit lens vector (used with synthetic inputs).
std::vector<Rational> surgery_d_from_lens(const std::vector<Rational>& lens,
                                          long q, const VSequence& v);

// Reads V off sigma_d, which must already be in the Ni-Wu order of (p,q).
// Throws InconsistencyError on any non-integral, negative, disagreeing or
// non-unit-step value.
VSequence invert_niwu(const DInvariantVector& sigma_d, long p, long q);

// Reorders a d-invariant vector computed in another surgery description of
// the same manifold into the (p,q) Ni-Wu order, matching conjugation classes
// by the residue of (lens - sigma) mod 2.  Throws InconsistencyError when
// the residues do not determine a unique class-by-class matching.
DInvariantVector align_to_surgery_order(const DInvariantVector& sigma_d,
                                        long p, long q);

}  // namespace adjlab
