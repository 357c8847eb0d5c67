#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "adjlab/algebra.hpp"
#include "adjlab/dinv.hpp"

#ifndef ADJLAB_TEST_FIXTURES
#define ADJLAB_TEST_FIXTURES "fixtures"
#endif

namespace testsupport {

using adjlab::Rational;
using adjlab::VSequence;

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(ADJLAB_TEST_FIXTURES) / name;
}

inline const nlohmann::json& reference() {
  static const nlohmann::json j = [] {
    std::ifstream in(fixture("reference_values.json"));
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline std::vector<Rational> rationals(const nlohmann::json& arr) {
  std::vector<Rational> out;
  for (const auto& s : arr) out.push_back(Rational::parse(s.get<std::string>()));
  return out;
}

inline std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<std::int64_t> ints(const nlohmann::json& arr) {
  return arr.get<std::vector<std::int64_t>>();
}

// Naive lens recursion over fractions, written independently of the library.
inline Rational naive_dneg(long p, long q, long i) {
  if (p == 1) return Rational(0);
  long t = 2 * i + 1 - p - q;
  return Rational(adjlab::Integer(p * q - t * t), adjlab::Integer(4 * p * q)) -
         naive_dneg(q, p % q, i % q);
}

// Unpruned enumeration: every bijection between conjugation classes that
// carries each non-self class of sigma to a non-self class of indices, with
// the self-conjugate value pinned; each arrangement is inverted slot by slot.
// q = 2 conventions: conj(i) = (1 - i) mod p, slot(i) = min(i/2, (p+1-i)/2).
inline std::set<VSequence> brute_force_v(const std::vector<Rational>& lens,
                                         const std::vector<Rational>& sigma) {
  const long p = static_cast<long>(lens.size());
  auto conj = [p](long i) { return ((1 - i) % p + p) % p; };
  auto slot = [p](long i) { return std::min(i / 2, (p + 1 - i) / 2); };
  std::set<VSequence> out;

  std::map<Rational, long> count;
  for (const auto& x : sigma) ++count[x];
  std::vector<Rational> pair_values;
  Rational self_value;
  int odd = 0;
  for (const auto& [x, m] : count) {
    if (m % 2) {
      ++odd;
      self_value = x;
    }
    for (long k = 0; k < m / 2; ++k) pair_values.push_back(x);
  }
  if (odd != 1) return out;

  std::vector<long> pair_reps;
  long self_index = -1;
  for (long i = 0; i < p; ++i) {
    if (conj(i) == i) self_index = i;
    else if (i < conj(i)) pair_reps.push_back(i);
  }
  long max_slot = 0;
  for (long i = 0; i < p; ++i) max_slot = std::max(max_slot, slot(i));

  std::sort(pair_values.begin(), pair_values.end());
  do {
    std::vector<Rational> arranged(p);
    arranged[self_index] = self_value;
    for (std::size_t k = 0; k < pair_reps.size(); ++k) {
      arranged[pair_reps[k]] = pair_values[k];
      arranged[conj(pair_reps[k])] = pair_values[k];
    }
    std::vector<std::int64_t> v(max_slot + 1, -1);
    bool ok = true;
    for (long i = 0; i < p && ok; ++i) {
      Rational x = (lens[i] - arranged[i]) / Rational(2);
      if (!x.is_integer() || x.sign() < 0) {
        ok = false;
        break;
      }
      std::int64_t vk = x.numerator().get_si();
      auto& s = v[slot(i)];
      if (s >= 0 && s != vk) ok = false;
      s = vk;
    }
    if (!ok || v.back() != 0) continue;
    if (!VSequence::valid(v)) continue;
    out.insert(VSequence(v));
  } while (std::next_permutation(pair_values.begin(), pair_values.end()));
  return out;
}

// Random valid V sequence with exactly len entries ending in 0.
inline std::vector<std::int64_t> random_v(std::mt19937_64& rng, std::size_t len) {
  std::vector<std::int64_t> v(len, 0);
  for (std::size_t k = len - 1; k-- > 0;)
    v[k] = v[k + 1] + static_cast<std::int64_t>(rng() % 2);
  return v;
}

}  // namespace testsupport
