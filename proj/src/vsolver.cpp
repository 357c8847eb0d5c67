// SPDX-License-Identifier: Apache-2.0
#include "adjlab/vsolver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "adjlab/errors.hpp"

namespace adjlab {

namespace {

struct Search {
  const std::vector<Rational>& lens;
  std::vector<std::vector<long>> slots;  // class representatives per slot
  long self_index = -1;
  Rational self_value;
  std::map<Rational, long> pool;  // non-self classes still to be matched
  std::vector<std::int64_t> acc;
  std::set<VSequence> found;
  std::size_t nodes = 0;

  bool take(long i, std::int64_t vk, std::vector<Rational>& used) {
    Rational v = lens[i] - Rational(2 * vk);
    if (i == self_index) return v == self_value;
    auto it = pool.find(v);
    if (it == pool.end() || it->second == 0) return false;
    --it->second;
    used.push_back(std::move(v));
    return true;
  }

  void dfs(std::size_t k) {
    ++nodes;
    if (k == slots.size()) {
      // The last observable slot must be 0: an L-space knot with positive
      // p/q surgery has genus at most the number of slots.
      if (acc.back() == 0) found.insert(VSequence(acc));
      return;
    }
    std::vector<std::int64_t> cand;
    if (k == 0) {
      long i0 = slots[0].front();
      std::set<std::int64_t, std::greater<>> c;
      auto consider = [&](const Rational& s) {
        Rational x = (lens[i0] - s) / Rational(2);
        if (x.is_integer() && x.sign() >= 0 && x.numerator().fits_slong_p())
          c.insert(x.numerator().get_si());
      };
      for (const auto& [s, m] : pool) consider(s);
      consider(self_value);
      cand.assign(c.begin(), c.end());
    } else {
      std::int64_t prev = acc.back();
      cand.push_back(prev);
      if (prev > 0) cand.push_back(prev - 1);
    }
    for (std::int64_t vk : cand) {
      std::vector<Rational> used;
      bool ok = true;
      for (long i : slots[k]) {
        if (!take(i, vk, used)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        acc.push_back(vk);
        dfs(k + 1);
        acc.pop_back();
      }
      for (const auto& v : used) ++pool[v];
    }
  }
};

}  // namespace

VSolution admissible_v_sequences(const std::vector<Rational>& lens,
                                 const std::vector<Rational>& sigma, long q) {
  const long p = static_cast<long>(lens.size());
  if (p < 1 || p % 2 == 0)
    throw PreconditionError("solver needs an odd number of Spin^c structures");
  if (static_cast<long>(sigma.size()) != p)
    throw PreconditionError("lens and surgered vectors differ in length");
  if (q < 1 || (p > 1 && q >= p))
    throw PreconditionError("solver needs 1 <= q < p");
  for (long i = 0; i < p; ++i)
    if (lens[i] != lens[niwu_conjugate(p, q, i)])
      throw PreconditionError("lens vector is not conjugation symmetric");

  Search s{lens, {}, -1, Rational(0), {}, {}, {}, 0};
  VSolution out;

  std::map<Rational, long> count;
  for (const auto& x : sigma) ++count[x];
  std::optional<Rational> odd;
  for (const auto& [x, m] : count) {
    if (m % 2 == 1) {
      if (odd) return out;  // two odd multiplicities: not a conjugation-invariant multiset
      odd = x;
    }
    if (m / 2 > 0) s.pool[x] = m / 2;
  }
  if (!odd) return out;
  s.self_value = *odd;

  long max_slot = 0;
  std::vector<std::pair<long, long>> reps;  // (slot, index)
  for (long i = 0; i < p; ++i) {
    long j = niwu_conjugate(p, q, i);
    if (j < i) continue;
    if (i == j) s.self_index = i;
    long si = niwu_slot(p, q, i);
    long sj = niwu_slot(p, q, j);
    long rep = si <= sj ? i : j;
    long slot = std::min(si, sj);
    reps.emplace_back(slot, rep);
    max_slot = std::max(max_slot, slot);
  }
  s.slots.assign(static_cast<std::size_t>(max_slot) + 1, {});
  for (const auto& [slot, i] : reps) s.slots[slot].push_back(i);
  for (auto& sl : s.slots) std::sort(sl.begin(), sl.end());

  s.dfs(0);
  out.sequences.assign(s.found.begin(), s.found.end());
  out.unique = out.sequences.size() == 1;
  out.nodes = s.nodes;
  return out;
}

VSolution admissible_v_sequences(const DInvariantVector& lens_d,
                                 const DInvariantVector& sigma_d, long q) {
  if (const auto* l = std::get_if<LensSpace>(&lens_d.space)) {
    if (l->p != static_cast<long>(lens_d.size()) || (l->p > 1 && l->q != q))
      throw PreconditionError("lens vector does not describe L(p," +
                              std::to_string(q) + ")");
  }
  return admissible_v_sequences(lens_d.values, sigma_d.values, q);
}

}  // namespace adjlab
