#pragma once

// Canonical-divisor torsion: exhaustive enumeration of the integral
// eigenvalue configurations that contain the eigenvalue 1, the set of
// determinant orders they realize, and tau(n) = lcm of that set.
//
// A configuration is a size-n multiset S of roots of unity with 1 in S whose
// nu-profile is integral. Counting conjugates, an entry order k contributes
// phi(k)*nu_k to a total of 2n, so phi(k) <= 2(n-1) for every k > 1. We walk
// order multisets first (the nu-constraint phi(k) | 2*count kills most of
// them), then exponent patterns per order, and keep one representative per
// Galois orbit.

#include "cyclo.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace hyperell {

struct EigenConfig {
  RUMultiset S;  // sorted, size n, contains the trivial root

  long long order() const {  // order of a diagonal matrix with these entries
    long long L = 1;
    for (auto& r : S) L = lcmLL(L, r.order);
    return L;
  }
  RootOfUnity det() const {
    RootOfUnity d(1, 0);
    for (auto& r : S) d = d * r;
    return d;
  }
};

namespace detail {

inline void checkCanonicalDim(long long n) {
  if (n < 2 || n > 4) throw std::runtime_error("canonical: n must be 2, 3, or 4");
}

// Exponent multisets for `count` primitive k-th roots with m(j) + m(-j)
// constant. Each multiset comes back sorted.
inline std::vector<std::vector<long long>> exponentPatterns(long long k, long long count) {
  if (k <= 2) return {std::vector<long long>(count, k == 1 ? 0 : 1)};
  long long phi = eulerPhi(k);
  if ((2 * count) % phi != 0) return {};
  long long nu = 2 * count / phi;
  std::vector<std::pair<long long, long long>> pairs;  // j < k-j, both units
  for (long long j = 1; 2 * j < k; ++j)
    if (std::gcd(j, k) == 1) pairs.push_back({j, k - j});
  std::vector<std::vector<long long>> out;
  std::vector<long long> mult(pairs.size(), 0);  // multiplicity of the lower rep
  while (true) {
    std::vector<long long> exps;
    for (size_t i = 0; i < pairs.size(); ++i) {
      for (long long t = 0; t < mult[i]; ++t) exps.push_back(pairs[i].first);
      for (long long t = 0; t < nu - mult[i]; ++t) exps.push_back(pairs[i].second);
    }
    std::sort(exps.begin(), exps.end());
    out.push_back(exps);
    size_t pos = 0;
    while (pos < mult.size() && mult[pos] == nu) mult[pos++] = 0;
    if (pos == mult.size()) break;
    ++mult[pos];
  }
  return out;
}

// Lexicographically least Galois translate of a sorted multiset.
inline RUMultiset galoisCanonical(const RUMultiset& s) {
  long long L = 1;
  for (auto& r : s) L = lcmLL(L, r.order);
  RUMultiset best = s;
  for (long long j = 2; j < L; ++j) {
    if (std::gcd(j, L) != 1) continue;
    RUMultiset img;
    img.reserve(s.size());
    for (auto& r : s) img.push_back(r.pow(j));
    std::sort(img.begin(), img.end());
    if (img < best) best = img;
  }
  return best;
}

}  // namespace detail

inline std::vector<EigenConfig> allowedEigenConfigs(long long n) {
  detail::checkCanonicalDim(n);
  std::vector<long long> orders;
  for (long long k = 1; k <= 8 * (n - 1) * (n - 1); ++k)  // phi(k) >= sqrt(k/2)
    if (eulerPhi(k) <= 2 * (n - 1)) orders.push_back(k);

  std::set<RUMultiset> seen;
  std::vector<EigenConfig> out;

  // Order multisets of size n over `orders`, at least one entry of order 1.
  std::vector<long long> pick;
  auto emit = [&](const std::map<long long, long long>& histo) {
    // Cross product of exponent patterns per order.
    std::vector<long long> ks;
    std::vector<std::vector<std::vector<long long>>> pats;
    for (auto& [k, c] : histo) {
      auto p = detail::exponentPatterns(k, c);
      if (p.empty()) return;
      ks.push_back(k);
      pats.push_back(std::move(p));
    }
    std::vector<size_t> idx(ks.size(), 0);
    while (true) {
      RUMultiset s;
      for (size_t i = 0; i < ks.size(); ++i)
        for (long long e : pats[i][idx[i]]) s.push_back(RootOfUnity(ks[i], e));
      std::sort(s.begin(), s.end());
      if (nuProfile(s).integral) {
        RUMultiset canon = detail::galoisCanonical(s);
        if (seen.insert(canon).second) out.push_back(EigenConfig{canon});
      }
      size_t pos = 0;
      while (pos < idx.size() && idx[pos] + 1 == pats[pos].size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
      ++idx[pos];
    }
  };
  std::function<void(size_t, long long)> rec = [&](size_t from, long long left) {
    if (left == 0) {
      if (pick[0] != 1) return;  // must contain the eigenvalue 1
      std::map<long long, long long> histo;
      for (long long k : pick) ++histo[k];
      emit(histo);
      return;
    }
    for (size_t i = from; i < orders.size(); ++i) {
      pick.push_back(orders[i]);
      rec(i, left - 1);
      pick.pop_back();
    }
  };
  rec(0, n);

  std::sort(out.begin(), out.end(),
            [](const EigenConfig& a, const EigenConfig& b) { return a.S < b.S; });
  return out;
}

inline std::set<long long> detOrderSet(long long n) {
  detail::checkCanonicalDim(n);
  std::set<long long> out;
  for (auto& cfg : allowedEigenConfigs(n)) out.insert(cfg.det().order);
  return out;
}

// One witness configuration per realized determinant order (first in the
// canonical enumeration order).
inline std::map<long long, EigenConfig> detOrderWitnesses(long long n) {
  detail::checkCanonicalDim(n);
  std::map<long long, EigenConfig> out;
  for (auto& cfg : allowedEigenConfigs(n)) out.emplace(cfg.det().order, cfg);
  return out;
}

inline std::set<long long> elementOrderSet(long long n) {
  detail::checkCanonicalDim(n);
  std::set<long long> out;
  for (auto& cfg : allowedEigenConfigs(n)) out.insert(cfg.order());
  return out;
}

inline long long tau(long long n) {
  long long L = 1;
  for (long long d : detOrderSet(n)) L = lcmLL(L, d);
  return L;
}

}  // namespace hyperell
