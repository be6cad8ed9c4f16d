#pragma once

// Brute-force oracles for the diagonal-embedding lemmas. A subgroup C_d^k
// acting diagonally on C^n is an n x k exponent matrix M over Z/d: column j
// holds the exponents of the j-th generator, and the group element g (a
// column vector over Z/d) acts with eigenvalues zeta_d^{(Mg)_i}. The
// hyperelliptic conditions then become combinatorics on M:
//
//   eigenvalue 1 everywhere  <=>  every nonzero g has a zero entry in Mg
//   faithful                 <=>  rank of (M mod p) is k for every p | d
//   common fixed coordinate  <=>  M has a zero row
//
// enumerateValidEmbeddings exhausts such matrices up to coordinate
// permutation and basis change of C_d^k; verifyCommonEigenvector decides the
// zero-row question for all of them at once via a covering search that never
// builds the full list.

#include "canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace hyperell {

struct DiagEmbedding {
  long long n = 0, d = 0, k = 0;
  std::vector<std::vector<long long>> M;  // n rows of k exponents in [0,d)
};

struct CMTypeClass {
  long long d = 0;
  std::vector<std::vector<long long>> representatives;  // sorted exponent sets
};

// The multiset {zeta_d^{v} : v in exps} takes rational-integer trace sums
// exactly when, for each order o, the map j -> cnt(j) + cnt(o-j) is constant
// over the units j of o. Equivalent to nuProfile(...).integral but without
// building RootOfUnity objects.
inline bool integralExponentMultiset(long long d, const std::vector<long long>& exps) {
  std::map<long long, std::map<long long, long long>> byOrder;
  for (long long v : exps) {
    long long r = ((v % d) + d) % d;
    long long g = std::gcd(r, d);
    byOrder[d / g][r / g] += 1;
  }
  for (auto& [o, cnt] : byOrder) {
    if (eulerPhi(o) <= 2) continue;  // a single conjugate pair is always balanced
    long long common = -1;
    for (long long j = 1; 2 * j < o; ++j) {
      if (std::gcd(j, o) != 1) continue;
      long long s = 0;
      auto a = cnt.find(j), b = cnt.find(o - j);
      if (a != cnt.end()) s += a->second;
      if (b != cnt.end()) s += b->second;
      if (common < 0)
        common = s;
      else if (common != s)
        return false;
    }
  }
  return true;
}

namespace detail {

inline long long contentModD(const std::vector<long long>& row, long long d) {
  long long g = d;
  for (long long x : row) g = std::gcd(g, x);
  return g;  // == d exactly for the zero row
}

// rank of M mod p (p prime), by elimination on copies of the rows
inline long long rankModP(std::vector<std::vector<long long>> rows, long long p) {
  long long rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols; ++c) {
    size_t piv = rows.size();
    for (size_t i = rank; i < rows.size(); ++i)
      if (rows[i][c] % p != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    long long inv = invMod(((rows[rank][c] % p) + p) % p, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<size_t>(rank)) continue;
      long long f = ((rows[i][c] % p) + p) % p;
      if (f == 0) continue;
      for (size_t j = 0; j < cols; ++j)
        rows[i][j] = ((rows[i][j] - f * inv % p * rows[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline bool faithfulDiag(long long d, long long k, const std::vector<std::vector<long long>>& M) {
  for (auto& [p, e] : factorize(d))
    if (rankModP(M, p) < k) return false;
  return true;
}

}  // namespace detail

// Exhaustive list of diagonal C_d^k embeddings into GL(n,C) in which every
// group element has the eigenvalue 1, optionally with all elements integral,
// optionally dropping faithfulness (the matrix-shape lemma needs the verdict
// for the non-faithful family too). Canonical form: rows sorted, zero rows
// first, and the first nonzero row is (0,...,0,g) for a proper divisor g | d;
// every row content is >= g because basis change preserves contents.
inline std::vector<DiagEmbedding> enumerateValidEmbeddings(long long n, long long d,
                                                           long long k,
                                                           bool requireIntegrality = false,
                                                           bool requireFaithful = true,
                                                           long long opBudget = 200000000) {
  if (n < 1 || n > 6) throw std::runtime_error("oracles: n must be between 1 and 6");
  if (d < 2 || k < 1) throw std::runtime_error("oracles: need d >= 2 and k >= 1");
  long long total = 1;
  for (long long i = 0; i < k; ++i) {
    total *= d;
    if (total > 10000000) throw std::runtime_error("oracles: d^k exceeds the enumeration budget");
  }

  // all rows in lex order; row index == mixed-radix code
  std::vector<std::vector<long long>> rows(total, std::vector<long long>(k));
  std::vector<long long> content(total);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (long long j = k - 1; j >= 0; --j) {
      rows[code][j] = c % d;
      c /= d;
    }
    content[code] = detail::contentModD(rows[code], d);
  }

  long long ops = 0;
  auto charge = [&](long long c) {
    ops += c;
    if (ops > opBudget) throw std::runtime_error("oracles: enumeration budget exceeded");
  };

  std::vector<DiagEmbedding> out;
  std::vector<long long> chosen;  // row codes, nondecreasing

  auto acceptIfValid = [&]() {
    DiagEmbedding e;
    e.n = n;
    e.d = d;
    e.k = k;
    for (long long code : chosen) e.M.push_back(rows[code]);
    if (requireFaithful && !detail::faithfulDiag(d, k, e.M)) return;
    charge(total * (n + k));
    std::vector<long long> v(n);
    for (long long g = 1; g < total; ++g) {
      bool zero = false;
      for (long long i = 0; i < n; ++i) {
        long long s = 0;
        for (long long j = 0; j < k; ++j) s += e.M[i][j] * rows[g][j];
        v[i] = s % d;
        if (v[i] == 0) zero = true;
      }
      if (!zero) return;
      if (requireIntegrality && !integralExponentMultiset(d, v)) return;
    }
    out.push_back(std::move(e));
  };

  std::function<void(long long, long long, long long)> rec = [&](long long slot, long long minCode,
                                                                 long long minContent) {
    charge(1);
    if (slot == n) {
      acceptIfValid();
      return;
    }
    if (minCode == 0) {
      // still in the zero-row prefix: either one more zero row, or the
      // canonical first nonzero row (0,...,0,g)
      chosen.push_back(0);
      rec(slot + 1, 0, 0);
      chosen.pop_back();
      for (long long g : divisorsOf(d)) {
        if (g == d) continue;
        chosen.push_back(g);  // encodes (0,...,0,g)
        rec(slot + 1, g, g);
        chosen.pop_back();
      }
      return;
    }
    for (long long code = minCode; code < total; ++code) {
      if (content[code] < minContent) continue;
      chosen.push_back(code);
      rec(slot + 1, code, minContent);
      chosen.pop_back();
    }
  };
  rec(0, 0, 0);
  return out;
}

namespace detail {

// Decide whether some faithful, eigenvalue-1-everywhere diagonal embedding of
// C_d^k into GL(n,C) avoids a zero row. Covering formulation: pick at most n
// nonzero rows r with (1) every nonzero g annihilated by some r, and (2) full
// rank mod every p | d. Rows can repeat, so row sets of size <= n suffice,
// and missing rank is repaired by CRT filler rows afterwards.
inline bool existsNoZeroRowEmbedding(long long n, long long d, long long k) {
  long long total = 1;
  for (long long i = 0; i < k; ++i) {
    total *= d;
    if (total > 10000000) throw std::runtime_error("oracles: d^k exceeds the enumeration budget");
  }
  std::vector<long long> primes;
  for (auto& [p, e] : factorize(d)) primes.push_back(p);

  // Necessary content profile: kernels must cover d^k - 1 nonzero elements
  // (|ker r| = content(r) * d^(k-1)), and faithfulness needs at least k rows
  // with p-free content for each p. If no multiset of proper divisors
  // passes both, there is nothing to search.
  {
    std::vector<long long> divs;
    for (long long g : divisorsOf(d))
      if (g != d) divs.push_back(g);
    long long dk1 = total / d;
    std::vector<long long> profile;
    bool anyProfile = false;
    std::function<void(size_t, long long)> walk = [&](size_t from, long long left) {
      if (anyProfile) return;
      if (left == 0) {
        long long cover = 0;
        for (long long g : profile) cover += g * dk1 - 1;
        if (cover < total - 1) return;
        for (long long p : primes) {
          long long ok = 0;
          for (long long g : profile)
            if (g % p != 0) ++ok;
          if (ok < k) return;
        }
        anyProfile = true;
        return;
      }
      for (size_t i = from; i < divs.size(); ++i) {
        profile.push_back(divs[i]);
        walk(i, left - 1);
        profile.pop_back();
      }
    };
    walk(0, n);
    if (!anyProfile) return false;
  }

  if (total > 4096)
    throw std::runtime_error("oracles: case too large for the covering search");
  const size_t words = static_cast<size_t>((total + 63) / 64);
  using Bits = std::array<uint64_t, 64>;

  // Candidate rows, one per kernel (rows with equal kernels are unit
  // multiples of each other, so swapping preserves ranks too).
  std::vector<std::vector<long long>> rowVec;
  std::vector<Bits> kernels;
  std::vector<long long> kerSize;
  std::map<Bits, size_t> byKernel;
  auto kernelOf = [&](const std::vector<long long>& r, long long& cnt) {
    Bits ker{};
    cnt = 0;
    std::vector<long long> g(k, 0);
    for (long long e = 1; e < total; ++e) {
      long long carry = k - 1;
      while (carry >= 0 && ++g[carry] == d) g[carry--] = 0;
      long long s = 0;
      for (long long j = 0; j < k; ++j) s += r[j] * g[j];
      if (s % d == 0) {
        ker[e >> 6] |= uint64_t(1) << (e & 63);
        ++cnt;
      }
    }
    return ker;
  };
  {
    std::vector<long long> r(k);
    for (long long code = 1; code < total; ++code) {
      long long c = code;
      for (long long j = k - 1; j >= 0; --j) {
        r[j] = c % d;
        c /= d;
      }
      long long cnt = 0;
      Bits ker = kernelOf(r, cnt);
      if (byKernel.emplace(ker, rowVec.size()).second) {
        rowVec.push_back(r);
        kernels.push_back(ker);
        kerSize.push_back(cnt);
      }
    }
  }
  long long maxKer = 0;
  for (long long s : kerSize) maxKer = std::max(maxKer, s);

  // The first pivot is g0 = (0,...,0,1), annihilated exactly by the rows with
  // last entry 0. The stabilizer of g0 in GL_k(Z/d) turns any such row into
  // (0,...,0,g,0) with g its content, so the root branches only over proper
  // divisors of d; below the root, full branching with sibling exclusion.
  std::vector<size_t> rootRows;
  if (k >= 2) {
    for (long long g : divisorsOf(d)) {
      if (g == d) continue;
      std::vector<long long> rep(k, 0);
      rep[k - 2] = g;
      long long cnt = 0;
      Bits ker = kernelOf(rep, cnt);
      rootRows.push_back(byKernel.at(ker));
    }
  }

  // per-prime elimination bases of the chosen rows
  std::vector<std::vector<std::vector<long long>>> basis(primes.size());
  std::vector<bool> banned(kernels.size(), false);

  std::function<bool(const Bits&, long long, long long)> dfs =
      [&](const Bits& covered, long long uncovered, long long used) -> bool {
    long long deficiency = 0;
    for (size_t pi = 0; pi < primes.size(); ++pi)
      deficiency = std::max(deficiency, k - static_cast<long long>(basis[pi].size()));
    if (deficiency > n - used) return false;
    if (uncovered == 0) return true;  // fillers restore any missing rank
    if (used == n || uncovered > maxKer * (n - used)) return false;
    long long pivot = 0;
    for (size_t w = 0; w < words; ++w) {
      uint64_t free = ~covered[w];
      if (w == 0) free &= ~uint64_t(1);  // the identity needs no cover
      if (w + 1 == words && (total & 63)) free &= (uint64_t(1) << (total & 63)) - 1;
      if (free) {
        pivot = 64 * w + __builtin_ctzll(free);
        break;
      }
    }
    std::vector<size_t> bannedHere;
    bool found = false;
    auto tryRow = [&](size_t ri) {
      if (banned[ri] || !((kernels[ri][pivot >> 6] >> (pivot & 63)) & 1)) return;
      std::vector<size_t> grew;
      for (size_t pi = 0; pi < primes.size(); ++pi) {
        long long p = primes[pi];
        std::vector<long long> red(rowVec[ri]);
        for (auto& b : basis[pi]) {
          size_t lc = 0;
          while (lc < static_cast<size_t>(k) && b[lc] == 0) ++lc;
          if (red[lc] % p != 0) {
            long long f = red[lc] % p * invMod(b[lc], p) % p;
            for (size_t j = 0; j < static_cast<size_t>(k); ++j)
              red[j] = ((red[j] - f * b[j]) % p + p) % p;
          }
        }
        bool nonzero = false;
        for (long long x : red)
          if (x % p != 0) nonzero = true;
        if (nonzero) {
          for (auto& x : red) x = ((x % p) + p) % p;
          basis[pi].push_back(red);
          grew.push_back(pi);
        }
      }
      Bits next = covered;
      long long fresh = 0;
      for (size_t w = 0; w < words; ++w) {
        fresh += __builtin_popcountll(kernels[ri][w] & ~covered[w]);
        next[w] |= kernels[ri][w];
      }
      found = dfs(next, uncovered - fresh, used + 1);
      for (size_t pi : grew) basis[pi].pop_back();
      if (!found) {
        // a solution set containing this row was just searched exhaustively,
        // so siblings and their subtrees may exclude the row
        banned[ri] = true;
        bannedHere.push_back(ri);
      }
    };
    if (used == 0) {
      for (size_t ri : rootRows) {
        if (found) break;
        tryRow(ri);
      }
    } else {
      for (size_t ri = 0; ri < kernels.size() && !found; ++ri) tryRow(ri);
    }
    for (size_t ri : bannedHere) banned[ri] = false;
    return found;
  };
  Bits empty{};
  return dfs(empty, total - 1, 0);
}

}  // namespace detail

// True when every faithful diagonal embedding of C_d^k into GL(n,C) with
// eigenvalue 1 everywhere has a coordinate on which all generators act
// trivially.
inline bool verifyCommonEigenvector(long long n, long long d, long long k) {
  if (n < 1 || n > 6) throw std::runtime_error("oracles: n must be between 1 and 6");
  if (d < 2 || k < 1) throw std::runtime_error("oracles: need d >= 2 and k >= 1");
  return !detail::existsNoZeroRowEmbedding(n, d, k);
}

namespace detail {

// Faithful C_d x C_d with eigenvalue 1 everywhere and integrality, in
// dimension 4, by searching generator-exponent column pairs. Both columns
// must have content 1, a zero coordinate, and integral multiples; the pair
// check sweeps all d^2 combinations.
inline bool existsCdSquaredDim4(long long d) {
  std::vector<std::vector<long long>> good;
  std::vector<long long> c(4);
  long long total = d * d * d * d;
  for (long long code = 0; code < total; ++code) {
    long long x = code;
    bool zero = false;
    long long g = d;
    for (int i = 3; i >= 0; --i) {
      c[i] = x % d;
      x /= d;
      if (c[i] == 0) zero = true;
      g = std::gcd(g, c[i]);
    }
    if (!zero || g != 1) continue;
    bool ok = true;
    std::vector<long long> m(4);
    for (long long t = 1; t < d && ok; ++t) {
      for (int i = 0; i < 4; ++i) m[i] = c[i] * t % d;
      ok = integralExponentMultiset(d, m);
    }
    if (ok) good.push_back(c);
  }

  // first column up to coordinate sort and unit scaling
  std::set<std::vector<long long>> firstReps;
  for (auto& col : good) {
    std::vector<long long> best;
    for (long long u = 1; u < d; ++u) {
      if (std::gcd(u, d) != 1) continue;
      std::vector<long long> im(4);
      for (int i = 0; i < 4; ++i) im[i] = col[i] * u % d;
      std::sort(im.begin(), im.end());
      if (best.empty() || im < best) best = im;
    }
    firstReps.insert(best);
  }

  std::vector<long long> v(4);
  for (auto& c1 : firstReps) {
    for (auto& c2 : good) {
      bool ok = true;
      for (long long a = 0; a < d && ok; ++a) {
        for (long long b = 0; b < d && ok; ++b) {
          if (a == 0 && b == 0) continue;
          bool zero = false, allzero = true;
          for (int i = 0; i < 4; ++i) {
            v[i] = (a * c1[i] + b * c2[i]) % d;
            if (v[i] == 0)
              zero = true;
            else
              allzero = false;
          }
          if (allzero || !zero || !integralExponentMultiset(d, v)) ok = false;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace detail

// The d for which C_d x C_d acts faithfully and diagonally on C^4 with
// eigenvalue 1 everywhere and integrality; exhausted over d <= 30. Any such
// action restricts to C_q x C_q for every prime power q | d, and each
// generator's eigenvalue multiset is an allowed order-d configuration, so
// most d die before the direct search.
inline std::set<long long> cdPowerAllowedSet(long long n) {
  if (n != 4) throw std::runtime_error("oracles: cdPowerAllowedSet implements n = 4 only");
  auto elementOrders = elementOrderSet(4);
  std::map<long long, bool> memo;
  auto exists = [&](long long d) {
    auto it = memo.find(d);
    if (it == memo.end()) it = memo.emplace(d, detail::existsCdSquaredDim4(d)).first;
    return it->second;
  };
  std::set<long long> out;
  for (long long d = 2; d <= 30; ++d) {
    if (!elementOrders.count(d)) continue;
    bool partsOk = true;
    for (auto& [p, e] : factorize(d)) {
      long long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      if (q != d && !exists(q)) partsOk = false;
    }
    if (partsOk && exists(d)) out.insert(d);
  }
  return out;
}

// CM types for phi(d) in {4,6}: subsets S of (Z/d)^* of size phi(d)/2 with
// S and -S disjoint, classified up to multiplication by units. The
// representative of each class is the lexicographically least member.
inline CMTypeClass enumerateCMTypes(long long d) {
  long long phi = eulerPhi(d);
  if (phi != 4 && phi != 6)
    throw std::runtime_error("oracles: CM types implemented for phi(d) in {4,6} only");
  std::vector<long long> units;
  for (long long j = 1; j < d; ++j)
    if (std::gcd(j, d) == 1) units.push_back(j);
  std::vector<std::pair<long long, long long>> pairs;
  for (long long j : units)
    if (j < d - j) pairs.push_back({j, d - j});

  std::set<std::vector<long long>> reps;
  for (long long mask = 0; mask < (1 << pairs.size()); ++mask) {
    std::vector<long long> type;
    for (size_t i = 0; i < pairs.size(); ++i)
      type.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
    std::sort(type.begin(), type.end());
    std::vector<long long> best = type;
    for (long long u : units) {
      std::vector<long long> im;
      for (long long x : type) im.push_back(x * u % d);
      std::sort(im.begin(), im.end());
      if (im < best) best = im;
    }
    reps.insert(best);
  }
  CMTypeClass out;
  out.d = d;
  out.representatives.assign(reps.begin(), reps.end());
  return out;
}

// Unit-multiplication orbit of one CM type (for equivalence checks).
inline std::set<std::vector<long long>> cmTypeOrbit(long long d, std::vector<long long> type) {
  std::sort(type.begin(), type.end());
  std::set<std::vector<long long>> orbit;
  for (long long u = 1; u < d; ++u) {
    if (std::gcd(u, d) != 1) continue;
    std::vector<long long> im;
    for (long long x : type) im.push_back(x * u % d);
    std::sort(im.begin(), im.end());
    orbit.insert(im);
  }
  return orbit;
}

inline bool sameCMOrbit(long long d, const std::vector<long long>& a,
                        const std::vector<long long>& b) {
  std::vector<long long> bs = b;
  std::sort(bs.begin(), bs.end());
  return cmTypeOrbit(d, a).count(bs) > 0;
}

}  // namespace hyperell
