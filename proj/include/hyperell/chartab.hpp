#pragma once

// Exact character tables of finite groups.
//
// Abelian groups are handled through the character group directly. For the
// non-abelian case we run Dixon's method: common eigenvectors of the class
// algebra over a suitable prime field, degrees by modular square roots, and
// value lifting through eigenvalue multisets, producing exact cyclotomic
// values at the end.

#include "cyclo.hpp"
#include "group.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace hyperell {

struct CharacterTable {
  Group group;
  std::vector<int> classReps;
  std::vector<long long> classSizes;
  std::vector<long long> classOrders;           // element order per class
  std::vector<std::vector<CycloNum>> chars;     // one row per irreducible

  long long numClasses() const { return static_cast<long long>(classReps.size()); }
  long long degree(int i) const { return toLongLong(asInteger(chars[i][0].asRational())); }

  // <a, b> = (1/|G|) sum_c |C_c| a(c) conj(b(c))
  CycloNum innerProduct(const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) const {
    CycloAccumulator acc(group.exponent());
    for (size_t c = 0; c < classReps.size(); ++c) {
      CycloNum term = a[c] * b[c].conj();
      acc.add(term, Rational(classSizes[c]));
    }
    return acc.value().scaled(Rational(1, group.order()));
  }

  bool verifyRowOrthogonality() const {
    for (size_t i = 0; i < chars.size(); ++i)
      for (size_t j = i; j < chars.size(); ++j) {
        CycloNum ip = innerProduct(chars[i], chars[j]);
        if (ip != CycloNum(i == j ? 1 : 0)) return false;
      }
    return true;
  }

  bool verifyColumnOrthogonality() const {
    for (size_t c = 0; c < classReps.size(); ++c)
      for (size_t d = c; d < classReps.size(); ++d) {
        CycloAccumulator acc(group.exponent());
        for (auto& row : chars) acc.add(row[c] * row[d].conj(), Rational(1));
        CycloNum want(c == d ? Rational(group.order(), classSizes[c]) : Rational(0));
        if (acc.value() != want) return false;
      }
    return true;
  }

  bool verifyDegreeSum() const {
    long long s = 0;
    for (size_t i = 0; i < chars.size(); ++i) s += degree(static_cast<int>(i)) * degree(static_cast<int>(i));
    return s == group.order();
  }
};

// Eigenvalue multiset of rho(g) for the irreducible with character row chi,
// at the class of g: multiplicity of zeta_m^t is (1/m) sum_u chi(g^u) zeta_m^{-ut}.
inline RUMultiset eigenvalueMultiset(const CharacterTable& t, int charIdx, int classIdx) {
  long long m = t.classOrders[classIdx];
  const auto& chi = t.chars[charIdx];
  RUMultiset out;
  for (long long k = 0; k < m; ++k) {
    CycloAccumulator acc(m);
    for (long long u = 0; u < m; ++u) {
      int cu = t.group.classPower(classIdx, u);
      acc.add(chi[cu] * CycloNum::fromRoot(RootOfUnity(m, -k * u)), Rational(1));
    }
    CycloNum v = acc.value().scaled(Rational(1, m));
    if (!v.isRationalInteger())
      throw std::runtime_error("eigenvalueMultiset: non-integral multiplicity");
    long long mult = toLongLong(asInteger(v.asRational()));
    if (mult < 0) throw std::runtime_error("eigenvalueMultiset: negative multiplicity");
    for (long long r = 0; r < mult; ++r) out.push_back(RootOfUnity(m, k));
  }
  std::sort(out.begin(), out.end());
  if (static_cast<long long>(out.size()) != t.degree(charIdx))
    throw std::runtime_error("eigenvalueMultiset: multiplicities do not sum to the degree");
  return out;
}

namespace detail {

// ---- modular arithmetic helpers --------------------------------------------

inline long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

inline bool isPrime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long long dixonPrime(long long order, long long exponent) {
  long long bound = 1;
  while (bound * bound < order) ++bound;  // ceil(sqrt)
  long long lo = 2 * bound * exponent;
  // p == 1 mod exponent, p > lo
  long long p = (lo / exponent + 1) * exponent + 1;
  while (!isPrime(p)) p += exponent;
  return p;
}

inline long long tonelliShanks(long long n, long long p) {
  n %= p;
  if (n < 0) n += p;
  if (n == 0) return 0;
  if (powMod(n, (p - 1) / 2, p) != 1) throw std::runtime_error("tonelliShanks: not a residue");
  if (p % 4 == 3) return powMod(n, (p + 1) / 4, p);
  long long q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  long long z = 2;
  while (powMod(z, (p - 1) / 2, p) != p - 1) ++z;
  long long m = s, c = powMod(z, q, p), t = powMod(n, q, p), r = powMod(n, (q + 1) / 2, p);
  while (t != 1) {
    long long i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    long long b = powMod(c, 1LL << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

// element of multiplicative order exactly e mod p (requires e | p-1)
inline long long rootOfOrder(long long e, long long p) {
  auto primes = factorize(e);
  for (long long x = 2; x < p; ++x) {
    long long w = powMod(x, (p - 1) / e, p);
    bool ok = w != 1 || e == 1;
    for (auto& [q, k] : primes)
      if (powMod(w, e / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  throw std::runtime_error("rootOfOrder: none found");
}

// ---- polynomial helpers mod p (dense, lowest degree first) ------------------

using PolyP = std::vector<long long>;

inline void polyNorm(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PolyP polyMulMod(const PolyP& a, const PolyP& b, const PolyP& f, long long p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  // reduce mod f (monic not required: use leading inverse)
  long long d = static_cast<long long>(f.size()) - 1;
  long long linv = invMod(f.back(), p);
  for (long long i = static_cast<long long>(r.size()) - 1; i >= d; --i) {
    if (r[i] == 0) continue;
    long long c = mulmod(r[i], linv, p);
    for (long long j = 0; j <= d; ++j)
      r[i - d + j] = ((r[i - d + j] - mulmod(c, f[j], p)) % p + p) % p;
  }
  r.resize(std::min<size_t>(r.size(), d));
  polyNorm(r);
  return r;
}

inline PolyP polyPowMod(PolyP base, long long e, const PolyP& f, long long p) {
  PolyP r{1};
  while (e > 0) {
    if (e & 1) r = polyMulMod(r, base, f, p);
    base = polyMulMod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline PolyP polyGcd(PolyP a, PolyP b, long long p) {
  polyNorm(a);
  polyNorm(b);
  while (!b.empty()) {
    // a mod b
    long long linv = invMod(b.back(), p);
    for (long long i = static_cast<long long>(a.size()) - 1;
         i >= static_cast<long long>(b.size()) - 1; --i) {
      if (a.empty() || i >= static_cast<long long>(a.size()) || a[i] == 0) continue;
      long long c = mulmod(a[i], linv, p);
      long long off = i - (static_cast<long long>(b.size()) - 1);
      for (size_t j = 0; j < b.size(); ++j)
        a[off + j] = ((a[off + j] - mulmod(c, b[j], p)) % p + p) % p;
    }
    polyNorm(a);
    std::swap(a, b);
  }
  polyNorm(a);
  if (!a.empty() && a.back() != 1) {
    long long linv = invMod(a.back(), p);
    for (auto& c : a) c = mulmod(c, linv, p);
  }
  return a;
}

inline PolyP polyDeriv(const PolyP& f, long long p) {
  PolyP d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mulmod(f[i], i % p, p));
  polyNorm(d);
  return d;
}

// all roots of f (known to split into distinct linear factors over F_p)
inline void polyRoots(const PolyP& f, long long p, std::mt19937_64& rng,
                      std::vector<long long>& out) {
  long long deg = static_cast<long long>(f.size()) - 1;
  if (deg <= 0) return;
  if (deg == 1) {
    // f = c0 + c1 X
    out.push_back(mulmod((p - f[0] % p) % p, invMod(f[1], p), p));
    return;
  }
  for (;;) {
    long long a = static_cast<long long>(rng() % p);
    PolyP g = polyPowMod(PolyP{a, 1}, (p - 1) / 2, f, p);
    if (g.empty())
      g = PolyP{p - 1};
    else
      g[0] = (g[0] + p - 1) % p;  // (X+a)^((p-1)/2) - 1
    polyNorm(g);
    PolyP h = polyGcd(g, f, p);
    long long hd = static_cast<long long>(h.size()) - 1;
    if (hd > 0 && hd < deg) {
      polyRoots(h, p, rng, out);
      // f / h
      PolyP q;
      PolyP rem = f;
      long long linv = invMod(h.back(), p);
      q.assign(deg - hd + 1, 0);
      for (long long i = deg; i >= hd; --i) {
        long long c = mulmod(rem[i], linv, p);
        q[i - hd] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < h.size(); ++j)
          rem[i - hd + j] = ((rem[i - hd + j] - mulmod(c, h[j], p)) % p + p) % p;
      }
      polyRoots(q, p, rng, out);
      return;
    }
  }
}

// ---- matrices mod p ---------------------------------------------------------

using MatP = std::vector<std::vector<long long>>;

// characteristic polynomial via Hessenberg reduction
inline PolyP charPolyMod(MatP a, long long p) {
  long long n = static_cast<long long>(a.size());
  // reduce to upper Hessenberg
  for (long long c = 0; c < n - 2; ++c) {
    long long piv = -1;
    for (long long r = c + 1; r < n; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[c + 1]);
    for (long long r = 0; r < n; ++r) std::swap(a[r][piv], a[r][c + 1]);
    long long inv = invMod(a[c + 1][c], p);
    for (long long r = c + 2; r < n; ++r) {
      if (a[r][c] == 0) continue;
      long long f = mulmod(a[r][c], inv, p);
      for (long long k = 0; k < n; ++k) a[r][k] = ((a[r][k] - mulmod(f, a[c + 1][k], p)) % p + p) % p;
      for (long long k = 0; k < n; ++k) a[k][c + 1] = (a[k][c + 1] + mulmod(f, a[k][r], p)) % p;
    }
  }
  // char polys of leading principal Hessenberg blocks, p_k(x)
  std::vector<PolyP> ps(n + 1);
  ps[0] = {1};
  for (long long k = 1; k <= n; ++k) {
    // p_k = (x - a[k-1][k-1]) p_{k-1} - sum_{i=1..k-1} a[k-1-i][k-1] (prod b) p_{k-1-i}
    PolyP cur(k + 1, 0);
    for (size_t j = 0; j < ps[k - 1].size(); ++j) {
      cur[j + 1] = (cur[j + 1] + ps[k - 1][j]) % p;
      cur[j] = ((cur[j] - mulmod(a[k - 1][k - 1], ps[k - 1][j], p)) % p + p) % p;
    }
    long long b = 1;
    for (long long i = 1; i < k; ++i) {
      b = mulmod(b, a[k - i][k - i - 1], p);
      if (b == 0) break;
      long long coef = mulmod(a[k - 1 - i][k - 1], b, p);
      if (coef == 0) continue;
      for (size_t j = 0; j < ps[k - 1 - i].size(); ++j)
        cur[j] = ((cur[j] - mulmod(coef, ps[k - 1 - i][j], p)) % p + p) % p;
    }
    polyNorm(cur);
    ps[k] = cur;
  }
  return ps[n];
}

// nullspace basis of a (rows x cols) matrix mod p, as column vectors
inline std::vector<std::vector<long long>> nullspaceMod(MatP a, long long p) {
  long long rows = static_cast<long long>(a.size());
  long long cols = rows == 0 ? 0 : static_cast<long long>(a[0].size());
  std::vector<long long> pivotOfCol(cols, -1);
  long long r = 0;
  for (long long c = 0; c < cols && r < rows; ++c) {
    long long pr = -1;
    for (long long i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[pr], a[r]);
    long long inv = invMod(a[r][c], p);
    for (long long k = 0; k < cols; ++k) a[r][k] = mulmod(a[r][k], inv, p);
    for (long long i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long long f = a[i][c];
      for (long long k = 0; k < cols; ++k)
        a[i][k] = ((a[i][k] - mulmod(f, a[r][k], p)) % p + p) % p;
    }
    pivotOfCol[c] = r;
    ++r;
  }
  std::vector<std::vector<long long>> basis;
  for (long long c = 0; c < cols; ++c) {
    if (pivotOfCol[c] >= 0) continue;
    std::vector<long long> v(cols, 0);
    v[c] = 1;
    for (long long c2 = 0; c2 < cols; ++c2)
      if (pivotOfCol[c2] >= 0) v[c2] = (p - a[pivotOfCol[c2]][c]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline CharacterTable characterTable(const Group& g);

namespace detail {

inline void sortCharRows(std::vector<std::vector<CycloNum>>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const std::vector<CycloNum>& a, const std::vector<CycloNum>& b) {
              Rational da = a[0].asRational(), db = b[0].asRational();
              if (da != db) return da < db;
              for (size_t c = 0; c < a.size(); ++c)
                if (a[c] != b[c]) return a[c].valueLess(b[c]);
              return false;
            });
}

inline std::vector<std::vector<CycloNum>> abelianCharacters(const Group& g,
                                                            const std::vector<int>& classReps) {
  std::vector<int> gens = g.generatingSetOf(g.wholeGroup());
  if (gens.empty()) return {{CycloNum(1)}};
  size_t k = gens.size();
  std::vector<long long> ords(k);
  long long aSize = 1, L = 1;
  for (size_t i = 0; i < k; ++i) {
    ords[i] = g.elementOrder(gens[i]);
    aSize *= ords[i];
    L = std::lcm(L, ords[i]);
    if (aSize > 200000) throw std::runtime_error("abelianCharacters: generator lattice too large");
  }
  // enumerate A = prod Z/ords, record one preimage tuple per group element and
  // the kernel of A ->> G
  std::vector<std::vector<int>> powTab(k);
  for (size_t i = 0; i < k; ++i) {
    powTab[i].resize(ords[i]);
    powTab[i][0] = 0;
    for (long long j = 1; j < ords[i]; ++j) powTab[i][j] = g.mul(powTab[i][j - 1], gens[i]);
  }
  std::vector<std::vector<long long>> preimage(g.order());
  std::vector<bool> have(g.order(), false);
  std::vector<std::vector<long long>> kernel;
  std::vector<long long> tuple(k, 0);
  for (long long idx = 0;; ++idx) {
    int e = 0;
    for (size_t i = 0; i < k; ++i) e = g.mul(e, powTab[i][tuple[i]]);
    if (e == 0) kernel.push_back(tuple);
    if (!have[e]) {
      have[e] = true;
      preimage[e] = tuple;
    }
    size_t pos = 0;
    while (pos < k && ++tuple[pos] == ords[pos]) tuple[pos++] = 0;
    if (pos == k) break;
  }
  // characters of A trivial on the kernel
  std::vector<std::vector<CycloNum>> rows;
  std::vector<long long> ch(k, 0);
  for (long long idx = 0;; ++idx) {
    bool ok = true;
    for (auto& kv : kernel) {
      long long s = 0;
      for (size_t i = 0; i < k; ++i) s = (s + ch[i] * kv[i] % L * (L / ords[i])) % L;
      if (s != 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<CycloNum> row;
      row.reserve(classReps.size());
      for (int rep : classReps) {
        const auto& t = preimage[rep];
        long long s = 0;
        for (size_t i = 0; i < k; ++i) s = (s + ch[i] * t[i] % L * (L / ords[i])) % L;
        row.push_back(CycloNum::fromRoot(RootOfUnity(L, s)));
      }
      rows.push_back(std::move(row));
    }
    size_t pos = 0;
    while (pos < k && ++ch[pos] == ords[pos]) ch[pos++] = 0;
    if (pos == k) break;
  }
  if (static_cast<long long>(rows.size()) != g.order())
    throw std::runtime_error("abelianCharacters: wrong character count");
  return rows;
}

inline std::vector<std::vector<CycloNum>> dixonCharacters(const Group& g,
                                                          const std::vector<int>& classReps,
                                                          const std::vector<long long>& classSizes) {
  long long n = g.order();
  long long e = g.exponent();
  long long k = static_cast<long long>(classReps.size());
  long long p = dixonPrime(n, e);
  std::mt19937_64 rng(0x5eed1234abcdULL ^ static_cast<unsigned long long>(n * 131 + k));

  // structure constants: A_i[j][t] = #{x in C_i : x^-1 z_t in C_j}
  std::vector<MatP> A(k, MatP(k, std::vector<long long>(k, 0)));
  const auto& classes = g.conjugacyClasses();
  for (long long t = 0; t < k; ++t) {
    int zt = classReps[t];
    for (long long i = 0; i < k; ++i)
      for (int x : classes[i]) {
        int y = g.mul(g.inv(x), zt);
        A[i][g.classOf(y)][t] += 1;
      }
  }

  // split the class space into common eigenspaces of all A_i
  std::vector<std::vector<std::vector<long long>>> spaces;  // each: list of basis col vectors
  {
    std::vector<std::vector<long long>> full;
    for (long long i = 0; i < k; ++i) {
      std::vector<long long> v(k, 0);
      v[i] = 1;
      full.push_back(v);
    }
    spaces.push_back(full);
  }
  for (long long i = 1; i < k; ++i) {
    bool anyBig = false;
    for (auto& s : spaces)
      if (s.size() > 1) anyBig = true;
    if (!anyBig) break;
    std::vector<std::vector<std::vector<long long>>> next;
    for (auto& basis : spaces) {
      long long d = static_cast<long long>(basis.size());
      if (d == 1) {
        next.push_back(basis);
        continue;
      }
      // restriction R: A_i * basis = basis * R, solved by elimination
      MatP m(k, std::vector<long long>(d + d, 0));
      for (long long r = 0; r < k; ++r)
        for (long long c = 0; c < d; ++c) m[r][c] = basis[c][r];
      for (long long c = 0; c < d; ++c) {
        for (long long r = 0; r < k; ++r) {
          long long s = 0;
          for (long long t = 0; t < k; ++t) s = (s + mulmod(A[i][r][t], basis[c][t], p)) % p;
          m[r][d + c] = s;
        }
      }
      // row reduce the left block
      long long row = 0;
      std::vector<long long> pivRow(d, -1);
      for (long long c = 0; c < d && row < k; ++c) {
        long long pr = -1;
        for (long long r = row; r < k; ++r)
          if (m[r][c] != 0) {
            pr = r;
            break;
          }
        if (pr < 0) continue;
        std::swap(m[pr], m[row]);
        long long inv = invMod(m[row][c], p);
        for (long long t = 0; t < d + d; ++t) m[row][t] = mulmod(m[row][t], inv, p);
        for (long long r = 0; r < k; ++r) {
          if (r == row || m[r][c] == 0) continue;
          long long f = m[r][c];
          for (long long t = 0; t < d + d; ++t)
            m[r][t] = ((m[r][t] - mulmod(f, m[row][t], p)) % p + p) % p;
        }
        pivRow[c] = row;
        ++row;
      }
      MatP R(d, std::vector<long long>(d, 0));
      for (long long c = 0; c < d; ++c) {
        if (pivRow[c] < 0) throw std::runtime_error("dixon: basis not independent");
        for (long long c2 = 0; c2 < d; ++c2) R[c][c2] = m[pivRow[c]][d + c2];
      }
      PolyP cp = charPolyMod(R, p);
      PolyP sf = polyGcd(cp, polyDeriv(cp, p), p);
      // squarefree part cp / gcd
      PolyP ff = cp;
      if (sf.size() > 1) {
        // exact division
        PolyP q(ff.size() - sf.size() + 1, 0);
        PolyP rem = ff;
        long long linv = invMod(sf.back(), p);
        for (long long ii = static_cast<long long>(rem.size()) - 1;
             ii >= static_cast<long long>(sf.size()) - 1; --ii) {
          long long c = mulmod(rem[ii], linv, p);
          q[ii - (sf.size() - 1)] = c;
          if (c == 0) continue;
          for (size_t j = 0; j < sf.size(); ++j)
            rem[ii - (sf.size() - 1) + j] =
                ((rem[ii - (sf.size() - 1) + j] - mulmod(c, sf[j], p)) % p + p) % p;
        }
        ff = q;
        polyNorm(ff);
      }
      std::vector<long long> roots;
      polyRoots(ff, p, rng, roots);
      if (roots.empty()) throw std::runtime_error("dixon: no eigenvalues found");
      for (long long lam : roots) {
        MatP rl = R;
        for (long long t = 0; t < d; ++t) rl[t][t] = ((rl[t][t] - lam) % p + p) % p;
        auto null = nullspaceMod(rl, p);
        if (null.empty()) throw std::runtime_error("dixon: empty eigenspace");
        std::vector<std::vector<long long>> sub;
        for (auto& coeffs : null) {
          std::vector<long long> v(k, 0);
          for (long long c = 0; c < d; ++c)
            for (long long t = 0; t < k; ++t)
              v[t] = (v[t] + mulmod(coeffs[c], basis[c][t], p)) % p;
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<long long>(spaces.size()) != k)
    throw std::runtime_error("dixon: failed to separate characters");

  // class inverse map
  std::vector<long long> invClass(k);
  for (long long c = 0; c < k; ++c) invClass[c] = g.classInverse(static_cast<int>(c));

  long long w = rootOfOrder(e, p);

  std::vector<std::vector<CycloNum>> rows;
  for (auto& space : spaces) {
    std::vector<long long> v = space[0];
    if (v[0] == 0) throw std::runtime_error("dixon: eigenvector vanishes at identity");
    long long scale = invMod(v[0], p);
    for (auto& x : v) x = mulmod(x, scale, p);
    // degree^2 = |G| / sum_j v_j v_{j'} / n_j
    long long s = 0;
    for (long long j = 0; j < k; ++j)
      s = (s + mulmod(mulmod(v[j], v[invClass[j]], p), invMod(classSizes[j] % p, p), p)) % p;
    long long d2 = mulmod(n % p, invMod(s, p), p);
    long long d = tonelliShanks(d2, p);
    if (d > p - d) d = p - d;
    long long bound = 1;
    while (bound * bound < n) ++bound;
    if (d <= 0 || d > bound) throw std::runtime_error("dixon: degree lift out of range");
    // modular character values
    std::vector<long long> chi(k);
    for (long long j = 0; j < k; ++j)
      chi[j] = mulmod(mulmod(d % p, v[j], p), invMod(classSizes[j] % p, p), p);
    // lift each class value through the eigenvalue multiset
    std::vector<CycloNum> row(k);
    for (long long j = 0; j < k; ++j) {
      long long m = g.elementOrder(classReps[j]);
      long long zm = powMod(w, e / m, p);
      long long zmInv = invMod(zm, p);
      long long mInv = invMod(m % p, p);
      std::vector<std::pair<Rational, RootOfUnity>> terms;
      long long total = 0;
      for (long long t = 0; t < m; ++t) {
        long long acc = 0, ze = 1;
        long long zstep = powMod(zmInv, t, p);
        for (long long u = 0; u < m; ++u) {
          int cu = g.classPower(static_cast<int>(j), u);
          acc = (acc + mulmod(chi[cu], ze, p)) % p;
          ze = mulmod(ze, zstep, p);
        }
        long long mult = mulmod(acc, mInv, p);
        if (mult > d) throw std::runtime_error("dixon: multiplicity lift out of range");
        if (mult > 0) terms.push_back({Rational(mult), RootOfUnity(m, t)});
        total += mult;
      }
      if (total != d) throw std::runtime_error("dixon: multiplicities do not sum to degree");
      row[j] = CycloNum::fromTerms(terms);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

inline CharacterTable characterTable(const Group& g) {
  CharacterTable t;
  t.group = g;
  const auto& classes = t.group.conjugacyClasses();
  for (auto& c : classes) {
    t.classReps.push_back(c[0]);
    t.classSizes.push_back(static_cast<long long>(c.size()));
    t.classOrders.push_back(t.group.elementOrder(c[0]));
  }
  if (t.group.isAbelian())
    t.chars = detail::abelianCharacters(t.group, t.classReps);
  else
    t.chars = detail::dixonCharacters(t.group, t.classReps, t.classSizes);
  detail::sortCharRows(t.chars);
  return t;
}

}  // namespace hyperell
