#pragma once

// Exact cyclotomic arithmetic.
//
// CycloNum is the workhorse: an element of Q(zeta_n) stored in the power basis
// {zeta_n^i : 0 <= i < phi(n)} with the conductor minimized eagerly, so that
// equality, ordering and Galois orbits are purely structural. Conductors are
// normalized to never be == 2 (mod 4), using Q(zeta_{2m}) = Q(zeta_m) for odd m.

#include "rational.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperell {

inline std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline long long eulerPhi(long long n) {
  long long r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline std::vector<long long> divisorsOf(long long n) {
  std::vector<long long> d{1};
  for (auto& [p, e] : factorize(n)) {
    size_t base = d.size();
    long long pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (size_t j = 0; j < base; ++j) d.push_back(d[j] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// ---------------------------------------------------------------------------
// Integer polynomials, dense, lowest degree first. Just enough for the
// cyclotomic polynomials and their identities.

struct IntPoly {
  std::vector<Int> c;

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  long long degree() const { return static_cast<long long>(c.size()) - 1; }
  bool isZero() const { return c.empty(); }

  static IntPoly xPowMinusOne(long long d) {
    IntPoly f;
    f.c.assign(d + 1, Int(0));
    f.c[0] = -1;
    f.c[d] = 1;
    return f;
  }

  IntPoly mul(const IntPoly& o) const {
    if (isZero() || o.isZero()) return {};
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.normalize();
    return r;
  }

  // Exact division; throws if the remainder is nonzero or divisor is zero.
  IntPoly divExact(const IntPoly& d) const {
    if (d.isZero()) throw std::runtime_error("IntPoly: division by zero");
    IntPoly rem = *this;
    rem.normalize();
    IntPoly q;
    if (rem.degree() < d.degree()) {
      if (!rem.isZero()) throw std::runtime_error("IntPoly: division not exact");
      return q;
    }
    q.c.assign(rem.degree() - d.degree() + 1, Int(0));
    for (long long k = rem.degree() - d.degree(); k >= 0; --k) {
      Int lead = rem.c[k + d.degree()];
      if (lead == 0) continue;
      if (lead % d.c.back() != 0) throw std::runtime_error("IntPoly: division not exact");
      Int f = lead / d.c.back();
      q.c[k] = f;
      for (long long j = 0; j <= d.degree(); ++j) rem.c[k + j] -= f * d.c[j];
    }
    rem.normalize();
    if (!rem.isZero()) throw std::runtime_error("IntPoly: division not exact");
    q.normalize();
    return q;
  }

  bool operator==(const IntPoly& o) const { return c == o.c; }
};

inline const IntPoly& cyclotomicPoly(long long d) {
  static std::map<long long, IntPoly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  IntPoly f = IntPoly::xPowMinusOne(d);
  for (long long e : divisorsOf(d))
    if (e < d) f = f.divExact(cyclotomicPoly(e));
  return cache.emplace(d, std::move(f)).first->second;
}

// ---------------------------------------------------------------------------
// A single root of unity in reduced form: zeta_order^exp with gcd(exp,order)=1.
// The identity is (1,0).

struct RootOfUnity {
  long long order = 1;
  long long exp = 0;

  RootOfUnity() = default;
  RootOfUnity(long long d, long long k) {
    if (d <= 0) throw std::runtime_error("RootOfUnity: order must be positive");
    k %= d;
    if (k < 0) k += d;
    if (k == 0) {
      order = 1;
      exp = 0;
    } else {
      long long g = std::gcd(k, d);
      order = d / g;
      exp = k / g;
    }
  }

  RootOfUnity pow(long long m) const {
    long long r = m % order;
    return RootOfUnity(order, exp * r);
  }
  RootOfUnity conj() const { return pow(-1); }
  RootOfUnity operator*(const RootOfUnity& o) const {
    long long L = lcmLL(order, o.order);
    return RootOfUnity(L, exp * (L / order) + o.exp * (L / o.order));
  }
  bool isIdentity() const { return order == 1; }

  bool operator==(const RootOfUnity& o) const { return order == o.order && exp == o.exp; }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {
    if (order != o.order) return order < o.order;
    return exp < o.exp;
  }

  std::string toString() const {
    if (order == 1) return "1";
    std::ostringstream os;
    os << "E(" << order << ")^" << exp;
    return os.str();
  }
};

// ---------------------------------------------------------------------------
// Conductor-level data shared by all CycloNums at the same conductor:
// Phi_n and the reduction rows X^i mod Phi_n for 0 <= i < n.

namespace detail {

struct ConductorData {
  long long n = 1;
  long long phi = 1;
  std::vector<std::vector<Int>> powRow;  // powRow[i][j]: coeff of zeta^j in zeta^i
};

inline const ConductorData& conductorData(long long n) {
  if (n != 1 && n % 4 == 2) throw std::runtime_error("conductorData: conductor == 2 mod 4");
  if (n <= 0 || n > 100000) throw std::runtime_error("conductorData: conductor out of range");
  static std::map<long long, ConductorData> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  ConductorData d;
  d.n = n;
  d.phi = eulerPhi(n);
  const IntPoly& cp = cyclotomicPoly(n);
  // X^phi == -(lower part of Phi_n) since Phi_n is monic.
  std::vector<Int> top(d.phi);
  for (long long j = 0; j < d.phi; ++j) top[j] = -cp.c[j];
  d.powRow.resize(n);
  std::vector<Int> cur(d.phi, Int(0));
  cur[0] = 1;
  d.powRow[0] = cur;
  for (long long i = 1; i < n; ++i) {
    // multiply by X, reduce the overflow coefficient through 'top'
    Int carry = cur.empty() ? Int(0) : cur[d.phi - 1];
    for (long long j = d.phi - 1; j >= 1; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (carry != 0)
      for (long long j = 0; j < d.phi; ++j) cur[j] += carry * top[j];
    d.powRow[i] = cur;
  }
  return cache.emplace(n, std::move(d)).first->second;
}

// Strip the 2 mod 4 case off a would-be conductor.
inline long long normConductor(long long n) { return (n % 4 == 2) ? n / 2 : n; }

}  // namespace detail

// ---------------------------------------------------------------------------

class CycloNum {
 public:
  CycloNum() : cond_(1), c_{Rational(0)} {}
  CycloNum(long long v) : cond_(1), c_{Rational(v)} {}
  CycloNum(const Rational& v) : cond_(1), c_{v} {}
  CycloNum(const Int& v) : cond_(1), c_{Rational(v)} {}

  static CycloNum fromRoot(const RootOfUnity& r) { return fromTerms({{Rational(1), r}}); }

  // Sum of coeff * root terms; the general constructor.
  static CycloNum fromTerms(const std::vector<std::pair<Rational, RootOfUnity>>& terms) {
    long long n = 1;
    for (auto& [q, r] : terms) n = lcmLL(n, r.order);
    n = detail::normConductor(n);
    std::vector<Rational> full(n, Rational(0));
    for (auto& [q, r] : terms) addRootTo(full, n, r, q);
    return fromExpVector(n, full);
  }

  long long conductor() const { return cond_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool isZero() const { return cond_ == 1 && c_[0] == 0; }
  bool isRational() const { return cond_ == 1; }
  Rational asRational() const {
    if (!isRational()) throw std::runtime_error("CycloNum is not rational: " + toString());
    return c_[0];
  }
  bool isRationalInteger() const { return cond_ == 1 && isInteger(c_[0]); }

  bool operator==(const CycloNum& o) const { return cond_ == o.cond_ && c_ == o.c_; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  // Deterministic total order: conductor, then coefficient tuple.
  bool valueLess(const CycloNum& o) const {
    if (cond_ != o.cond_) return cond_ < o.cond_;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
  }

  CycloNum operator+(const CycloNum& o) const {
    if (cond_ == o.cond_) {
      std::vector<Rational> s = c_;
      for (size_t i = 0; i < s.size(); ++i) s[i] += o.c_[i];
      CycloNum r;
      r.cond_ = cond_;
      r.c_ = std::move(s);
      r.minimizeConductor();
      return r;
    }
    long long n = lcmLL(cond_, o.cond_);
    std::vector<Rational> full(n, Rational(0));
    liftInto(full, n);
    o.liftInto(full, n);
    return fromExpVector(n, full);
  }

  CycloNum operator-() const {
    CycloNum r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
  }
  CycloNum operator-(const CycloNum& o) const { return *this + (-o); }

  CycloNum operator*(const CycloNum& o) const {
    if (isZero() || o.isZero()) return CycloNum();
    if (cond_ == 1) return o.scaled(c_[0]);
    if (o.cond_ == 1) return scaled(o.c_[0]);
    long long n = lcmLL(cond_, o.cond_);
    long long ea = n / cond_, eb = n / o.cond_;
    std::vector<Rational> full(n, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (o.c_[j] == 0) continue;
        full[(i * ea + j * eb) % n] += c_[i] * o.c_[j];
      }
    }
    return fromExpVector(n, full);
  }

  CycloNum scaled(const Rational& q) const {
    if (q == 0) return CycloNum();
    CycloNum r = *this;
    for (auto& x : r.c_) x *= q;
    return r;
  }

  CycloNum pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum acc(1), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Galois action zeta -> zeta^j; j must be coprime to the conductor.
  CycloNum galoisApply(long long j) const {
    if (cond_ == 1) return *this;
    j %= cond_;
    if (j < 0) j += cond_;
    if (std::gcd(j, cond_) != 1) throw std::runtime_error("galoisApply: j not coprime to conductor");
    std::vector<Rational> full(cond_, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) full[(i * j) % cond_] += c_[i];
    // stays at the same (already minimal) conductor
    CycloNum r;
    r.cond_ = cond_;
    r.c_ = reduceToPowerBasis(cond_, full);
    return r;
  }

  CycloNum conj() const { return cond_ == 1 ? *this : galoisApply(cond_ - 1); }

  CycloNum inverse() const {
    if (isZero()) throw std::domain_error("CycloNum: division by zero");
    if (cond_ == 1) {
      CycloNum r;
      r.c_[0] = Rational(denominator(c_[0]), numerator(c_[0]));
      return r;
    }
    CycloNum prod(1);
    for (long long j = 2; j <= cond_; ++j)
      if (std::gcd(j, cond_) == 1) prod = prod * galoisApply(j);
    Rational norm = (*this * prod).asRational();
    return prod.scaled(Rational(1) / norm);
  }

  CycloNum operator/(const CycloNum& o) const {
    if (o.cond_ == 1) {
      if (o.c_[0] == 0) throw std::domain_error("CycloNum: division by zero");
      return scaled(Rational(1) / o.c_[0]);
    }
    return *this * o.inverse();
  }

  // "a0 + a1*E(n)^1 + ..." with plain rationals for the constant term.
  std::string toString() const {
    if (cond_ == 1) return ratToString(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational a = c_[i];
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      if (i == 0)
        os << ratToString(a);
      else
        os << ratToString(a) << "*E(" << cond_ << ")^" << i;
    }
    if (first) return "0";
    return os.str();
  }

  static CycloNum parse(const std::string& text);

  // Lift this value into the exponent space of conductor n (cond_ | n) and add.
  void liftInto(std::vector<Rational>& full, long long n) const {
    long long e = n / cond_;
    if (cond_ * e != n) throw std::runtime_error("liftInto: conductor does not divide target");
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) full[(i * e) % n] += c_[i];
  }

  static CycloNum fromExpVector(long long n, const std::vector<Rational>& full) {
    CycloNum r;
    r.cond_ = n;
    r.c_ = reduceToPowerBasis(n, full);
    r.minimizeConductor();
    return r;
  }

 private:
  long long cond_;
  std::vector<Rational> c_;

  static void addRootTo(std::vector<Rational>& full, long long n, const RootOfUnity& r,
                        const Rational& q) {
    if (r.order % 2 == 0 && (r.order / 2) % 2 == 1 && n % r.order != 0) {
      // order == 2 mod 4 and not dividing the (normalized) conductor:
      // zeta_{2m}^k = (-1)^k * zeta_m^{k*(m+1)/2 mod m}, m odd.
      long long m = r.order / 2;
      long long e2 = (m == 1) ? 0 : (r.exp % m) * (((m + 1) / 2) % m) % m;
      full[(e2 * (n / m)) % n] += (r.exp % 2 == 0) ? q : -q;
      return;
    }
    if (n % r.order != 0) throw std::runtime_error("addRootTo: root does not fit conductor");
    full[(r.exp * (n / r.order)) % n] += q;
  }

  static std::vector<Rational> reduceToPowerBasis(long long n, const std::vector<Rational>& full) {
    const auto& cd = detail::conductorData(n);
    std::vector<Rational> out(cd.phi, Rational(0));
    for (long long i = 0; i < n; ++i) {
      if (full[i] == 0) continue;
      if (i < cd.phi) {
        out[i] += full[i];
      } else {
        const auto& row = cd.powRow[i];
        for (long long j = 0; j < cd.phi; ++j)
          if (row[j] != 0) out[j] += full[i] * Rational(row[j]);
      }
    }
    return out;
  }

  bool fixedBySubgroup(long long m) const {
    // all Galois elements j == 1 (mod m) in (Z/cond)* must fix the value
    for (long long j = 1 + m; j < cond_; j += m) {
      if (std::gcd(j, cond_) != 1) continue;
      if (galoisApply(j) != *this) return false;
    }
    return true;
  }

  void rebaseTo(long long m) {
    // Solve for the power-basis coefficients over zeta_m; membership is
    // already certified, so picking pivot rows of the lift matrix suffices.
    const auto& cdN = detail::conductorData(cond_);
    long long phiM = eulerPhi(m);
    long long e = cond_ / m;
    // columns: zeta_m^t lifted to conductor cond_, expressed in its power basis
    std::vector<std::vector<Rational>> mat(cdN.phi, std::vector<Rational>(phiM + 1, Rational(0)));
    for (long long t = 0; t < phiM; ++t) {
      long long ex = (t * e) % cond_;
      if (ex < cdN.phi) {
        mat[ex][t] += 1;
      } else {
        const auto& row = cdN.powRow[ex];
        for (long long j = 0; j < cdN.phi; ++j)
          if (row[j] != 0) mat[j][t] += Rational(row[j]);
      }
    }
    for (long long j = 0; j < cdN.phi; ++j) mat[j][phiM] = c_[j];
    // Gaussian elimination, consistent by construction
    std::vector<Rational> sol(phiM, Rational(0));
    long long row = 0;
    std::vector<long long> pivCol;
    for (long long col = 0; col < phiM && row < cdN.phi; ++col) {
      long long pr = -1;
      for (long long r2 = row; r2 < cdN.phi; ++r2)
        if (mat[r2][col] != 0) {
          pr = r2;
          break;
        }
      if (pr < 0) continue;
      std::swap(mat[row], mat[pr]);
      Rational inv = Rational(1) / mat[row][col];
      for (long long k = col; k <= phiM; ++k) mat[row][k] *= inv;
      for (long long r2 = 0; r2 < cdN.phi; ++r2) {
        if (r2 == row || mat[r2][col] == 0) continue;
        Rational f = mat[r2][col];
        for (long long k = col; k <= phiM; ++k) mat[r2][k] -= f * mat[row][k];
      }
      pivCol.push_back(col);
      ++row;
    }
    for (size_t r2 = 0; r2 < pivCol.size(); ++r2) sol[pivCol[r2]] = mat[r2][phiM];
    cond_ = m;
    c_ = std::move(sol);
  }

  void minimizeConductor() {
    for (;;) {
      if (cond_ == 1) return;
      bool ratOnly = true;
      for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) {
          ratOnly = false;
          break;
        }
      if (ratOnly) {
        Rational v = c_[0];
        cond_ = 1;
        c_.assign(1, v);
        return;
      }
      bool changed = false;
      for (auto& [p, e] : factorize(cond_)) {
        long long m = cond_ / p;
        if (fixedBySubgroup(m)) {
          rebaseTo(detail::normConductor(m));
          changed = true;
          break;
        }
      }
      if (!changed) return;
    }
  }
};

inline CycloNum E(long long n) { return CycloNum::fromRoot(RootOfUnity(n, 1)); }

inline CycloNum CycloNum::parse(const std::string& text) {
  // grammar: term (("+"|"-") term)*, term: rat | rat "*" root | root,
  // root: "E(" int ")" ["^" int], rat: ["-"] digits ["/" digits]
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::runtime_error("CycloNum::parse: empty input");
  std::vector<std::pair<Rational, RootOfUnity>> terms;
  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '-') {
    neg = true;
    ++pos;
  } else if (s[pos] == '+') {
    ++pos;
  }
  auto parseInt = [&](const char* what) -> long long {
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::runtime_error(std::string("CycloNum::parse: expected ") + what);
    return std::stoll(s.substr(start, pos - start));
  };
  while (true) {
    Rational coeff(1);
    bool haveCoeff = false;
    if (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      Int num(s.substr(start, pos - start));
      Int den(1);
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t ds = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (ds == pos) throw std::runtime_error("CycloNum::parse: bad denominator");
        den = Int(s.substr(ds, pos - ds));
        if (den == 0) throw std::runtime_error("CycloNum::parse: zero denominator");
      }
      coeff = Rational(num, den);
      haveCoeff = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    RootOfUnity root;  // identity
    if (pos < s.size() && s[pos] == 'E') {
      ++pos;
      if (pos >= s.size() || s[pos] != '(') throw std::runtime_error("CycloNum::parse: expected (");
      ++pos;
      long long n = parseInt("conductor");
      if (pos >= s.size() || s[pos] != ')') throw std::runtime_error("CycloNum::parse: expected )");
      ++pos;
      long long k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        k = parseInt("exponent");
      }
      root = RootOfUnity(n, k);
    } else if (!haveCoeff) {
      throw std::runtime_error("CycloNum::parse: expected term at '" + s.substr(pos) + "'");
    }
    terms.push_back({neg ? -coeff : coeff, root});
    if (pos == s.size()) break;
    if (s[pos] == '+')
      neg = false;
    else if (s[pos] == '-')
      neg = true;
    else
      throw std::runtime_error("CycloNum::parse: unexpected '" + s.substr(pos) + "'");
    ++pos;
  }
  return fromTerms(terms);
}

struct CycloLess {
  bool operator()(const CycloNum& a, const CycloNum& b) const { return a.valueLess(b); }
};

// Accumulator over a fixed exponent space; canonicalizes once at the end.
// Use for inner products and other long sums.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(long long ambientConductor)
      : n_(detail::normConductor(ambientConductor)), acc_(n_, Rational(0)) {}

  void add(const CycloNum& x, const Rational& scale) {
    if (scale == 0 || x.isZero()) return;
    long long e = n_ / x.conductor();
    if (e * x.conductor() != n_)
      throw std::runtime_error("CycloAccumulator: value outside ambient field");
    const auto& c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) acc_[(i * e) % n_] += scale * c[i];
  }

  CycloNum value() const { return CycloNum::fromExpVector(n_, acc_); }

 private:
  long long n_;
  std::vector<Rational> acc_;
};

// ---------------------------------------------------------------------------
// Multisets of roots of unity and the integrality profile.

using RUMultiset = std::vector<RootOfUnity>;

struct NuProfile {
  bool integral = false;
  long long failOrder = 0;                // an order witnessing non-integrality
  std::map<long long, long long> nu;     // order k -> nu_k, only when integral
};

// S integral <=> m(z) + m(conj z) is constant over the primitive k-th roots,
// for each k. The profile is that of S + conj(S), so sum phi(k)*nu_k == 2|S|.
inline NuProfile nuProfile(const RUMultiset& s) {
  std::map<std::pair<long long, long long>, long long> cnt;
  for (auto& r : s) {
    cnt[{r.order, r.exp}] += 1;
    RootOfUnity rc = r.conj();
    cnt[{rc.order, rc.exp}] += 1;
  }
  std::vector<long long> orders;
  for (auto& [key, c] : cnt)
    if (orders.empty() || orders.back() != key.first) orders.push_back(key.first);
  NuProfile out;
  for (long long k : orders) {
    long long common = -1;
    if (k == 1) {
      common = cnt[{1, 0}];
    } else {
      for (long long j = 1; j < k; ++j) {
        if (std::gcd(j, k) != 1) continue;
        auto it = cnt.find({k, j});
        long long c = (it == cnt.end()) ? 0 : it->second;
        if (common < 0) {
          common = c;
        } else if (common != c) {
          out.failOrder = k;
          out.nu.clear();
          return out;
        }
      }
    }
    if (common > 0) out.nu[k] = common;
  }
  out.integral = true;
  return out;
}

namespace detail {

// Sum over the full Galois orbit with multiplicity (all j in (Z/n)*), plus the
// stabilizer size. Q(x) can be a proper subfield of Q(zeta_cond), in which
// case each distinct conjugate appears stab times in the raw sum.
inline std::pair<Rational, long long> galoisSumAndStab(const CycloNum& x) {
  long long n = x.conductor();
  if (n == 1) return {x.asRational(), 1};
  CycloAccumulator acc(n);
  long long stab = 0;
  for (long long j = 1; j < n; ++j) {
    if (std::gcd(j, n) != 1) continue;
    CycloNum img = x.galoisApply(j);
    if (img == x) ++stab;
    acc.add(img, Rational(1));
  }
  return {acc.value().asRational(), stab};
}

}  // namespace detail

// Trace over Q(x) (the field generated by the value itself).
inline Rational fieldTrace(const CycloNum& x) {
  auto [raw, stab] = detail::galoisSumAndStab(x);
  return raw / stab;
}

// Trace over Q(zeta_m) of x; requires Q(x) inside Q(zeta_m).
inline Rational fieldTrace(const CycloNum& x, long long m) {
  long long mm = detail::normConductor(m);
  if (mm % x.conductor() != 0)
    throw std::runtime_error("fieldTrace: value lies outside the ambient field");
  auto [raw, stab] = detail::galoisSumAndStab(x);
  return raw * Rational(eulerPhi(m) / eulerPhi(x.conductor()));
}

}  // namespace hyperell
