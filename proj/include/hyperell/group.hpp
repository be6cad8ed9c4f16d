#pragma once

// Finite permutation group engine. Groups are fully enumerated (order capped
// at 5000), with elements indexed by BFS discovery order; index 0 is always
// the identity. Everything downstream works with element indices.

#include "perm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperell {

constexpr long long kMaxGroupOrder = 5000;
constexpr long long kMaxSubgroupClasses = 300;
constexpr long long kMulTableCap = 1300;  // cache the full table below this

// Display name plus the optional small-groups (order, index) label the
// literature attaches to the isomorphism type.
struct GroupTag {
  std::string name;
  std::optional<std::pair<long long, long long>> paperId;

  bool operator==(const GroupTag&) const = default;
};

inline std::string tagText(const GroupTag& t) {
  if (!t.paperId) return t.name;
  return "[" + std::to_string(t.paperId->first) + "," + std::to_string(t.paperId->second) +
         "] " + t.name;
}

class Group {
 public:
  Group() = default;

  static Group fromGenerators(int degree, std::vector<Perm> gens, std::string name = "") {
    Group g;
    g.degree_ = degree;
    g.name_ = std::move(name);
    for (auto& p : gens) {
      if (static_cast<int>(p.size()) != degree)
        throw std::runtime_error("Group: generator degree mismatch");
      if (!permIsIdentity(p)) g.gens_.push_back(p);
    }
    g.enumerate();
    return g;
  }

  // --- basic accessors -----------------------------------------------------

  long long order() const { return static_cast<long long>(elems_.size()); }
  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  void setName(std::string n) { name_ = std::move(n); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& generatorIndices() const { return genIdx_; }
  const Perm& perm(int i) const { return elems_[i]; }

  int indexOf(const Perm& p) const {
    auto it = idx_.find(p);
    if (it == idx_.end()) throw std::runtime_error("Group: permutation not in group");
    return it->second;
  }
  bool contains(const Perm& p) const { return idx_.count(p) != 0; }

  int mul(int a, int b) const {
    if (!table_.empty()) return table_[a][b];
    return indexOf(permMul(elems_[a], elems_[b]));
  }
  int inv(int a) const { return inv_[a]; }
  int conjugate(int g, int h) const { return mul(mul(inv(h), g), h); }  // h^-1 g h
  int commutator(int g, int h) const { return mul(mul(inv(g), inv(h)), mul(g, h)); }

  int power(int a, long long k) const {
    long long n = elementOrder(a);
    k %= n;
    if (k < 0) k += n;
    int r = 0, base = a;
    while (k > 0) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  long long elementOrder(int a) const { return ordCache_[a]; }

  long long exponent() const {
    long long e = 1;
    for (long long o : ordCache_) e = std::lcm(e, o);
    return e;
  }

  std::map<long long, long long> orderHistogram() const {
    std::map<long long, long long> h;
    for (long long o : ordCache_) ++h[o];
    return h;
  }

  bool isAbelian() const {
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        if (permMul(gens_[i], gens_[j]) != permMul(gens_[j], gens_[i])) return false;
    return true;
  }

  // --- conjugacy classes ---------------------------------------------------

  // Classes sorted by (element order, class size, smallest member index);
  // the identity class is first. classOf maps element -> class.
  const std::vector<std::vector<int>>& conjugacyClasses() const {
    buildClasses();
    return classes_;
  }
  int classOf(int e) const {
    buildClasses();
    return classOf_[e];
  }
  long long numClasses() const { return static_cast<long long>(conjugacyClasses().size()); }
  int classRep(int c) const { return conjugacyClasses()[c][0]; }
  long long classSize(int c) const { return static_cast<long long>(conjugacyClasses()[c].size()); }

  // class of x^k for x in class c (well defined)
  int classPower(int c, long long k) const { return classOf(power(classRep(c), k)); }
  int classInverse(int c) const { return classOf(inv(classRep(c))); }

  // --- distinguished subgroups (as sorted element index lists) --------------

  std::vector<int> wholeGroup() const {
    std::vector<int> all(order());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  std::vector<int> center() const {
    std::vector<int> z;
    for (int x = 0; x < order(); ++x) {
      bool ok = true;
      for (int gi : genIdx_)
        if (mul(x, gi) != mul(gi, x)) {
          ok = false;
          break;
        }
      if (ok) z.push_back(x);
    }
    return z;
  }

  std::vector<int> derivedSubgroup() const {
    std::vector<int> seeds;
    for (int gi : genIdx_)
      for (int gj : genIdx_) seeds.push_back(commutator(gi, gj));
    return normalClosureOf(seeds);
  }

  // Subgroup generated by the seeds. BFS over right multiplication suffices:
  // in a finite group the generated submonoid is already a subgroup.
  std::vector<int> closureOf(const std::vector<int>& seeds) const {
    std::vector<bool> in(order(), false);
    std::vector<int> members{0};
    in[0] = true;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int s : seeds) {
        int y = mul(x, s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
          q.push(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<int> normalClosureOf(std::vector<int> seeds) const {
    std::vector<int> sub = closureOf(seeds);
    for (;;) {
      std::vector<int> extra;
      std::vector<bool> in(order(), false);
      for (int x : sub) in[x] = true;
      for (int x : sub)
        for (int gi : genIdx_) {
          int y = conjugate(x, gi);
          if (!in[y]) {
            in[y] = true;
            extra.push_back(y);
          }
        }
      if (extra.empty()) return sub;
      for (int x : sub) extra.push_back(x);
      sub = closureOf(extra);
    }
  }

  bool isSubgroupNormal(const std::vector<int>& sub) const {
    std::vector<bool> in(order(), false);
    for (int x : sub) in[x] = true;
    for (int x : sub)
      for (int gi : genIdx_)
        if (!in[conjugate(x, gi)]) return false;
    return true;
  }

  std::vector<int> centralizerOf(int e) const {
    std::vector<int> c;
    for (int x = 0; x < order(); ++x)
      if (mul(x, e) == mul(e, x)) c.push_back(x);
    return c;
  }

  std::vector<int> normalizerOf(const std::vector<int>& sub) const {
    std::vector<bool> in(order(), false);
    for (int x : sub) in[x] = true;
    std::vector<int> n;
    for (int g = 0; g < order(); ++g) {
      bool ok = true;
      for (int x : sub)
        if (!in[conjugate(x, g)]) {
          ok = false;
          break;
        }
      if (ok) n.push_back(g);
    }
    return n;
  }

  std::vector<int> conjugateSubgroup(const std::vector<int>& sub, int g) const {
    std::vector<int> r;
    r.reserve(sub.size());
    for (int x : sub) r.push_back(conjugate(x, g));
    std::sort(r.begin(), r.end());
    return r;
  }

  // --- Sylow ----------------------------------------------------------------

  std::vector<int> sylowSubgroup(long long p) const {
    long long n = order(), pa = 1;
    while (n % p == 0) {
      n /= p;
      pa *= p;
    }
    if (pa == 1) return {0};
    // start from any element of order p, grow through normalizers
    std::vector<int> h{0};
    for (int x = 1; x < order(); ++x)
      if (elementOrder(x) == p) {
        h = closureOf({x});
        break;
      }
    while (static_cast<long long>(h.size()) < pa) {
      std::vector<int> nrm = normalizerOf(h);
      std::vector<bool> in(order(), false);
      for (int x : h) in[x] = true;
      bool grew = false;
      for (int y : nrm) {
        if (in[y]) continue;
        long long oy = elementOrder(y);
        bool pPower = true;
        while (oy > 1) {
          if (oy % p != 0) {
            pPower = false;
            break;
          }
          oy /= p;
        }
        if (!pPower) continue;
        std::vector<int> h2 = h;
        h2.push_back(y);
        h2 = closureOf(h2);
        long long sz = static_cast<long long>(h2.size());
        bool szIsP = true;
        while (sz > 1) {
          if (sz % p != 0) {
            szIsP = false;
            break;
          }
          sz /= p;
        }
        if (szIsP && h2.size() > h.size()) {
          h = std::move(h2);
          grew = true;
          break;
        }
      }
      if (!grew) throw std::runtime_error("sylowSubgroup: failed to grow (internal)");
    }
    return h;
  }

  // --- abelian structure ----------------------------------------------------

  // invariant factors d1 | d2 | ... (ascending), e.g. C2 x C12 -> {2, 12}
  std::vector<long long> abelianInvariants() const {
    if (!isAbelian()) throw std::runtime_error("abelianInvariants: group is not abelian");
    return abelianInvariantsOfHistogram(orderHistogram());
  }

  static std::vector<long long> abelianInvariantsOfHistogram(
      const std::map<long long, long long>& hist) {
    long long n = 0;
    for (auto& [o, c] : hist) n += c;
    std::map<long long, std::vector<long long>> partitions;  // p -> lambda desc
    for (auto& [p, a] : factorizeOrder(n)) {
      // s_k = log_p #{x : x^{p^k} = 1}; lambda'_k = s_k - s_{k-1}
      std::vector<long long> s{0};
      for (long long k = 1, pk = p;; ++k, pk *= p) {
        long long cnt = 0;
        for (auto& [o, c] : hist)
          if (pk % o == 0) cnt += c;
        long long lg = 0, t = cnt;
        while (t > 1) {
          if (t % p != 0) throw std::runtime_error("abelianInvariants: bad histogram");
          t /= p;
          ++lg;
        }
        s.push_back(lg);
        if (lg == s[k - 1]) break;  // saturated
      }
      std::vector<long long> conj;
      for (size_t k = 1; k < s.size(); ++k)
        if (s[k] > s[k - 1]) conj.push_back(s[k] - s[k - 1]);
      // conj is lambda' (weakly decreasing); transpose back to lambda
      std::vector<long long> lambda;
      for (long long i = 0; i < (conj.empty() ? 0 : conj[0]); ++i) {
        long long cnt = 0;
        for (long long c : conj)
          if (c > i) ++cnt;
        lambda.push_back(cnt);
      }
      std::sort(lambda.begin(), lambda.end(), std::greater<>());
      partitions[p] = lambda;
    }
    size_t maxLen = 0;
    for (auto& [p, lam] : partitions) maxLen = std::max(maxLen, lam.size());
    std::vector<long long> inv(maxLen, 1);
    for (auto& [p, lam] : partitions)
      for (size_t i = 0; i < lam.size(); ++i) {
        long long pk = 1;
        for (long long j = 0; j < lam[i]; ++j) pk *= p;
        inv[i] *= pk;  // largest with largest
      }
    std::sort(inv.begin(), inv.end());  // ascending divisibility chain
    return inv;
  }

  static std::vector<std::pair<long long, int>> factorizeOrder(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        int e = 0;
        while (n % p == 0) {
          n /= p;
          ++e;
        }
        out.push_back({p, e});
      }
    if (n > 1) out.push_back({n, 1});
    return out;
  }

  // Does an abelian group with invariants a embed into one with invariants b?
  // Per prime: conjugate partitions must dominate pointwise.
  static bool abelianEmbeds(const std::vector<long long>& a, const std::vector<long long>& b) {
    auto conjParts = [](const std::vector<long long>& inv, long long p) {
      std::vector<long long> lam;
      for (long long d : inv) {
        long long e = 0;
        while (d % p == 0) {
          d /= p;
          ++e;
        }
        if (e > 0) lam.push_back(e);
      }
      std::sort(lam.begin(), lam.end(), std::greater<>());
      std::vector<long long> conj;
      for (long long i = 0; !lam.empty() && i < lam[0]; ++i) {
        long long cnt = 0;
        for (long long l : lam)
          if (l > i) ++cnt;
        conj.push_back(cnt);
      }
      return conj;
    };
    long long prodA = 1;
    for (long long d : a) prodA *= d;
    for (auto& [p, e] : factorizeOrder(prodA)) {
      auto ca = conjParts(a, p), cb = conjParts(b, p);
      if (ca.size() > cb.size()) return false;
      for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] > cb[i]) return false;
    }
    return true;
  }

  // --- subgroup lattice ------------------------------------------------------

  struct SubgroupClass {
    std::vector<int> rep;     // sorted element indices
    long long orbitSize = 1;  // number of conjugates
  };

  // Conjugacy classes of all subgroups, built bottom-up from cyclic joins.
  std::vector<SubgroupClass> subgroupConjClasses(long long maxClasses = kMaxSubgroupClasses) const {
    std::set<std::vector<int>> seen;
    std::vector<SubgroupClass> reps;
    std::vector<std::vector<int>> cyclics;
    {
      std::set<std::vector<int>> cset;
      for (int x = 0; x < order(); ++x) cset.insert(closureOf({x}));
      cyclics.assign(cset.begin(), cset.end());
    }
    auto registerSub = [&](const std::vector<int>& sub) -> bool {
      if (seen.count(sub)) return false;
      SubgroupClass sc;
      sc.rep = sub;
      std::set<std::vector<int>> orbit;
      orbit.insert(sub);
      for (int g = 0; g < order(); ++g) orbit.insert(conjugateSubgroup(sub, g));
      sc.orbitSize = static_cast<long long>(orbit.size());
      for (auto& o : orbit) seen.insert(o);
      reps.push_back(std::move(sc));
      if (static_cast<long long>(reps.size()) > maxClasses)
        throw std::runtime_error("subgroupConjClasses: class limit exceeded");
      return true;
    };
    registerSub({0});
    for (auto& c : cyclics) registerSub(c);
    // join closure over class representatives
    for (size_t i = 1; i < reps.size(); ++i) {
      if (static_cast<long long>(reps[i].rep.size()) == order()) continue;
      for (auto& c : cyclics) {
        std::vector<int> seeds = reps[i].rep;
        seeds.insert(seeds.end(), c.begin(), c.end());
        std::vector<int> join = closureOf(seeds);
        registerSub(join);
      }
    }
    std::sort(reps.begin(), reps.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
      if (a.rep.size() != b.rep.size()) return a.rep.size() < b.rep.size();
      return a.rep < b.rep;
    });
    return reps;
  }

  std::vector<std::vector<int>> normalSubgroups() const {
    std::vector<std::vector<int>> out;
    for (auto& sc : subgroupConjClasses())
      if (sc.orbitSize == 1) out.push_back(sc.rep);
    return out;
  }

  // --- derived groups --------------------------------------------------------

  // The abstract group of a subgroup, as a standalone Group on the same points.
  Group subgroupAsGroup(const std::vector<int>& sub, std::string name = "") const {
    std::vector<int> gensIdx = generatingSetOf(sub);
    std::vector<Perm> gp;
    for (int gi : gensIdx) gp.push_back(elems_[gi]);
    if (gp.empty()) gp.push_back(permIdentity(degree_));
    return fromGenerators(degree_, gp, std::move(name));
  }

  // A small generating set of a subgroup (greedy, descending element order).
  std::vector<int> generatingSetOf(const std::vector<int>& sub) const {
    std::vector<int> sorted = sub;
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
      long long oa = elementOrder(a), ob = elementOrder(b);
      if (oa != ob) return oa > ob;
      return a < b;
    });
    std::vector<int> gensIdx;
    std::vector<int> cur{0};
    std::vector<bool> in(order(), false);
    in[0] = true;
    for (int x : sorted) {
      if (in[x]) continue;
      gensIdx.push_back(x);
      std::vector<int> seeds = gensIdx;
      cur = closureOf(seeds);
      for (int y : cur) in[y] = true;
      if (cur.size() == sub.size()) break;
    }
    return gensIdx;
  }

  // Quotient by a normal subgroup, via right multiplication on right cosets
  // (a homomorphism under the left-to-right composition convention).
  Group factorGroupBy(const std::vector<int>& normal, std::string name = "") const {
    if (!isSubgroupNormal(normal)) throw std::runtime_error("factorGroupBy: subgroup not normal");
    std::vector<int> cosetOf(order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < order(); ++x) {
      if (cosetOf[x] >= 0) continue;
      int c = static_cast<int>(reps.size());
      reps.push_back(x);
      for (int n : normal) cosetOf[mul(n, x)] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<Perm> qgens;
    for (int gi : genIdx_) {
      Perm p(m);
      for (int c = 0; c < m; ++c) p[c] = cosetOf[mul(reps[c], gi)];
      qgens.push_back(p);
    }
    if (qgens.empty()) qgens.push_back(permIdentity(m));
    return fromGenerators(m, qgens, std::move(name));
  }

  // --- isomorphism -----------------------------------------------------------

  bool isIsomorphicTo(const Group& other) const {
    if (order() != other.order()) return false;
    if (orderHistogram() != other.orderHistogram()) return false;
    bool ab = isAbelian();
    if (ab != other.isAbelian()) return false;
    if (ab) return abelianInvariants() == other.abelianInvariants();

    auto zA = center();
    auto zB = other.center();
    if (zA.size() != zB.size()) return false;
    auto dA = derivedSubgroup();
    auto dB = other.derivedSubgroup();
    if (dA.size() != dB.size()) return false;
    {
      std::map<long long, long long> hA, hB;
      for (int x : dA) ++hA[elementOrder(x)];
      for (int x : dB) ++hB[other.elementOrder(x)];
      if (hA != hB) return false;
    }
    {
      // multiset of (element order, class size)
      std::map<std::pair<long long, long long>, long long> cA, cB;
      for (size_t c = 0; c < conjugacyClasses().size(); ++c)
        ++cA[{elementOrder(classRep(static_cast<int>(c))), classSize(static_cast<int>(c))}];
      for (size_t c = 0; c < other.conjugacyClasses().size(); ++c)
        ++cB[{other.elementOrder(other.classRep(static_cast<int>(c))),
              other.classSize(static_cast<int>(c))}];
      if (cA != cB) return false;
    }

    std::vector<int> gensA = generatingSetOf(wholeGroup());
    return extendIso(other, gensA, {});
  }

 private:
  int degree_ = 0;
  std::string name_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::map<Perm, int> idx_;
  std::vector<int> inv_;
  std::vector<int> genIdx_;
  std::vector<long long> ordCache_;
  std::vector<std::vector<int>> table_;
  mutable std::vector<std::vector<int>> classes_;
  mutable std::vector<int> classOf_;

  void enumerate() {
    elems_.clear();
    idx_.clear();
    Perm id = permIdentity(degree_);
    elems_.push_back(id);
    idx_[id] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (auto& g : gens_) {
        Perm y = permMul(elems_[x], g);
        if (idx_.count(y)) continue;
        int yi = static_cast<int>(elems_.size());
        if (yi >= kMaxGroupOrder)
          throw std::runtime_error("Group: order exceeds cap of 5000");
        idx_[y] = yi;
        elems_.push_back(std::move(y));
        q.push(yi);
      }
    }
    inv_.resize(elems_.size());
    ordCache_.resize(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) {
      inv_[i] = idx_.at(permInv(elems_[i]));
      ordCache_[i] = permOrder(elems_[i]);
    }
    genIdx_.clear();
    for (auto& g : gens_) genIdx_.push_back(idx_.at(g));
    if (order() <= kMulTableCap) {
      table_.assign(elems_.size(), std::vector<int>(elems_.size()));
      for (size_t a = 0; a < elems_.size(); ++a)
        for (size_t b = 0; b < elems_.size(); ++b)
          table_[a][b] = idx_.at(permMul(elems_[a], elems_[b]));
    }
  }

  void buildClasses() const {
    if (!classes_.empty() || order() == 0) return;
    std::vector<int> cls(order(), -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < order(); ++x) {
      if (cls[x] >= 0) continue;
      int c = static_cast<int>(classes.size());
      std::vector<int> orbit{x};
      cls[x] = c;
      std::queue<int> q;
      q.push(x);
      while (!q.empty()) {
        int y = q.front();
        q.pop();
        for (int gi : genIdx_) {
          int z = conjugate(y, gi);
          if (cls[z] < 0) {
            cls[z] = c;
            orbit.push_back(z);
            q.push(z);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes.push_back(std::move(orbit));
    }
    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      long long oa = ordCache_[classes[a][0]], ob = ordCache_[classes[b][0]];
      if (oa != ob) return oa < ob;
      if (classes[a].size() != classes[b].size()) return classes[a].size() < classes[b].size();
      return classes[a][0] < classes[b][0];
    });
    classes_.resize(classes.size());
    classOf_.assign(order(), -1);
    for (size_t i = 0; i < perm.size(); ++i) {
      classes_[i] = std::move(classes[perm[i]]);
      for (int x : classes_[i]) classOf_[x] = static_cast<int>(i);
    }
  }

  // Backtracking isomorphism extension. mapped: pairs (a in this, b in other)
  // already fixed for gensA[0..k-1]; builds the multiplication-consistent
  // closure at each step.
  bool extendIso(const Group& other, const std::vector<int>& gensA, std::vector<int> imgs) const {
    size_t k = imgs.size();
    if (k == gensA.size()) return true;
    int g = gensA[k];
    long long og = elementOrder(g);
    long long csA = classSize(classOf(g));
    std::vector<int> candidates;
    if (k == 0) {
      // first image only up to conjugacy in the target
      for (int c = 0; c < static_cast<int>(other.conjugacyClasses().size()); ++c) {
        int r = other.classRep(c);
        if (other.elementOrder(r) == og && other.classSize(c) == csA) candidates.push_back(r);
      }
    } else {
      for (int y = 0; y < static_cast<int>(other.order()); ++y)
        if (other.elementOrder(y) == og && other.classSize(other.classOf(y)) == csA)
          candidates.push_back(y);
    }
    for (int y : candidates) {
      imgs.push_back(y);
      if (checkPartialHom(other, gensA, imgs)) {
        if (extendIso(other, gensA, imgs)) return true;
      }
      imgs.pop_back();
    }
    return false;
  }

  // Verify that gensA[i] -> imgs[i] extends to an injective homomorphism on
  // the subgroup generated so far, by simultaneous BFS closure.
  bool checkPartialHom(const Group& other, const std::vector<int>& gensA,
                       const std::vector<int>& imgs) const {
    std::vector<int> mapTo(order(), -1);
    std::vector<int> mapFrom(other.order(), -1);
    mapTo[0] = 0;
    mapFrom[0] = 0;
    std::vector<int> frontier{0};
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      int b = mapTo[a];
      for (size_t i = 0; i < imgs.size(); ++i) {
        int a2 = mul(a, gensA[i]);
        int b2 = other.mul(b, imgs[i]);
        if (mapTo[a2] < 0 && mapFrom[b2] < 0) {
          mapTo[a2] = b2;
          mapFrom[b2] = a2;
          q.push(a2);
        } else if (mapTo[a2] != b2) {
          return false;
        }
      }
    }
    return true;
  }

 public:
  // --- structured constructors ----------------------------------------------

  static Group cyclic(long long n, std::string name = "") {
    if (n == 1) return fromGenerators(1, {}, name.empty() ? "C1" : std::move(name));
    Perm c(n);
    for (long long i = 0; i < n; ++i) c[i] = static_cast<int>((i + 1) % n);
    return fromGenerators(static_cast<int>(n), {c},
                          name.empty() ? "C" + std::to_string(n) : std::move(name));
  }

  static Group directProduct(const Group& a, const Group& b, std::string name = "") {
    int d = a.degree() + b.degree();
    std::vector<Perm> gens;
    for (auto& g : a.gens_) {
      Perm p = permIdentity(d);
      for (int i = 0; i < a.degree(); ++i) p[i] = g[i];
      gens.push_back(p);
    }
    for (auto& g : b.gens_) {
      Perm p = permIdentity(d);
      for (int i = 0; i < b.degree(); ++i) p[a.degree() + i] = a.degree() + g[i];
      gens.push_back(p);
    }
    if (name.empty()) name = a.name() + "x" + b.name();
    return fromGenerators(d, gens, std::move(name));
  }

  // Split extension N : H. actions[i][j] is the element index in N of the
  // image of N's j-th generator under conjugation by H's i-th generator.
  // Realized by the regular action on N x H pairs.
  static Group semidirectProduct(const Group& n, const Group& h,
                                 const std::vector<std::vector<int>>& actions,
                                 std::string name = "") {
    size_t ng = n.genIdx_.size(), hg = h.genIdx_.size();
    if (actions.size() != hg) throw std::runtime_error("semidirectProduct: actions size mismatch");
    for (auto& a : actions)
      if (a.size() != ng) throw std::runtime_error("semidirectProduct: action entry mismatch");

    // build each generator's automorphism as a full permutation of N
    auto autFromImages = [&](const std::vector<int>& imgs) {
      // extend N.gens -> imgs multiplicatively over the whole of N
      std::vector<int> f(n.order(), -1);
      f[0] = 0;
      std::queue<int> q;
      q.push(0);
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (size_t j = 0; j < ng; ++j) {
          int x2 = n.mul(x, n.genIdx_[j]);
          int y2 = n.mul(f[x], imgs[j]);
          if (f[x2] < 0) {
            f[x2] = y2;
            q.push(x2);
          } else if (f[x2] != y2) {
            throw std::runtime_error("semidirectProduct: action is not an automorphism");
          }
        }
      }
      std::vector<bool> hit(n.order(), false);
      for (int x = 0; x < n.order(); ++x) {
        if (f[x] < 0 || hit[f[x]])
          throw std::runtime_error("semidirectProduct: action is not bijective");
        hit[f[x]] = true;
      }
      return f;
    };
    std::vector<std::vector<int>> genAut;
    for (auto& a : actions) genAut.push_back(autFromImages(a));

    // automorphism for every element of H by BFS over words, with validation
    std::vector<std::vector<int>> autOf(h.order());
    std::vector<bool> have(h.order(), false);
    std::vector<int> idAut(n.order());
    std::iota(idAut.begin(), idAut.end(), 0);
    autOf[0] = idAut;
    have[0] = true;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (size_t i = 0; i < hg; ++i) {
        int x2 = h.mul(x, h.genIdx_[i]);
        // phi is a homomorphism: phi_{x*g} = phi_x after phi_g
        std::vector<int> comp(n.order());
        for (int t = 0; t < n.order(); ++t) comp[t] = autOf[x][genAut[i][t]];
        if (!have[x2]) {
          autOf[x2] = std::move(comp);
          have[x2] = true;
          q.push(x2);
        } else if (autOf[x2] != comp) {
          throw std::runtime_error("semidirectProduct: action does not define a homomorphism");
        }
      }
    }

    // regular action on pairs (x in N, y in H), point = x * |H| + y.
    // Right multiplication by (a, b): (x, y)(a, b) = (x * phi_{y}(a), y b).
    long long total = n.order() * h.order();
    if (total > kMaxGroupOrder) throw std::runtime_error("semidirectProduct: order exceeds cap");
    auto point = [&](int x, int y) { return x * h.order() + y; };
    std::vector<Perm> gens;
    auto pushGen = [&](int a, int b) {
      Perm p(total);
      for (int x = 0; x < n.order(); ++x)
        for (int y = 0; y < h.order(); ++y)
          p[point(x, y)] = point(n.mul(x, autOf[y][a]), h.mul(y, b));
      if (!permIsIdentity(p)) gens.push_back(p);
    };
    for (int gi : n.genIdx_) pushGen(gi, 0);
    for (int gi : h.genIdx_) pushGen(0, gi);
    if (gens.empty()) gens.push_back(permIdentity(std::max<long long>(total, 1)));
    Group g = fromGenerators(static_cast<int>(total), gens, std::move(name));
    if (g.order() != total) throw std::runtime_error("semidirectProduct: construction defect");
    return g;
  }

  // G(m, n, r) = < a, b | a^m = b^n = 1, b^-1 a b = a^r >, split metacyclic.
  // Requires gcd(r, m) = 1 and r^n == 1 (mod m).
  static Group metacyclic(long long m, long long n, long long r, std::string name = "") {
    r %= m;
    if (r < 0) r += m;
    if (std::gcd(r, m) != 1) throw std::runtime_error("metacyclic: gcd(r, m) != 1");
    long long rn = 1;
    for (long long i = 0; i < n; ++i) rn = (rn * r) % m;
    if (rn != 1 % m) throw std::runtime_error("metacyclic: r^n != 1 mod m");
    if (name.empty())
      name = "G(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
    if (m == 1) return cyclic(n, std::move(name));
    if (n == 1) return cyclic(m, std::move(name));
    Group cm = cyclic(m);
    Group cn = cyclic(n);
    // b^-1 a b = a^r means phi_b(a) = b a b^-1 = a^s with s = r^-1 mod m
    long long s = 1;
    {
      long long t = r % m;
      for (long long i = 0; i < n - 1; ++i) s = s * t % m;  // r^(n-1) = r^-1
    }
    std::vector<std::vector<int>> actions{{cm.power(cm.genIdx_[0], s)}};
    return semidirectProduct(cm, cn, actions, std::move(name));
  }

  static Group dihedral(long long n, std::string name = "") {
    return metacyclic(n, 2, n - 1, name.empty() ? "D" + std::to_string(n) : std::move(name));
  }

  // Index-2 extension <N, t> with t^2 = z in N and t y t^-1 = alpha(y).
  // alphaImages[j] is the index in N of the image of N's j-th generator.
  // Valid data needs alpha in Aut(N) with alpha(z) = z and alpha^2 equal to
  // conjugation by z. Unlike semidirectProduct this also reaches non-split
  // extensions (Q16, central products like D4 y C4 via alpha = id, z central).
  static Group cyclicExtension(const Group& n, const std::vector<int>& alphaImages, int z,
                               std::string name = "") {
    if (alphaImages.size() != n.genIdx_.size())
      throw std::runtime_error("cyclicExtension: one image per generator required");
    if (z < 0 || z >= n.order()) throw std::runtime_error("cyclicExtension: z out of range");

    // extend generator images multiplicatively, validating along the way
    std::vector<int> alpha(n.order(), -1);
    alpha[0] = 0;
    std::queue<int> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      for (size_t j = 0; j < n.genIdx_.size(); ++j) {
        int x2 = n.mul(x, n.genIdx_[j]);
        int y2 = n.mul(alpha[x], alphaImages[j]);
        if (alpha[x2] < 0) {
          alpha[x2] = y2;
          bfs.push(x2);
        } else if (alpha[x2] != y2) {
          throw std::runtime_error("cyclicExtension: images do not define an automorphism");
        }
      }
    }
    std::vector<bool> hit(n.order(), false);
    for (int x = 0; x < n.order(); ++x) {
      if (alpha[x] < 0 || hit[alpha[x]])
        throw std::runtime_error("cyclicExtension: images do not define an automorphism");
      hit[alpha[x]] = true;
    }
    if (alpha[z] != z) throw std::runtime_error("cyclicExtension: alpha must fix z");
    for (int y = 0; y < n.order(); ++y)
      if (alpha[alpha[y]] != n.mul(n.mul(z, y), n.inv(z)))
        throw std::runtime_error("cyclicExtension: alpha^2 must be conjugation by z");

    long long total = 2LL * n.order();
    if (total > kMaxGroupOrder) throw std::runtime_error("cyclicExtension: order exceeds cap");
    // points are pairs (x, e) = x t^e; right multiplication:
    // (x t^e)(y t^d) = x alpha^e(y) t^{e+d}, and t^2 collapses to z on the right
    auto pt = [&](int x, int e) { return x * 2 + e; };
    auto mulPoint = [&](int x, int e, int y, int d) {
      int xx = n.mul(x, e == 0 ? y : alpha[y]);
      int ee = e + d;
      if (ee == 2) {
        xx = n.mul(xx, z);
        ee = 0;
      }
      return pt(xx, ee);
    };
    std::vector<Perm> gens;
    for (int gi : n.genIdx_) {
      Perm p(total);
      for (int x = 0; x < n.order(); ++x)
        for (int e = 0; e < 2; ++e) p[pt(x, e)] = mulPoint(x, e, gi, 0);
      gens.push_back(p);
    }
    Perm pt2(total);
    for (int x = 0; x < n.order(); ++x)
      for (int e = 0; e < 2; ++e) pt2[pt(x, e)] = mulPoint(x, e, 0, 1);
    gens.push_back(pt2);
    Group g = fromGenerators(static_cast<int>(total), gens, std::move(name));
    if (g.order() != total) throw std::runtime_error("cyclicExtension: construction defect");
    return g;
  }

  // Dicyclic of order 4n: < a, b | a^{2n} = 1, b^2 = a^n, b^-1 a b = a^-1 >.
  // Q8 is n = 2. Faithful action on 4n points by the right regular action.
  static Group dicyclic(long long n, std::string name = "") {
    long long N = 4 * n;
    if (N > kMaxGroupOrder) throw std::runtime_error("dicyclic: order exceeds cap");
    // element (i, j) = a^i b^j with 0 <= i < 2n, j in {0, 1}
    auto pt = [&](long long i, long long j) { return static_cast<int>(i * 2 + j); };
    auto mulAbs = [&](long long i1, long long j1, long long i2, long long j2) {
      // (a^i1 b^j1)(a^i2 b^j2); b a^k = a^-k b
      long long i = j1 == 0 ? (i1 + i2) : (i1 - i2);
      long long j = j1 + j2;
      i %= 2 * n;
      if (i < 0) i += 2 * n;
      if (j == 2) {
        i = (i + n) % (2 * n);
        j = 0;
      }
      return std::pair<long long, long long>(i, j);
    };
    Perm ga(N), gb(N);
    for (long long i = 0; i < 2 * n; ++i)
      for (long long j = 0; j < 2; ++j) {
        auto [ia, ja] = mulAbs(i, j, 1, 0);
        ga[pt(i, j)] = pt(ia, ja);
        auto [ib, jb] = mulAbs(i, j, 0, 1);
        gb[pt(i, j)] = pt(ib, jb);
      }
    return fromGenerators(static_cast<int>(N), {ga, gb},
                          name.empty() ? "Dic" + std::to_string(n) : std::move(name));
  }
};

}  // namespace hyperell
