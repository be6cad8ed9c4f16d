#pragma once

// The dimension-4 hyperellipticity filter battery. Structural necessary
// conditions (element orders, conjugate-inverse, center shape, Sylow types,
// forbidden subgroups, metacyclic content of the derived subgroup, the
// Abelian classification) plus the representation search: does the group
// admit a faithful degree-4 complex representation whose every element has
// the eigenvalue 1 and a rational-integer full trace package?
//
// Every filter is a necessary condition. An overall "pass" means "not
// excluded by this battery", never a positive hyperellipticity proof.

#include "chartab.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperell {

// ---- verdicts ---------------------------------------------------------------

enum class Verdict { pass, fail, skipped };

inline const char* verdictName(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skipped";
  }
}

struct FilterResult {
  Verdict verdict = Verdict::pass;
  std::string witness;  // offending class/subgroup/type, or the found rep
};

struct FilterOutcome {
  std::string filter;
  Verdict verdict;
  std::string witness;
};

struct FilterReport {
  std::string groupTag;
  std::vector<FilterOutcome> outcomes;
  bool overall = true;

  std::string toText() const {
    std::ostringstream os;
    os << "group " << groupTag << ": " << (overall ? "PASS" : "FAIL") << "\n";
    for (const auto& o : outcomes) {
      os << "  " << o.filter << ": " << verdictName(o.verdict);
      if (!o.witness.empty()) os << " (" << o.witness << ")";
      os << "\n";
    }
    return os.str();
  }
};

// ---- configuration ----------------------------------------------------------

struct TaggedGroup {
  std::string tag;
  Group group;
};

struct FilterConfig {
  long long dimension = 4;
  std::set<long long> allowedOrders = {1, 2,  3,  4,  5,  6,  7,  8, 9,
                                       10, 12, 14, 15, 18, 20, 24, 30};
  std::vector<TaggedGroup> sylow2List;
  std::vector<TaggedGroup> sylow3List;
  std::vector<TaggedGroup> forbiddenList;
  std::vector<TaggedGroup> abelianList;
  bool shortCircuit = true;
  long long subgroupClassBudget = 4000;
};

// ---- candidate representations ----------------------------------------------

struct RepCandidate {
  std::vector<int> parts;  // irreducible row indices, nondecreasing
  long long totalDegree = 0;
};

inline std::string repCandidateText(const CharacterTable& t, const RepCandidate& c) {
  std::ostringstream os;
  os << "rho =";
  for (size_t i = 0; i < c.parts.size(); ++i) {
    os << (i ? " (+) " : " ") << "chi_" << c.parts[i] << "[deg "
       << t.degree(c.parts[i]) << "]";
  }
  return os.str();
}

// All multisets of irreducible indices with total degree n, in nondecreasing
// index order. Materializes the whole list: meant for small tables; the
// filter below streams the same enumeration without building it.
inline std::vector<RepCandidate> candidateReps(const CharacterTable& t, long long n) {
  if (n < 1) throw std::runtime_error("candidateReps: n must be positive");
  long long k = static_cast<long long>(t.chars.size());
  std::vector<RepCandidate> out;
  std::vector<int> parts;
  std::function<void(long long, long long)> rec = [&](long long from, long long remaining) {
    if (remaining == 0) {
      out.push_back({parts, n});
      return;
    }
    for (long long i = from; i < k; ++i) {
      long long d = t.degree(static_cast<int>(i));
      if (d > remaining) break;  // rows are sorted by degree
      parts.push_back(static_cast<int>(i));
      rec(i, remaining - d);
      parts.pop_back();
    }
  };
  rec(0, n);
  return out;
}

// ---- representation search --------------------------------------------------

namespace detail {

inline bool containsOne(const RUMultiset& s) {
  for (const auto& r : s)
    if (r.order == 1) return true;
  return false;
}

}  // namespace detail

namespace detail {

// Streams every multiset of irreducibles with total degree n that is
// faithful, has the eigenvalue 1 in every class, and has an integral trace
// package in every class, in nondecreasing index order. The visitor returns
// whether to keep searching; the return value is the number of candidates
// visited in total.
inline long long scanValidReps(const CharacterTable& t, long long n,
                               const std::function<bool(const RepCandidate&)>& visit) {
  const long long k = static_cast<long long>(t.chars.size());
  const long long nc = t.numClasses();
  const size_t words = static_cast<size_t>((nc + 63) / 64);

  // eigenvalue multisets per (irreducible, class); linear rows shortcut the
  // Fourier sum since the value itself is the eigenvalue
  std::vector<std::vector<RUMultiset>> eig(k, std::vector<RUMultiset>(nc));
  for (long long i = 0; i < k; ++i) {
    long long deg = t.degree(static_cast<int>(i));
    for (long long c = 0; c < nc; ++c) {
      if (deg == 1) {
        long long m = t.classOrders[c];
        for (long long e = 0; e < m; ++e) {
          RootOfUnity r(m, e);
          if (t.chars[i][c] == CycloNum::fromRoot(r)) {
            eig[i][c] = {r};
            break;
          }
        }
        if (eig[i][c].empty())
          throw std::runtime_error("findValidRep: linear value is not a root of unity");
      } else {
        eig[i][c] = eigenvalueMultiset(t, static_cast<int>(i), static_cast<int>(c));
      }
    }
  }

  // class bitsets: kernel (value == degree) and has-eigenvalue-1
  std::vector<uint64_t> kerMask(k * words, 0), oneMask(k * words, 0);
  for (long long i = 0; i < k; ++i)
    for (long long c = 0; c < nc; ++c) {
      if (t.chars[i][c] == t.chars[i][0])
        kerMask[i * words + (c >> 6)] |= uint64_t(1) << (c & 63);
      if (detail::containsOne(eig[i][c]))
        oneMask[i * words + (c >> 6)] |= uint64_t(1) << (c & 63);
    }
  std::vector<uint64_t> allClasses(words, 0), identityOnly(words, 0);
  for (long long c = 0; c < nc; ++c) allClasses[c >> 6] |= uint64_t(1) << (c & 63);
  identityOnly[0] = 1;

  std::vector<std::vector<uint64_t>> andKer(n + 1, std::vector<uint64_t>(words)),
      orOne(n + 1, std::vector<uint64_t>(words));
  andKer[0] = allClasses;
  orOne[0].assign(words, 0);

  long long count = 0;
  std::vector<int> parts;
  bool stop = false;
  std::function<void(long long, long long)> rec = [&](long long from, long long remaining) {
    if (stop) return;
    size_t depth = parts.size();
    if (remaining == 0) {
      ++count;
      for (size_t w = 0; w < words; ++w)
        if (andKer[depth][w] != identityOnly[w] || orOne[depth][w] != allClasses[w]) return;
      // masks pass: check integrality of the eigenvalue package per class
      for (long long c = 1; c < nc; ++c) {
        RUMultiset ms;
        for (int i : parts) ms.insert(ms.end(), eig[i][c].begin(), eig[i][c].end());
        if (!nuProfile(ms).integral) return;
      }
      if (!visit(RepCandidate{parts, n})) stop = true;
      return;
    }
    for (long long i = from; i < k && !stop; ++i) {
      long long d = t.degree(static_cast<int>(i));
      if (d > remaining) break;
      for (size_t w = 0; w < words; ++w) {
        andKer[depth + 1][w] = andKer[depth][w] & kerMask[i * words + w];
        orOne[depth + 1][w] = orOne[depth][w] | oneMask[i * words + w];
      }
      parts.push_back(static_cast<int>(i));
      rec(i, remaining - d);
      parts.pop_back();
    }
  };
  rec(0, n);
  return count;
}

}  // namespace detail

// First valid candidate in the deterministic order, if any. The counter
// reports how many candidates were visited in total.
inline std::optional<RepCandidate> findValidRep(const CharacterTable& t, long long n,
                                                long long* visited = nullptr) {
  std::optional<RepCandidate> hit;
  long long count = detail::scanValidReps(t, n, [&](const RepCandidate& c) {
    hit = c;
    return false;
  });
  if (visited) *visited = count;
  return hit;
}

// Every valid candidate; small-table use (diamond reporting per accepted rep).
inline std::vector<RepCandidate> findAllValidReps(const CharacterTable& t, long long n) {
  std::vector<RepCandidate> out;
  detail::scanValidReps(t, n, [&](const RepCandidate& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

inline FilterResult filterRepExists(const Group& g, long long n = 4) {
  CharacterTable t = characterTable(g);
  long long visited = 0;
  auto rep = findValidRep(t, n, &visited);
  if (rep) return {Verdict::pass, repCandidateText(t, *rep)};
  std::ostringstream os;
  os << "all " << visited << " degree-" << n << " candidates exhausted";
  return {Verdict::fail, os.str()};
}

// ---- structural filters -------------------------------------------------------

inline FilterResult filterPrimeStructure(const Group& g) {
  for (auto& [p, e] : Group::factorizeOrder(g.order())) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
      return {Verdict::fail, "order divisible by " + std::to_string(p)};
    if ((p == 5 || p == 7) && e > 1)
      return {Verdict::fail,
              "order divisible by " + std::to_string(p) + "^" + std::to_string(e)};
  }
  return {Verdict::pass, ""};
}

inline FilterResult filterElementOrders(const Group& g,
                                        const std::set<long long>& allowedOrders) {
  for (auto& [o, cnt] : g.orderHistogram())
    if (!allowedOrders.count(o))
      return {Verdict::fail, "element of order " + std::to_string(o)};
  return {Verdict::pass, ""};
}

inline FilterResult filterConjInverse(const Group& g) {
  long long nc = g.numClasses();
  for (long long c = 0; c < nc; ++c) {
    long long d = g.elementOrder(g.classRep(static_cast<int>(c)));
    if (eulerPhi(d) >= 4 && g.classInverse(static_cast<int>(c)) == static_cast<int>(c))
      return {Verdict::fail,
              "element of order " + std::to_string(d) + " conjugate to its inverse"};
  }
  return {Verdict::pass, ""};
}

inline FilterResult filterCenter(const Group& g) {
  if (g.isAbelian()) return {Verdict::pass, "abelian"};
  Group z = g.subgroupAsGroup(g.center(), "Z");
  std::vector<long long> inv = z.abelianInvariants();
  static const std::vector<std::vector<long long>> ambient = {{4, 4}, {6, 6}, {2, 12}};
  for (const auto& a : ambient)
    if (Group::abelianEmbeds(inv, a)) return {Verdict::pass, ""};
  std::ostringstream os;
  os << "center invariants (";
  for (size_t i = 0; i < inv.size(); ++i) os << (i ? "," : "") << inv[i];
  os << ") embed in none of C4xC4, C6xC6, C2xC12";
  return {Verdict::fail, os.str()};
}

inline FilterResult filterSylow(const Group& g, const FilterConfig& config) {
  if (config.sylow2List.empty() || config.sylow3List.empty())
    throw std::runtime_error("filterSylow: Sylow reference list missing");
  for (long long p : {2LL, 3LL}) {
    const auto& list = p == 2 ? config.sylow2List : config.sylow3List;
    Group s = g.subgroupAsGroup(g.sylowSubgroup(p), "Syl");
    bool ok = false;
    for (const auto& ref : list)
      if (s.isIsomorphicTo(ref.group)) {
        ok = true;
        break;
      }
    if (!ok)
      return {Verdict::fail, "Sylow-" + std::to_string(p) + " subgroup of order " +
                                 std::to_string(s.order()) + " matches no table entry"};
  }
  return {Verdict::pass, ""};
}

inline FilterResult filterForbiddenSubgroups(const Group& g, const FilterConfig& config) {
  // the whole group first: the common fail case, no lattice walk needed
  for (const auto& f : config.forbiddenList)
    if (f.group.order() == g.order() && g.isIsomorphicTo(f.group))
      return {Verdict::fail, "the group itself is " + f.tag};
  std::set<long long> wanted;
  for (const auto& f : config.forbiddenList)
    if (f.group.order() < g.order() && g.order() % f.group.order() == 0)
      wanted.insert(f.group.order());
  if (wanted.empty()) return {Verdict::pass, ""};
  for (const auto& sc : g.subgroupConjClasses(config.subgroupClassBudget)) {
    long long so = static_cast<long long>(sc.rep.size());
    if (!wanted.count(so)) continue;
    Group h = g.subgroupAsGroup(sc.rep, "H");
    for (const auto& f : config.forbiddenList)
      if (f.group.order() == so && h.isIsomorphicTo(f.group))
        return {Verdict::fail,
                "subgroup of order " + std::to_string(so) + " isomorphic to " + f.tag};
  }
  return {Verdict::pass, ""};
}

// Cyclic normal subgroup with cyclic quotient. Checked directly over the
// cyclic subgroups, largest first.
inline bool isMetacyclic(const Group& g) {
  auto isCyclicGroup = [](const Group& h) {
    for (int x = 0; x < h.order(); ++x)
      if (h.elementOrder(x) == h.order()) return true;
    return false;
  };
  if (isCyclicGroup(g)) return true;
  std::set<std::vector<int>> cyclics;
  for (int x = 1; x < g.order(); ++x) cyclics.insert(g.closureOf({x}));
  std::vector<std::vector<int>> bySize(cyclics.begin(), cyclics.end());
  std::sort(bySize.begin(), bySize.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& n : bySize) {
    if (!g.isSubgroupNormal(n)) continue;
    if (isCyclicGroup(g.factorGroupBy(n, "Q"))) return true;
  }
  return false;
}

inline FilterResult filterMetacyclicInDerived(const Group& g) {
  Group d = g.subgroupAsGroup(g.derivedSubgroup(), "D");
  if (d.isAbelian()) return {Verdict::pass, "derived subgroup abelian"};
  for (const auto& sc : d.subgroupConjClasses()) {
    if (sc.rep.size() < 6) continue;  // smallest non-abelian group has order 6
    Group u = d.subgroupAsGroup(sc.rep, "U");
    if (!u.isAbelian() && isMetacyclic(u))
      return {Verdict::fail, "non-abelian metacyclic subgroup of order " +
                                 std::to_string(u.order()) + " inside [G,G]"};
  }
  return {Verdict::pass, ""};
}

inline FilterResult filterAbelianClassified(const Group& g, const FilterConfig& config) {
  if (!g.isAbelian()) return {Verdict::skipped, "group is not abelian"};
  std::vector<long long> inv = g.abelianInvariants();
  for (const auto& a : config.abelianList)
    if (a.group.isAbelian() && a.group.abelianInvariants() == inv)
      return {Verdict::pass, "matches " + a.tag};
  std::ostringstream os;
  os << "abelian invariants (";
  for (size_t i = 0; i < inv.size(); ++i) os << (i ? "," : "") << inv[i];
  os << ") not in the classified list";
  return {Verdict::fail, os.str()};
}

// ---- the battery --------------------------------------------------------------

inline FilterReport runAllFilters(const Group& g, const FilterConfig& config) {
  FilterReport report;
  report.groupTag = g.name().empty() ? "order-" + std::to_string(g.order()) : g.name();
  auto apply = [&](const std::string& name, FilterResult r) {
    report.outcomes.push_back({name, r.verdict, r.witness});
    if (r.verdict == Verdict::fail) report.overall = false;
    return !(r.verdict == Verdict::fail && config.shortCircuit);
  };
  if (!apply("prime-structure", filterPrimeStructure(g))) return report;
  if (!apply("element-orders", filterElementOrders(g, config.allowedOrders))) return report;
  if (!apply("conjugate-inverse", filterConjInverse(g))) return report;
  if (!apply("center", filterCenter(g))) return report;
  if (config.sylow2List.empty() || config.sylow3List.empty()) {
    if (!apply("sylow", {Verdict::skipped, "no reference list configured"})) return report;
  } else if (!apply("sylow", filterSylow(g, config))) {
    return report;
  }
  if (config.forbiddenList.empty()) {
    if (!apply("forbidden-subgroups", {Verdict::skipped, "no reference list configured"}))
      return report;
  } else if (!apply("forbidden-subgroups", filterForbiddenSubgroups(g, config))) {
    return report;
  }
  if (!apply("metacyclic-derived", filterMetacyclicInDerived(g))) return report;
  if (!g.isAbelian()) {
    if (!apply("abelian-classified", {Verdict::skipped, "group is not abelian"}))
      return report;
  } else if (config.abelianList.empty()) {
    if (!apply("abelian-classified", {Verdict::skipped, "no reference list configured"}))
      return report;
  } else if (!apply("abelian-classified", filterAbelianClassified(g, config))) {
    return report;
  }
  apply("rep-exists", filterRepExists(g, config.dimension));
  return report;
}

}  // namespace hyperell
