#pragma once

// The group catalog: an embedded, self-validating library of every named
// group in the classification (Table-1 survivors, the forbidden list, the
// Sylow reference types, the appendix-script screens) plus a complete
// stratum of all groups of order <= 32 up to isomorphism, a line-oriented
// text format for user-supplied groups, and small-groups-ID resolution by
// isomorphism matching.
//
// Completeness is tracked per order. Orders 1..32 are marked complete in
// the embedded catalog; beyond that, users extend completeness by supplying
// files, and downstream emptiness claims stay relative to the catalog.
//
// Catalogs are immutable after load; concurrent reads are safe once the
// builtin catalog's lazy structure caches have been warmed by validation.

#include "group.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperell {

struct CatalogEntry {
  GroupTag tag;
  int degree = 1;
  std::vector<Perm> generators;
  std::string provenance = "embedded";  // "embedded" | "file"
  Group group;                          // built once at load
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::set<long long> completeOrders;

  bool isComplete(long long order) const { return completeOrders.count(order) != 0; }

  const CatalogEntry* byId(long long order, long long index) const {
    for (const auto& e : entries)
      if (e.tag.paperId && e.tag.paperId->first == order && e.tag.paperId->second == index)
        return &e;
    return nullptr;
  }

  const CatalogEntry* byName(const std::string& name) const {
    for (const auto& e : entries)
      if (e.tag.name == name) return &e;
    return nullptr;
  }

  // Key is either "o,i" (optionally bracketed, "[o,i]") or an entry name.
  const CatalogEntry* lookup(const std::string& key) const {
    std::string k = key;
    if (k.size() >= 2 && k.front() == '[' && k.back() == ']') k = k.substr(1, k.size() - 2);
    auto comma = k.find(',');
    if (comma != std::string::npos) {
      try {
        size_t p1 = 0, p2 = 0;
        long long o = std::stoll(k.substr(0, comma), &p1);
        long long i = std::stoll(k.substr(comma + 1), &p2);
        if (p1 == comma && p2 == k.size() - comma - 1)
          if (const CatalogEntry* e = byId(o, i)) return e;
      } catch (const std::exception&) {
      }
    }
    return byName(key);
  }

  std::vector<const CatalogEntry*> ofOrder(long long order) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries)
      if (e.group.order() == order) out.push_back(&e);
    return out;
  }
};

// Content comparison for round-trip tests: provenance is deliberately
// ignored, everything else (order, tags, degrees, generator lists,
// completeness marks) must agree entry for entry.
inline bool sameCatalogContent(const Catalog& a, const Catalog& b) {
  if (a.completeOrders != b.completeOrders) return false;
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    const CatalogEntry& x = a.entries[i];
    const CatalogEntry& y = b.entries[i];
    if (x.tag != y.tag || x.degree != y.degree || x.generators != y.generators) return false;
  }
  return true;
}

// ---- construction helpers ------------------------------------------------------

namespace detail {

inline Group cyclicProduct(const std::vector<long long>& ns, const std::string& name) {
  Group g = Group::cyclic(ns.at(0));
  for (size_t i = 1; i < ns.size(); ++i) g = Group::directProduct(g, Group::cyclic(ns[i]));
  g.setName(name);
  return g;
}

// Heisenberg group of order 27 acting on the nine points (x, y) of F3^2,
// indexed 3x + y: the x-shift and the shear generate it, their commutator
// is the central y-shift.
inline Group heisenberg3() {
  Group h = Group::fromGenerators(
      9, {permFromCycles("(0,3,6)(1,4,7)(2,5,8)", 9), permFromCycles("(3,4,5)(6,8,7)", 9)},
      "Heis(3)");
  if (h.order() != 27 || h.exponent() != 3 || h.isAbelian())
    throw std::runtime_error("catalog: Heis(3) model is wrong");
  return h;
}

inline Group alternating4() {
  return Group::fromGenerators(4, {permFromCycles("(0,1,2)", 4), permFromCycles("(0,1)(2,3)", 4)},
                               "A4");
}

inline Group symmetric4() {
  return Group::fromGenerators(4, {permFromCycles("(0,1)", 4), permFromCycles("(0,1,2,3)", 4)},
                               "S4");
}

// SL(2,3) as Q8 extended by the order-3 automorphism cycling i -> j -> k.
inline Group sl23() {
  Group q8 = Group::dicyclic(2);
  int a = q8.generatorIndices()[0], b = q8.generatorIndices()[1];
  return Group::semidirectProduct(q8, Group::cyclic(3), {{b, q8.mul(a, b)}}, "SL(2,3)");
}

// GL(3,2) in its guise PSL(2,7), acting on the projective line over F7:
// points 0..6 are the field, 7 is infinity; generators z -> z+1, z -> -1/z.
inline Group gl32() {
  return Group::fromGenerators(
      8, {permFromCycles("(0,1,2,3,4,5,6)", 8), permFromCycles("(0,7)(1,6)(2,3)(4,5)", 8)},
      "GL(3,2)");
}

// F8 = F2[x]/(x^3 + x + 1), elements as 3-bit integers.
inline int mulF8(int a, int b) {
  int r = 0;
  for (int i = 0; i < 3; ++i)
    if (b & (1 << i)) r ^= a << i;
  for (int i = 4; i >= 3; --i)
    if (r & (1 << i)) r ^= 0b1011 << (i - 3);
  return r;
}

// SL(2,8) = PSL(2,8) on the projective line over F8: points 0..7 the field,
// 8 infinity; generators z -> z+1, z -> x*z, z -> 1/z.
inline Group sl28() {
  Perm t(9), m(9), s(9);
  for (int z = 0; z < 8; ++z) t[z] = z ^ 1;
  t[8] = 8;
  m[0] = 0;
  m[8] = 8;
  for (int z = 1; z < 8; ++z) m[z] = mulF8(z, 2);
  s[0] = 8;
  s[8] = 0;
  for (int z = 1; z < 8; ++z) {
    int z2 = mulF8(z, z), z4 = mulF8(z2, z2);
    s[z] = mulF8(z2, z4);  // z^6 = z^-1
  }
  return Group::fromGenerators(9, {t, m, s}, "SL(2,8)");
}

// Central product of two groups, each with a unique central involution:
// the direct product modulo the diagonal of the two involutions.
inline Group centralProduct(const Group& a, const Group& b, const std::string& name) {
  auto centralInvolution = [](const Group& g, int offset, int degree) {
    for (int e : g.center()) {
      if (e == 0 || g.elementOrder(e) != 2) continue;
      Perm ext = permIdentity(degree);
      Perm inner = g.perm(e);
      for (size_t i = 0; i < inner.size(); ++i) ext[offset + i] = offset + inner[i];
      return ext;
    }
    throw std::runtime_error("centralProduct: no central involution");
  };
  Group prod = Group::directProduct(a, b);
  int za = prod.indexOf(centralInvolution(a, 0, prod.degree()));
  int zb = prod.indexOf(centralInvolution(b, a.degree(), prod.degree()));
  Group q = prod.factorGroupBy(prod.closureOf({prod.mul(za, zb)}), name);
  if (q.order() != prod.order() / 2) throw std::runtime_error("centralProduct: wrong order");
  return q;
}

inline CatalogEntry makeEmbedded(std::string name, long long idOrder, long long idIndex,
                                 Group g) {
  CatalogEntry e;
  e.tag.name = name;
  if (idOrder > 0) {
    e.tag.paperId = std::make_pair(idOrder, idIndex);
    if (g.order() != idOrder)
      throw std::runtime_error("catalog: '" + name + "' has order " +
                               std::to_string(g.order()) + " but is tagged [" +
                               std::to_string(idOrder) + "," + std::to_string(idIndex) + "]");
  }
  g.setName(std::move(name));
  e.degree = g.degree();
  e.generators = g.generators();
  e.provenance = "embedded";
  e.group = std::move(g);
  return e;
}

}  // namespace detail

// ---- validation ---------------------------------------------------------------

// Runs the catalog invariants, throwing on the first violation: tag-order
// consistency, paperId uniqueness, and pairwise non-isomorphism within every
// completeness stratum. Returns a one-line summary for reporting.
inline std::string validateCatalog(const Catalog& c) {
  std::set<std::pair<long long, long long>> ids;
  for (const auto& e : c.entries) {
    if (e.degree != e.group.degree() ||
        static_cast<long long>(e.generators.size()) !=
            static_cast<long long>(e.group.generators().size()))
      throw std::runtime_error("catalog: entry '" + e.tag.name +
                               "' disagrees with its cached group");
    if (e.tag.paperId) {
      if (e.group.order() != e.tag.paperId->first)
        throw std::runtime_error("catalog: entry '" + e.tag.name + "' has order " +
                                 std::to_string(e.group.order()) + " but id " +
                                 tagText(e.tag));
      if (!ids.insert(*e.tag.paperId).second)
        throw std::runtime_error("catalog: duplicate paperId " + tagText(e.tag));
    }
  }
  long long pairs = 0;
  for (long long o : c.completeOrders) {
    auto stratum = c.ofOrder(o);
    for (size_t i = 0; i < stratum.size(); ++i)
      for (size_t j = i + 1; j < stratum.size(); ++j) {
        ++pairs;
        if (stratum[i]->group.isIsomorphicTo(stratum[j]->group))
          throw std::runtime_error("catalog: completeness stratum " + std::to_string(o) +
                                   " contains isomorphic entries '" + stratum[i]->tag.name +
                                   "' and '" + stratum[j]->tag.name + "'");
      }
  }
  std::ostringstream os;
  os << c.entries.size() << " entries, " << ids.size() << " tagged, "
     << c.completeOrders.size() << " complete strata (" << pairs
     << " non-isomorphism pairs checked)";
  return os.str();
}

// ---- the embedded catalog -------------------------------------------------------

namespace detail {

inline Catalog buildEmbedded() {
  using G = Group;
  std::vector<CatalogEntry> es;
  auto add = [&](std::string name, long long io, long long ii, Group g) {
    es.push_back(makeEmbedded(std::move(name), io, ii, std::move(g)));
  };
  auto cp = [&](std::vector<long long> ns, const std::string& name) {
    return cyclicProduct(ns, name);
  };

  Group c2 = G::cyclic(2), c3 = G::cyclic(3), c4 = G::cyclic(4), c6 = G::cyclic(6);
  Group s3 = G::dihedral(3, "S3");
  Group d4 = G::dihedral(4, "D4");
  Group q8 = G::dicyclic(2, "Q8");
  Group a4 = alternating4();
  Group heis = heisenberg3();
  Group c33 = cp({3, 3}, "C3^2");
  Group c44 = cp({4, 4}, "C4xC4");
  Group c22 = cp({2, 2}, "C2xC2");

  // inversion on both factors of C3 x C3
  int t1 = c33.generatorIndices()[0], t2 = c33.generatorIndices()[1];
  std::vector<int> invBoth = {c33.inv(t1), c33.inv(t2)};

  // the central-product witness D4 y C4: D4 extended by a central k, k^2 = r^2
  Group d4y4 = [&] {
    std::vector<int> ids(d4.generatorIndices().begin(), d4.generatorIndices().end());
    int r = d4.generatorIndices()[0];
    return G::cyclicExtension(d4, ids, d4.mul(r, r), "D4yC4");
  }();

  // ---- complete strata: orders 1..31 ----
  add("C1", 1, 1, G::cyclic(1));
  add("C2", 2, 1, c2);
  add("C3", 3, 1, c3);
  add("C4", 4, 1, c4);
  add("C2xC2", 4, 2, c22);
  add("C5", 5, 1, G::cyclic(5));
  add("S3", 6, 1, s3);
  add("C6", 6, 2, c6);
  add("C7", 7, 1, G::cyclic(7));
  add("C8", 8, 1, G::cyclic(8));
  add("C2xC4", 8, 2, cp({2, 4}, "C2xC4"));
  add("D4", 8, 3, d4);
  add("Q8", 8, 4, q8);
  add("C2^3", 8, 5, cp({2, 2, 2}, "C2^3"));
  add("C9", 9, 1, G::cyclic(9));
  add("C3^2", 9, 2, c33);
  add("D5", 0, 0, G::dihedral(5));
  add("C10", 10, 2, G::cyclic(10));
  add("C11", 0, 0, G::cyclic(11));
  add("G(3,4,2)", 12, 1, G::metacyclic(3, 4, 2));
  add("C12", 12, 2, G::cyclic(12));
  add("A4", 12, 3, a4);
  add("S3xC2", 12, 4, G::directProduct(s3, c2));
  add("C2xC6", 12, 5, cp({2, 6}, "C2xC6"));
  add("C13", 0, 0, G::cyclic(13));
  add("D7", 0, 0, G::dihedral(7));
  add("C14", 14, 2, G::cyclic(14));
  add("C15", 15, 1, G::cyclic(15));

  add("C16", 0, 0, G::cyclic(16));
  add("C4xC4", 16, 2, c44);
  {
    Group c4c2 = cp({4, 2}, "C4xC2");
    int ai = c4c2.generatorIndices()[0], bi = c4c2.generatorIndices()[1];
    add("(C4xC2):C2", 16, 3, G::semidirectProduct(c4c2, c2, {{c4c2.mul(ai, bi), bi}}));
  }
  add("G(4,4,3)", 16, 4, G::metacyclic(4, 4, 3));
  add("C2xC8", 16, 5, cp({2, 8}, "C2xC8"));
  add("G(8,2,5)", 16, 6, G::metacyclic(8, 2, 5));
  add("D8", 0, 0, G::dihedral(8));
  add("G(8,2,3)", 16, 8, G::metacyclic(8, 2, 3));
  add("Q16", 0, 0, G::dicyclic(4));
  add("C2^2xC4", 16, 10, cp({2, 2, 4}, "C2^2xC4"));
  add("D4xC2", 16, 11, G::directProduct(d4, c2));
  add("Q8xC2", 16, 12, G::directProduct(q8, c2));
  add("D4yC4", 16, 13, d4y4);
  add("C2^4", 16, 14, cp({2, 2, 2, 2}, "C2^4"));

  add("C17", 0, 0, G::cyclic(17));
  add("C18", 18, 2, G::cyclic(18));
  add("S3xC3", 18, 3, G::directProduct(s3, c3));
  add("(C3xC3):C2", 18, 4, G::semidirectProduct(c33, c2, {invBoth}));
  add("C3xC6", 18, 5, cp({3, 6}, "C3xC6"));
  add("D9", 0, 0, G::dihedral(9));
  add("C19", 0, 0, G::cyclic(19));
  add("C20", 20, 2, G::cyclic(20));
  add("C2xC10", 20, 5, cp({2, 10}, "C2xC10"));
  add("D10", 0, 0, G::dihedral(10));
  add("G(5,4,2)", 0, 0, G::metacyclic(5, 4, 2));
  add("G(5,4,4)", 0, 0, G::metacyclic(5, 4, 4));
  add("C21", 0, 0, G::cyclic(21));
  add("G(7,3,2)", 0, 0, G::metacyclic(7, 3, 2));
  add("C22", 0, 0, G::cyclic(22));
  add("D11", 0, 0, G::dihedral(11));
  add("C23", 0, 0, G::cyclic(23));

  add("G(3,8,2)", 24, 1, G::metacyclic(3, 8, 2));
  add("C24", 24, 2, G::cyclic(24));
  add("SL(2,3)", 0, 0, sl23());
  add("Dic6", 0, 0, G::dicyclic(6));
  add("S3xC4", 24, 5, G::directProduct(s3, c4));
  add("D12", 0, 0, G::dihedral(12));
  add("G(3,4,2)xC2", 24, 7, G::directProduct(G::metacyclic(3, 4, 2), c2));
  {
    Group n = cp({6, 2}, "C6xC2");
    int a = n.generatorIndices()[0], b = n.generatorIndices()[1];
    add("(C2xC6):C2", 24, 8,
        G::semidirectProduct(n, c2, {{n.inv(a), n.mul(n.power(a, 3), b)}}));
  }
  add("C2xC12", 24, 9, cp({2, 12}, "C2xC12"));
  add("D4xC3", 24, 10, G::directProduct(d4, c3));
  add("Q8xC3", 24, 11, G::directProduct(q8, c3));
  add("S4", 24, 12, symmetric4());
  add("A4xC2", 24, 13, G::directProduct(a4, c2));
  add("S3xC2^2", 24, 14, G::directProduct(G::directProduct(s3, c2), c2));
  add("C2^2xC6", 24, 15, cp({2, 2, 6}, "C2^2xC6"));

  add("C25", 0, 0, G::cyclic(25));
  add("C5^2", 0, 0, cp({5, 5}, "C5^2"));
  add("C26", 0, 0, G::cyclic(26));
  add("D13", 0, 0, G::dihedral(13));
  add("C27", 0, 0, G::cyclic(27));
  add("C3xC9", 0, 0, cp({3, 9}, "C3xC9"));
  add("Heis(3)", 27, 3, heis);
  add("G(9,3,4)", 0, 0, G::metacyclic(9, 3, 4));
  add("C3^3", 27, 5, cp({3, 3, 3}, "C3^3"));
  add("C28", 0, 0, G::cyclic(28));
  add("C2xC14", 0, 0, cp({2, 14}, "C2xC14"));
  add("D14", 0, 0, G::dihedral(14));
  add("G(7,4,6)", 0, 0, G::metacyclic(7, 4, 6));
  add("C29", 0, 0, G::cyclic(29));
  add("C30", 30, 4, G::cyclic(30));
  add("D15", 0, 0, G::dihedral(15));
  add("S3xC5", 0, 0, G::directProduct(s3, G::cyclic(5)));
  add("D5xC3", 0, 0, G::directProduct(G::dihedral(5), c3));
  add("C31", 0, 0, G::cyclic(31));

  // ---- complete stratum: order 32 (51 types) ----
  add("C32", 0, 0, G::cyclic(32));
  add("C16xC2", 0, 0, cp({16, 2}, "C16xC2"));
  add("C4xC8", 32, 3, cp({4, 8}, "C4xC8"));
  add("C8xC2xC2", 0, 0, cp({8, 2, 2}, "C8xC2xC2"));
  add("C2xC4xC4", 32, 21, cp({2, 4, 4}, "C2xC4xC4"));
  add("C4xC2^3", 0, 0, cp({4, 2, 2, 2}, "C4xC2^3"));
  add("C2^5", 0, 0, cp({2, 2, 2, 2, 2}, "C2^5"));
  add("D16", 0, 0, G::dihedral(16));
  add("G(16,2,7)", 0, 0, G::metacyclic(16, 2, 7));
  add("G(16,2,9)", 0, 0, G::metacyclic(16, 2, 9));
  add("Q32", 0, 0, G::dicyclic(8));
  add("G(8,4,5)", 32, 4, G::metacyclic(8, 4, 5));
  add("G(8,4,3)", 32, 13, G::metacyclic(8, 4, 3));
  add("G(8,4,7)", 0, 0, G::metacyclic(8, 4, 7));
  add("G(4,8,3)", 32, 12, G::metacyclic(4, 8, 3));
  add("D8xC2", 0, 0, G::directProduct(G::dihedral(8), c2));
  add("G(8,2,3)xC2", 0, 0, G::directProduct(G::metacyclic(8, 2, 3), c2));
  add("G(8,2,5)xC2", 32, 37, G::directProduct(G::metacyclic(8, 2, 5), c2));
  add("Q16xC2", 0, 0, G::directProduct(G::dicyclic(4), c2));
  add("D4xC4", 32, 25, G::directProduct(d4, c4));
  add("Q8xC4", 0, 0, G::directProduct(q8, c4));
  add("D4xC2xC2", 0, 0, G::directProduct(G::directProduct(d4, c2), c2));
  add("Q8xC2xC2", 0, 0, G::directProduct(G::directProduct(q8, c2), c2));
  add("G(4,4,3)xC2", 0, 0, G::directProduct(G::metacyclic(4, 4, 3), c2));
  add("D4yC4xC2", 0, 0, G::directProduct(d4y4, c2));
  {
    int x = c44.generatorIndices()[0], y = c44.generatorIndices()[1];
    add("C4wrC2", 32, 11, G::semidirectProduct(c44, c2, {{y, x}}));
    add("(C4xC4):C2", 32, 24,
        G::semidirectProduct(c44, c2, {{c44.mul(x, c44.mul(y, y)), y}}));
    add("(C4xC4):C2inv", 0, 0, G::semidirectProduct(c44, c2, {{c44.inv(x), c44.inv(y)}}));
  }
  {
    Group n = cp({8, 2}, "C8xC2");
    int a = n.generatorIndices()[0], b = n.generatorIndices()[1];
    add("(C8xC2):C2_ab", 32, 5, G::semidirectProduct(n, c2, {{n.mul(a, b), b}}));
    add("(C8xC2):C2_a3b", 32, 9,
        G::semidirectProduct(n, c2, {{n.mul(n.power(a, 3), b), b}}));
  }
  add("D4oD4", 0, 0, centralProduct(d4, d4, "D4oD4"));
  add("Q8oD4", 0, 0, centralProduct(q8, d4, "Q8oD4"));

  // The remaining 19 order-32 types carry no name in the sources this
  // artifact reproduces; they are labeled O32_01..O32_19 and pinned by
  // index-2 extension recipes <N, t | t^2 = z, t y t^-1 = alpha(y)> over
  // fixed base groups (alpha given by element indices of the generator
  // images, z by element index). The recipes were found by exhausting all
  // index-2 extensions and keeping one representative per isomorphism type;
  // build-time validation rechecks pairwise non-isomorphism.
  {
    Group c8 = G::cyclic(8);
    Group c4c2 = cp({4, 2}, "C4xC2");
    Group bC8C2 = G::cyclicExtension(c8, {1}, 0);          // C8 x C2
    Group bSD16 = G::cyclicExtension(c8, {3}, 0);          // G(8,2,3)
    Group bM16 = G::cyclicExtension(c8, {5}, 0);           // G(8,2,5)
    Group bC422 = G::cyclicExtension(c4c2, {1, 2}, 0);     // C4 x C2 x C2
    Group bC44 = G::cyclicExtension(c4c2, {1, 2}, 2);      // C4 x C4
    Group b163 = G::cyclicExtension(c4c2, {4, 2}, 0);      // (C4xC2):C2
    struct Recipe {
      const Group* base;
      std::vector<int> imgs;
      int z;
    };
    const std::vector<Recipe> recipes = {
        {&bC8C2, {8, 2}, 2},     {&bC8C2, {1, 10}, 0},    {&bC8C2, {5, 10}, 0},
        {&bC8C2, {5, 10}, 6},    {&bSD16, {14, 2}, 0},    {&bSD16, {14, 2}, 10},
        {&bM16, {4, 2}, 0},      {&bM16, {4, 2}, 10},     {&bC422, {8, 3, 2}, 0},
        {&bC422, {8, 3, 2}, 4},  {&bC422, {5, 2, 3}, 0},  {&bC422, {5, 2, 3}, 3},
        {&bC422, {6, 9, 3}, 0},  {&bC44, {8, 2, 7}, 2},   {&bC44, {12, 2, 7}, 0},
        {&bC44, {12, 2, 7}, 4},  {&bC44, {12, 2, 10}, 0}, {&b163, {6, 2, 3}, 0},
        {&b163, {9, 2, 3}, 0}};
    for (size_t i = 0; i < recipes.size(); ++i) {
      std::string name = "O32_" + std::string(i + 1 < 10 ? "0" : "") + std::to_string(i + 1);
      add(name, 0, 0, G::cyclicExtension(*recipes[i].base, recipes[i].imgs, recipes[i].z));
    }
  }

  // ---- beyond the completeness frontier: the named groups of the tables ----
  {
    int e1 = c22.generatorIndices()[0], e2 = c22.generatorIndices()[1];
    add("(C2xC2):C9", 36, 3,
        G::semidirectProduct(c22, G::cyclic(9), {{e2, c22.mul(e1, e2)}}));
  }
  add("C2xC18", 36, 5, cp({2, 18}, "C2xC18"));
  add("G(3,4,2)xC3", 36, 6, G::directProduct(G::metacyclic(3, 4, 2), c3));
  add("(C3xC3):C4", 36, 7, G::semidirectProduct(c33, c4, {invBoth}));
  add("C3xC12", 36, 8, cp({3, 12}, "C3xC12"));
  add("A4xC3", 36, 11, G::directProduct(a4, c3));
  add("S3xC6", 36, 12, G::directProduct(s3, c6));
  add("C6xC6", 36, 14, cp({6, 6}, "C6xC6"));
  add("C2xC20", 40, 9, cp({2, 20}, "C2xC20"));

  {
    int x = c44.generatorIndices()[0], y = c44.generatorIndices()[1];
    add("(C4xC4):C3", 48, 3,
        G::semidirectProduct(c44, c3, {{y, c44.inv(c44.mul(x, y))}}));
  }
  add("G(24,2,5)", 48, 5, G::metacyclic(24, 2, 5));
  add("G(3,8,2)xC2", 48, 9, G::directProduct(G::metacyclic(3, 8, 2), c2));
  add("C4xC12", 48, 20, cp({4, 12}, "C4xC12"));
  {
    Group c4c2 = cp({4, 2}, "C4xC2");
    int ai = c4c2.generatorIndices()[0], bi = c4c2.generatorIndices()[1];
    Group g163 = G::semidirectProduct(c4c2, c2, {{c4c2.mul(ai, bi), bi}}, "(C4xC2):C2");
    add("((C4xC2):C2)xC3", 48, 21, G::directProduct(g163, c3));
    add("((C4xC2):C2)xC3^2", 144, 102, G::directProduct(g163, c33));
  }
  add("G(4,4,3)xC3", 48, 22, G::directProduct(G::metacyclic(4, 4, 3), c3));
  add("C2xC24", 48, 23, cp({2, 24}, "C2xC24"));
  add("G(8,2,5)xC3", 48, 24, G::directProduct(G::metacyclic(8, 2, 5), c3));
  add("G(8,2,3)xC3", 48, 26, G::directProduct(G::metacyclic(8, 2, 3), c3));
  {
    int sigma = a4.generatorIndices()[0], xi = a4.generatorIndices()[1];
    add("A4:C4", 48, 30,
        G::semidirectProduct(a4, c4, {{a4.mul(sigma, sigma), xi}}));
  }
  add("A4xC4", 48, 31, G::directProduct(a4, c4));
  add("C2^2xC12", 48, 44, cp({2, 2, 12}, "C2^2xC12"));
  add("D4xC6", 48, 45, G::directProduct(d4, c6));
  add("(D4yC4)xC3", 48, 47, G::directProduct(d4y4, c3));

  {
    int hg = heis.generatorIndices()[0], hh = heis.generatorIndices()[1];
    add("Heis(3):C2", 54, 8,
        G::semidirectProduct(heis, c2, {{heis.mul(hg, hg), heis.mul(hh, hh)}}));
    add("Heis(3):C8", 216, 150,
        G::semidirectProduct(heis, G::cyclic(8),
                             {{heis.mul(hg, heis.mul(hh, hh)), heis.mul(hg, hh)}}));
  }
  add("Heis(3)xC2", 54, 10, G::directProduct(heis, c2));
  add("S3xC3^2", 54, 12, G::directProduct(s3, c33));
  add("C3^2xC6", 54, 15, cp({3, 3, 6}, "C3^2xC6"));

  {
    Group n = cp({2, 2, 2}, "C2^3");
    int e1 = n.generatorIndices()[0], e2 = n.generatorIndices()[1],
        e3 = n.generatorIndices()[2];
    add("C2^3:C7", 56, 11,
        G::semidirectProduct(n, G::cyclic(7), {{e2, e3, n.mul(e1, e2)}}));
  }
  add("C2xC30", 60, 13, cp({2, 30}, "C2xC30"));

  {
    Group n = G::metacyclic(4, 4, 3);
    int g = n.generatorIndices()[0], h = n.generatorIndices()[1];
    add("G(4,4,3):C4", 64, 20, G::semidirectProduct(n, c4, {{g, n.mul(g, h)}}));
  }
  add("G(8,2,5)xC4", 64, 85, G::directProduct(G::metacyclic(8, 2, 5), c4));

  add("G(3,8,2)xC3", 72, 12, G::directProduct(G::metacyclic(3, 8, 2), c3));
  add("(C3xC3):C8", 72, 13, G::semidirectProduct(c33, G::cyclic(8), {invBoth}));
  add("C3xC24", 72, 14, cp({3, 24}, "C3xC24"));
  add("S3xC12", 72, 27, G::directProduct(s3, G::cyclic(12)));
  {
    Group n = cp({6, 2}, "C6xC2");
    int a = n.generatorIndices()[0], b = n.generatorIndices()[1];
    Group g248 =
        G::semidirectProduct(n, c2, {{n.inv(a), n.mul(n.power(a, 3), b)}}, "(C2xC6):C2");
    add("((C2xC6):C2)xC3", 72, 30, G::directProduct(g248, c3));
  }
  add("C6xC12", 72, 36, cp({6, 12}, "C6xC12"));
  add("D4xC3^2", 72, 37, G::directProduct(d4, c33));
  add("Q8xC3^2", 72, 38, G::directProduct(q8, c33));
  add("C2xC6xC6", 72, 50, cp({2, 6, 6}, "C2xC6xC6"));

  add("C4xC24", 96, 46, cp({4, 24}, "C4xC24"));
  add("G(8,4,5)xC3", 96, 47, G::directProduct(G::metacyclic(8, 4, 5), c3));
  add("C2xC4xC12", 96, 161, cp({2, 4, 12}, "C2xC4xC12"));
  {
    int x = c44.generatorIndices()[0], y = c44.generatorIndices()[1];
    Group g3224 = G::semidirectProduct(c44, c2, {{c44.mul(x, c44.mul(y, y)), y}},
                                       "(C4xC4):C2");
    add("((C4xC4):C2)xC3", 96, 164, G::directProduct(g3224, c3));
  }

  add("G(3,4,2)xC3^2", 108, 32, G::directProduct(G::metacyclic(3, 4, 2), c33));
  add("C3^2xC12", 108, 35, cp({3, 3, 12}, "C3^2xC12"));
  add("S3xC6xC3", 108, 42, G::directProduct(G::directProduct(s3, c6), c3));
  add("C3xC6xC6", 108, 45, cp({3, 6, 6}, "C3xC6xC6"));

  add("C12xC12", 144, 101, cp({12, 12}, "C12xC12"));
  add("G(4,4,3)xC3^2", 144, 103, G::directProduct(G::metacyclic(4, 4, 3), c33));
  add("C2xC6xC12", 144, 178, cp({2, 6, 12}, "C2xC6xC12"));

  add("GL(3,2)", 0, 0, gl32());
  add("C6^3", 216, 177, cp({6, 6, 6}, "C6^3"));
  add("SL(2,8)", 0, 0, sl28());

  std::stable_sort(es.begin(), es.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    long long oa = a.group.order(), ob = b.group.order();
    if (oa != ob) return oa < ob;
    long long ia = a.tag.paperId ? a.tag.paperId->second : LLONG_MAX;
    long long ib = b.tag.paperId ? b.tag.paperId->second : LLONG_MAX;
    if (ia != ib) return ia < ib;
    return a.tag.name < b.tag.name;
  });

  Catalog cat;
  cat.entries = std::move(es);
  for (long long o = 1; o <= 32; ++o) cat.completeOrders.insert(o);
  return cat;
}

}  // namespace detail

// The embedded catalog, built and validated once. Returns a shared immutable
// instance; validation reruns the full invariant suite (including pairwise
// non-isomorphism over every complete stratum), so the first call is the
// expensive one.
inline const Catalog& builtinCatalog() {
  static const Catalog cat = [] {
    Catalog c = detail::buildEmbedded();
    validateCatalog(c);
    return c;
  }();
  return cat;
}

// ---- text format ---------------------------------------------------------------
//
//   # comment                     (whole-line comments only)
//   complete <order>              (completeness annotation)
//   group <name> [id=<o>,<i>] degree=<n>
//   gen <disjoint cycles on 0-based points>
//   end
//
// Whitespace between tokens is free; generator lines hold one permutation in
// disjoint-cycle notation, "()" for the identity.

inline std::string writeCatalog(const Catalog& c) {
  std::ostringstream os;
  for (long long o : c.completeOrders) os << "complete " << o << "\n";
  if (!c.completeOrders.empty()) os << "\n";
  for (const auto& e : c.entries) {
    os << "group " << e.tag.name;
    if (e.tag.paperId)
      os << " id=" << e.tag.paperId->first << "," << e.tag.paperId->second;
    os << " degree=" << e.degree << "\n";
    for (const auto& p : e.generators) os << "gen " << permToCycles(p) << "\n";
    os << "end\n\n";
  }
  return os.str();
}

inline Catalog parseCatalog(const std::string& text) {
  Catalog cat;
  std::istringstream in(text);
  std::string line;
  long long lineNo = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw std::runtime_error("catalog parse error at line " + std::to_string(lineNo) + ": " +
                             msg);
  };
  auto parseInt = [&](const std::string& s, const std::string& what) {
    try {
      size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) fail("malformed " + what + " '" + s + "'");
      return v;
    } catch (const std::invalid_argument&) {
      fail("malformed " + what + " '" + s + "'");
    } catch (const std::out_of_range&) {
      fail(what + " out of range '" + s + "'");
    }
    return 0LL;  // unreachable
  };

  bool inEntry = false;
  std::string name;
  std::optional<std::pair<long long, long long>> id;
  long long degree = 0;
  std::vector<Perm> gens;
  long long headerLine = 0;
  std::set<std::pair<long long, long long>> seenIds;

  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw[0] == '#') continue;
    if (!inEntry) {
      if (kw == "complete") {
        std::string rest;
        if (!(ls >> rest)) fail("'complete' needs an order");
        long long o = parseInt(rest, "order");
        if (o < 1) fail("'complete' needs a positive order");
        cat.completeOrders.insert(o);
      } else if (kw == "group") {
        if (!(ls >> name)) fail("'group' needs a name");
        id.reset();
        degree = 0;
        gens.clear();
        headerLine = lineNo;
        std::string tok;
        bool haveDegree = false;
        while (ls >> tok) {
          if (tok.rfind("id=", 0) == 0) {
            std::string body = tok.substr(3);
            auto comma = body.find(',');
            if (comma == std::string::npos) fail("id needs the form id=<order>,<index>");
            long long o = parseInt(body.substr(0, comma), "id order");
            long long i = parseInt(body.substr(comma + 1), "id index");
            if (o < 1 || i < 1) fail("id parts must be positive");
            id = std::make_pair(o, i);
          } else if (tok.rfind("degree=", 0) == 0) {
            degree = parseInt(tok.substr(7), "degree");
            haveDegree = true;
          } else {
            fail("unexpected token '" + tok + "' on group line");
          }
        }
        if (!haveDegree) fail("group line needs degree=<n>");
        if (degree < 1 || degree > kMaxGroupOrder) fail("degree out of range");
        inEntry = true;
      } else if (kw == "gen" || kw == "end") {
        fail("'" + kw + "' outside a group entry");
      } else {
        fail("unknown directive '" + kw + "'");
      }
    } else {
      if (kw == "gen") {
        std::string rest;
        std::getline(ls, rest);
        try {
          gens.push_back(permFromCycles(rest, static_cast<int>(degree)));
        } catch (const std::exception& ex) {
          fail(std::string("bad permutation: ") + ex.what());
        }
      } else if (kw == "end") {
        if (gens.empty()) fail("entry '" + name + "' has no generators");
        CatalogEntry e;
        e.tag.name = name;
        e.tag.paperId = id;
        e.degree = static_cast<int>(degree);
        e.generators = gens;
        e.provenance = "file";
        try {
          e.group = Group::fromGenerators(static_cast<int>(degree), gens, name);
        } catch (const std::exception& ex) {
          fail(std::string("cannot build group '") + name + "': " + ex.what());
        }
        if (id && e.group.order() != id->first)
          fail("entry '" + name + "' generates order " + std::to_string(e.group.order()) +
               " but id says " + std::to_string(id->first));
        if (id && !seenIds.insert(*id).second)
          fail("duplicate paperId [" + std::to_string(id->first) + "," +
               std::to_string(id->second) + "]");
        cat.entries.push_back(std::move(e));
        inEntry = false;
      } else {
        fail("expected 'gen' or 'end' inside entry '" + name + "'");
      }
    }
  }
  if (inEntry) {
    lineNo = headerLine;
    fail("entry '" + name + "' never reaches 'end'");
  }
  return cat;
}

// ---- resolution and merging ------------------------------------------------------

// The tag of the unique catalog entry isomorphic to G. Entries carrying a
// paperId win over name-only entries; two distinct tagged matches mean the
// catalog itself pairs two tags with one isomorphism type, which is reported
// as an error rather than silently picking one.
inline std::optional<GroupTag> resolvePaperId(const Group& g, const Catalog& cat) {
  const CatalogEntry* tagged = nullptr;
  const CatalogEntry* named = nullptr;
  for (const auto& e : cat.entries) {
    if (e.group.order() != g.order()) continue;
    if (!e.tag.paperId && (named || tagged)) continue;
    if (!e.group.isIsomorphicTo(g)) continue;
    if (e.tag.paperId) {
      if (tagged)
        throw std::runtime_error("resolvePaperId: both " + tagText(tagged->tag) + " and " +
                                 tagText(e.tag) + " match");
      tagged = &e;
    } else if (!named) {
      named = &e;
    }
  }
  if (tagged) return tagged->tag;
  if (named) return named->tag;
  return std::nullopt;
}

// Appends the entries and completeness marks of `extra` onto `base`,
// rejecting paperId collisions.
inline Catalog mergeCatalogs(Catalog base, const Catalog& extra) {
  std::set<std::pair<long long, long long>> ids;
  for (const auto& e : base.entries)
    if (e.tag.paperId) ids.insert(*e.tag.paperId);
  for (const auto& e : extra.entries) {
    if (e.tag.paperId && !ids.insert(*e.tag.paperId).second)
      throw std::runtime_error("mergeCatalogs: duplicate paperId " + tagText(e.tag));
    base.entries.push_back(e);
  }
  base.completeOrders.insert(extra.completeOrders.begin(), extra.completeOrders.end());
  return base;
}

}  // namespace hyperell
