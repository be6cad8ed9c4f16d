#include <catch2/catch_amalgamated.hpp>

#include <hyperell/group.hpp>

using namespace hyperell;

namespace {

Group s3() { return Group::fromGenerators(3, {permFromCycles("(0,1)", 3), permFromCycles("(0,1,2)", 3)}, "S3"); }
Group s4() { return Group::fromGenerators(4, {permFromCycles("(0,1)", 4), permFromCycles("(0,1,2,3)", 4)}, "S4"); }
Group a4() { return Group::fromGenerators(4, {permFromCycles("(0,1,2)", 4), permFromCycles("(0,1)(2,3)", 4)}, "A4"); }

Group heisenberg3() {
  Group n = Group::directProduct(Group::cyclic(3), Group::cyclic(3), "C3xC3");
  Group h = Group::cyclic(3);
  // z acts by x -> x y, y -> y
  int x = n.generatorIndices()[0], y = n.generatorIndices()[1];
  std::vector<std::vector<int>> act{{n.mul(x, y), y}};
  return Group::semidirectProduct(n, h, act, "Heis3");
}

}  // namespace

TEST_CASE("cyclic groups") {
  Group c6 = Group::cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(c6.isAbelian());
  CHECK(c6.exponent() == 6);
  CHECK(c6.abelianInvariants() == std::vector<long long>{6});
  CHECK(c6.numClasses() == 6);
  Group c1 = Group::cyclic(1);
  CHECK(c1.order() == 1);
  CHECK(c1.numClasses() == 1);
}

TEST_CASE("order cap enforced") { CHECK_THROWS(Group::cyclic(5001)); }

TEST_CASE("direct products") {
  Group g = Group::directProduct(Group::cyclic(2), Group::cyclic(3));
  CHECK(g.order() == 6);
  CHECK(g.isIsomorphicTo(Group::cyclic(6)));
  Group h = Group::directProduct(Group::cyclic(2), Group::cyclic(12));
  CHECK(h.abelianInvariants() == std::vector<long long>{2, 12});
  Group k = Group::directProduct(Group::directProduct(Group::cyclic(2), Group::cyclic(2)),
                                 Group::cyclic(4));
  CHECK(k.abelianInvariants() == std::vector<long long>{2, 2, 4});
}

TEST_CASE("metacyclic validation and exact relation") {
  CHECK_THROWS(Group::metacyclic(8, 2, 2));  // gcd(r, m) != 1
  CHECK_THROWS(Group::metacyclic(8, 3, 3));  // r^n != 1 mod m
  Group g = Group::metacyclic(8, 2, 3);
  CHECK(g.order() == 16);
  // the defining relation b^-1 a b = a^3 holds on the nose
  int a = g.generatorIndices()[0], b = g.generatorIndices()[1];
  CHECK(g.elementOrder(a) == 8);
  CHECK(g.conjugate(a, b) == g.power(a, 3));

  Group d4a = Group::dihedral(4);
  Group d4b = Group::metacyclic(4, 2, 3);
  CHECK(d4a.order() == 8);
  CHECK(d4a.isIsomorphicTo(d4b));

  Group s3m = Group::metacyclic(3, 2, 2);
  CHECK(s3m.isIsomorphicTo(s3()));
}

TEST_CASE("dicyclic groups") {
  Group q8 = Group::dicyclic(2, "Q8");
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.isAbelian());
  auto hist = q8.orderHistogram();
  CHECK(hist == std::map<long long, long long>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(q8.exponent() == 4);
  CHECK(q8.center().size() == 2);
  CHECK(q8.derivedSubgroup().size() == 2);
  // every subgroup of Q8 is normal; six conjugacy classes of subgroups
  auto subs = q8.subgroupConjClasses();
  CHECK(subs.size() == 6);
  for (auto& s : subs) CHECK(s.orbitSize == 1);
  CHECK(q8.normalSubgroups().size() == 6);

  Group dic3 = Group::dicyclic(3);
  CHECK(dic3.order() == 12);
  CHECK(dic3.orderHistogram() ==
        std::map<long long, long long>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}});
}

TEST_CASE("symmetric group structure") {
  Group g = s3();
  CHECK(g.order() == 6);
  auto classes = g.conjugacyClasses();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});  // identity class first
  CHECK(g.elementOrder(classes[1][0]) == 2);
  CHECK(classes[1].size() == 3);
  CHECK(g.elementOrder(classes[2][0]) == 3);
  CHECK(classes[2].size() == 2);
  CHECK(g.subgroupConjClasses().size() == 4);
  CHECK(g.derivedSubgroup().size() == 3);
  CHECK(g.center().size() == 1);

  Group s = s4();
  CHECK(s.order() == 24);
  CHECK(s.numClasses() == 5);
  auto syl2 = s.sylowSubgroup(2);
  CHECK(syl2.size() == 8);
  CHECK(s.subgroupAsGroup(syl2).isIsomorphicTo(Group::dihedral(4)));
  CHECK(s.sylowSubgroup(3).size() == 3);
}

TEST_CASE("dihedral classes in canonical order") {
  Group d4 = Group::dihedral(4);
  auto classes = d4.conjugacyClasses();
  REQUIRE(classes.size() == 5);
  // (element order, class size): (1,1), (2,1), (2,2), (2,2), (4,2)
  CHECK(d4.elementOrder(classes[0][0]) == 1);
  CHECK(classes[1].size() == 1);
  CHECK(d4.elementOrder(classes[1][0]) == 2);
  CHECK(classes[2].size() == 2);
  CHECK(classes[3].size() == 2);
  CHECK(d4.elementOrder(classes[4][0]) == 4);
  // power map: squaring the order-4 class lands in the central involution class
  CHECK(d4.classPower(4, 2) == 1);
  CHECK(d4.classInverse(4) == 4);
}

TEST_CASE("semidirect product validation") {
  Group c3 = Group::cyclic(3);
  Group c4 = Group::cyclic(4);
  int a = c3.generatorIndices()[0];
  // inversion action of C4 on C3 gives the dicyclic group of order 12
  Group g = Group::semidirectProduct(c3, c4, {{c3.inv(a)}});
  CHECK(g.order() == 12);
  CHECK(g.isIsomorphicTo(Group::dicyclic(3)));
  // C3 cannot act on C3 by inversion (order mismatch)
  CHECK_THROWS(Group::semidirectProduct(c3, Group::cyclic(3), {{c3.inv(a)}}));
}

TEST_CASE("heisenberg group of order 27") {
  Group h = heisenberg3();
  CHECK(h.order() == 27);
  CHECK_FALSE(h.isAbelian());
  CHECK(h.exponent() == 3);
  CHECK(h.center().size() == 3);
  CHECK(h.derivedSubgroup().size() == 3);
  CHECK(h.numClasses() == 11);
  // extraspecial: not isomorphic to the metacyclic G(9,3,4)
  Group m = Group::metacyclic(9, 3, 4);
  CHECK(m.order() == 27);
  CHECK_FALSE(h.isIsomorphicTo(m));
}

TEST_CASE("factor groups") {
  Group q8 = Group::dicyclic(2);
  Group q = q8.factorGroupBy(q8.center());
  CHECK(q.order() == 4);
  CHECK(q.abelianInvariants() == std::vector<long long>{2, 2});

  Group d4 = Group::dihedral(4);
  CHECK(d4.factorGroupBy(d4.center()).abelianInvariants() == std::vector<long long>{2, 2});

  Group a = a4();
  auto v4 = a.sylowSubgroup(2);
  CHECK(v4.size() == 4);
  CHECK(a.isSubgroupNormal(v4));
  CHECK(a.factorGroupBy(v4).isIsomorphicTo(Group::cyclic(3)));
}

TEST_CASE("centralizer and normalizer") {
  Group s = s3();
  // centralizer of a transposition has order 2, normalizer of <(0,1,2)> is all of S3
  int t = -1;
  for (int i = 0; i < s.order(); ++i)
    if (s.elementOrder(i) == 2) {
      t = i;
      break;
    }
  REQUIRE(t >= 0);
  CHECK(s.centralizerOf(t).size() == 2);
  int r = -1;
  for (int i = 0; i < s.order(); ++i)
    if (s.elementOrder(i) == 3) {
      r = i;
      break;
    }
  auto c3 = s.closureOf({r});
  CHECK(s.normalizerOf(c3).size() == 6);
}

TEST_CASE("abelian embedding criterion") {
  using V = std::vector<long long>;
  CHECK(Group::abelianEmbeds(V{2, 2}, V{4, 4}));
  CHECK_FALSE(Group::abelianEmbeds(V{8}, V{4, 4}));
  CHECK_FALSE(Group::abelianEmbeds(V{2, 2, 2}, V{4, 4}));
  CHECK(Group::abelianEmbeds(V{2, 12}, V{2, 12}));
  CHECK(Group::abelianEmbeds(V{3}, V{6, 6}));
  CHECK(Group::abelianEmbeds(V{4}, V{2, 12}));
  CHECK_FALSE(Group::abelianEmbeds(V{2, 2}, V{8}));
  CHECK(Group::abelianEmbeds(V{}, V{4, 4}));
}

TEST_CASE("isomorphism decisions") {
  CHECK_FALSE(Group::dihedral(4).isIsomorphicTo(Group::dicyclic(2)));
  CHECK_FALSE(Group::cyclic(8).isIsomorphicTo(Group::metacyclic(8, 2, 5)));
  CHECK(Group::metacyclic(8, 2, 5).isIsomorphicTo(Group::metacyclic(8, 2, 5)));
  CHECK_FALSE(Group::cyclic(4).isIsomorphicTo(
      Group::directProduct(Group::cyclic(2), Group::cyclic(2))));
  // same group built on different point sets
  Group z6a = Group::cyclic(6);
  Group z6b = Group::directProduct(Group::cyclic(3), Group::cyclic(2));
  CHECK(z6a.isIsomorphicTo(z6b));
  CHECK(s4().isIsomorphicTo(Group::fromGenerators(
      4, {permFromCycles("(0,1,2,3)", 4), permFromCycles("(0,1)", 4)})));
  CHECK_FALSE(s4().isIsomorphicTo(Group::dicyclic(6)));
}

TEST_CASE("subgroup machinery details") {
  Group d4 = Group::dihedral(4);
  auto subs = d4.subgroupConjClasses();
  CHECK(subs.size() == 8);  // 1, Z, two reflection C2 classes, C4, two V4, D4
  long long total = 0;
  for (auto& s : subs) total += s.orbitSize;
  CHECK(total == 10);  // ten subgroups in all
  // normal ones: 1, Z, C4, V4 x2, D4
  CHECK(d4.normalSubgroups().size() == 6);

  Group c12 = Group::cyclic(12);
  CHECK(c12.subgroupConjClasses().size() == 6);  // one per divisor
}

TEST_CASE("element orders and powers") {
  Group g = Group::metacyclic(9, 3, 4);
  auto hist = g.orderHistogram();
  CHECK(hist[1] == 1);
  CHECK(g.exponent() == 9);
  for (int i = 0; i < g.order(); ++i) {
    CHECK(g.power(i, g.elementOrder(i)) == 0);
    CHECK(g.mul(i, g.inv(i)) == 0);
  }
}
