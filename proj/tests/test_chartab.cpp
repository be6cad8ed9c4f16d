#include <catch2/catch_amalgamated.hpp>

#include <hyperell/chartab.hpp>

#include <algorithm>
#include <set>

using namespace hyperell;

namespace {

Group s3() { return Group::fromGenerators(3, {permFromCycles("(0,1)", 3), permFromCycles("(0,1,2)", 3)}, "S3"); }

Group s4() {
  return Group::fromGenerators(4, {permFromCycles("(0,1)", 4), permFromCycles("(0,1,2,3)", 4)}, "S4");
}

Group a4() {
  return Group::fromGenerators(4, {permFromCycles("(0,1)(2,3)", 4), permFromCycles("(0,1,2)", 4)}, "A4");
}

Group heisenberg3() {
  Group c3c3 = Group::directProduct(Group::cyclic(3), Group::cyclic(3));
  int x = c3c3.generatorIndices()[0];
  int y = c3c3.generatorIndices()[1];
  return Group::semidirectProduct(c3c3, Group::cyclic(3), {{c3c3.mul(x, y), y}}, "Heis3");
}

Group sl23() {
  Group q8 = Group::dicyclic(2);
  int a = q8.generatorIndices()[0];
  int b = q8.generatorIndices()[1];
  // the order-3 automorphism a -> b -> ab
  return Group::semidirectProduct(q8, Group::cyclic(3), {{b, q8.mul(a, b)}}, "SL(2,3)");
}

std::vector<long long> degreesOf(const CharacterTable& t) {
  std::vector<long long> d;
  for (size_t i = 0; i < t.chars.size(); ++i) d.push_back(t.degree(static_cast<int>(i)));
  return d;
}

void checkBasics(const CharacterTable& t) {
  CHECK(t.chars.size() == t.classReps.size());
  CHECK(t.verifyDegreeSum());
  CHECK(t.verifyRowOrthogonality());
  CHECK(t.verifyColumnOrthogonality());
}

int uniqueRowOfDegree(const CharacterTable& t, long long d) {
  int found = -1;
  for (size_t i = 0; i < t.chars.size(); ++i)
    if (t.degree(static_cast<int>(i)) == d) {
      REQUIRE(found == -1);
      found = static_cast<int>(i);
    }
  REQUIRE(found >= 0);
  return found;
}

}  // namespace

TEST_CASE("cyclic and small abelian tables") {
  for (long long n : {1, 2, 3, 4, 6, 8, 12}) {
    CharacterTable t = characterTable(Group::cyclic(n));
    CHECK(t.numClasses() == n);
    checkBasics(t);
    for (size_t i = 0; i < t.chars.size(); ++i) CHECK(t.degree(static_cast<int>(i)) == 1);
  }
  CharacterTable t = characterTable(Group::directProduct(Group::cyclic(2), Group::cyclic(4)));
  CHECK(t.numClasses() == 8);
  checkBasics(t);
  // some row must be the trivial character
  bool sawTrivial = false;
  for (auto& row : t.chars) {
    bool allOne = true;
    for (auto& v : row) allOne = allOne && v == CycloNum(1);
    sawTrivial = sawTrivial || allOne;
  }
  CHECK(sawTrivial);
}

TEST_CASE("character values generate all roots for C6") {
  CharacterTable t = characterTable(Group::cyclic(6));
  // on a fixed generator class the six characters take all six 6th roots
  int genClass = -1;
  for (long long c = 0; c < t.numClasses(); ++c)
    if (t.classOrders[c] == 6) {
      genClass = static_cast<int>(c);
      break;
    }
  REQUIRE(genClass >= 0);
  std::set<std::string> seen;
  for (auto& row : t.chars) seen.insert(row[genClass].toString());
  CHECK(seen.size() == 6);
}

TEST_CASE("S3 table") {
  CharacterTable t = characterTable(s3());
  CHECK(degreesOf(t) == std::vector<long long>{1, 1, 2});
  checkBasics(t);
  // class order: identity, transpositions (order 2, size 3), 3-cycles (order 3, size 2)
  REQUIRE(t.classOrders == std::vector<long long>{1, 2, 3});
  REQUIRE(t.classSizes == std::vector<long long>{1, 3, 2});
  int r = uniqueRowOfDegree(t, 2);
  CHECK(t.chars[r][0] == CycloNum(2));
  CHECK(t.chars[r][1] == CycloNum(0));
  CHECK(t.chars[r][2] == CycloNum(-1));
}

TEST_CASE("Q8 degrees and two dimensional row") {
  CharacterTable t = characterTable(Group::dicyclic(2));
  CHECK(degreesOf(t) == std::vector<long long>{1, 1, 1, 1, 2});
  checkBasics(t);
  int r = uniqueRowOfDegree(t, 2);
  // center class (order 2, size 1) carries -2, the order-4 classes carry 0
  REQUIRE(t.classOrders == std::vector<long long>{1, 2, 4, 4, 4});
  CHECK(t.chars[r][1] == CycloNum(-2));
  CHECK(t.chars[r][2] == CycloNum(0));
  CHECK(t.chars[r][3] == CycloNum(0));
  CHECK(t.chars[r][4] == CycloNum(0));
}

TEST_CASE("A4 and S4 degrees") {
  CharacterTable ta = characterTable(a4());
  CHECK(degreesOf(ta) == std::vector<long long>{1, 1, 1, 3});
  checkBasics(ta);
  CharacterTable ts = characterTable(s4());
  CHECK(degreesOf(ts) == std::vector<long long>{1, 1, 2, 3, 3});
  checkBasics(ts);
}

TEST_CASE("Heisenberg group of order 27") {
  CharacterTable t = characterTable(heisenberg3());
  std::vector<long long> d = degreesOf(t);
  CHECK(std::count(d.begin(), d.end(), 1) == 9);
  CHECK(std::count(d.begin(), d.end(), 3) == 2);
  checkBasics(t);
  // degree-3 rows vanish off the center
  for (size_t i = 0; i < t.chars.size(); ++i) {
    if (t.degree(static_cast<int>(i)) != 3) continue;
    for (long long c = 0; c < t.numClasses(); ++c) {
      if (t.classSizes[c] == 1) continue;
      CHECK(t.chars[i][c] == CycloNum(0));
    }
  }
}

TEST_CASE("metacyclic and dicyclic tables") {
  CharacterTable tm = characterTable(Group::metacyclic(8, 2, 3));
  std::vector<long long> d = degreesOf(tm);
  CHECK(std::count(d.begin(), d.end(), 1) == 4);
  CHECK(std::count(d.begin(), d.end(), 2) == 3);
  checkBasics(tm);
  CharacterTable td = characterTable(Group::dicyclic(3));
  CHECK(degreesOf(td) == std::vector<long long>{1, 1, 1, 1, 2, 2});
  checkBasics(td);
}

TEST_CASE("SL(2,3) table") {
  Group g = sl23();
  REQUIRE(g.order() == 24);
  CharacterTable t = characterTable(g);
  CHECK(degreesOf(t) == std::vector<long long>{1, 1, 1, 2, 2, 2, 3});
  checkBasics(t);
}

TEST_CASE("abelian bypass agrees with the class algebra method") {
  for (auto make : {+[] { return Group::cyclic(6); }, +[] { return Group::cyclic(12); },
                    +[] { return Group::directProduct(Group::cyclic(2), Group::cyclic(4)); }}) {
    Group g = make();
    CharacterTable t = characterTable(g);
    std::vector<int> reps = t.classReps;
    std::vector<long long> sizes = t.classSizes;
    auto viaDixon = detail::dixonCharacters(t.group, reps, sizes);
    detail::sortCharRows(viaDixon);
    REQUIRE(viaDixon.size() == t.chars.size());
    for (size_t i = 0; i < viaDixon.size(); ++i) CHECK(viaDixon[i] == t.chars[i]);
  }
}

TEST_CASE("eigenvalue multisets") {
  CharacterTable t = characterTable(s3());
  int r = uniqueRowOfDegree(t, 2);
  RUMultiset id = eigenvalueMultiset(t, r, 0);
  REQUIRE(id.size() == 2);
  CHECK(id[0] == RootOfUnity(1, 0));
  CHECK(id[1] == RootOfUnity(1, 0));
  RUMultiset tr = eigenvalueMultiset(t, r, 1);
  REQUIRE(tr.size() == 2);
  CHECK(tr[0] == RootOfUnity(1, 0));
  CHECK(tr[1] == RootOfUnity(2, 1));
  RUMultiset cyc = eigenvalueMultiset(t, r, 2);
  REQUIRE(cyc.size() == 2);
  CHECK(cyc[0] == RootOfUnity(3, 1));
  CHECK(cyc[1] == RootOfUnity(3, 2));
}

TEST_CASE("eigenvalue multisets round trip") {
  std::vector<Group> groups;
  groups.push_back(s3());
  groups.push_back(Group::dicyclic(2));
  groups.push_back(a4());
  groups.push_back(heisenberg3());
  groups.push_back(Group::cyclic(12));
  for (auto& g : groups) {
    CharacterTable t = characterTable(g);
    for (size_t i = 0; i < t.chars.size(); ++i)
      for (long long c = 0; c < t.numClasses(); ++c) {
        RUMultiset ev = eigenvalueMultiset(t, static_cast<int>(i), static_cast<int>(c));
        REQUIRE(static_cast<long long>(ev.size()) == t.degree(static_cast<int>(i)));
        std::vector<std::pair<Rational, RootOfUnity>> terms;
        for (auto& r : ev) terms.push_back({Rational(1), r});
        CHECK(CycloNum::fromTerms(terms) == t.chars[i][c]);
      }
  }
}

TEST_CASE("degrees divide the central index") {
  std::vector<Group> groups;
  groups.push_back(s3());
  groups.push_back(s4());
  groups.push_back(a4());
  groups.push_back(Group::dicyclic(2));
  groups.push_back(Group::dicyclic(3));
  groups.push_back(Group::metacyclic(8, 2, 3));
  groups.push_back(heisenberg3());
  groups.push_back(sl23());
  for (auto& g : groups) {
    long long zi = g.order() / static_cast<long long>(g.center().size());
    CharacterTable t = characterTable(g);
    for (size_t i = 0; i < t.chars.size(); ++i) CHECK(zi % t.degree(static_cast<int>(i)) == 0);
  }
}

TEST_CASE("linear character count is the abelianization order") {
  std::vector<std::pair<Group, long long>> cases;
  cases.push_back({s4(), 2});
  cases.push_back({a4(), 3});
  cases.push_back({Group::dicyclic(2), 4});
  cases.push_back({heisenberg3(), 9});
  for (auto& [g, want] : cases) {
    CharacterTable t = characterTable(g);
    std::vector<long long> d = degreesOf(t);
    CHECK(std::count(d.begin(), d.end(), 1) == want);
  }
}
