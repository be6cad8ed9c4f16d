#include <catch2/catch_amalgamated.hpp>

#include <hyperell/oracles.hpp>
#include <hyperell/repsearch.hpp>

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
  return Group::semidirectProduct(q8, Group::cyclic(3), {{b, q8.mul(a, b)}}, "SL(2,3)");
}

Group power(long long d, long long k) {
  Group g = Group::cyclic(d);
  for (long long i = 1; i < k; ++i) g = Group::directProduct(g, Group::cyclic(d));
  return g;
}

FilterConfig smallConfig() {
  FilterConfig c;
  c.sylow2List = {{"C1", Group::cyclic(1)},
                  {"C4xC8", Group::directProduct(Group::cyclic(4), Group::cyclic(8))},
                  {"C2xC2xC4", Group::directProduct(power(2, 2), Group::cyclic(4))}};
  c.sylow3List = {{"C1", Group::cyclic(1)},
                  {"C3", Group::cyclic(3)},
                  {"C3xC3", power(3, 2)},
                  {"Heis3", heisenberg3()}};
  c.forbiddenList = {{"S4", s4()}};
  c.abelianList = {{"C4", Group::cyclic(4)},
                   {"C2xC30", Group::directProduct(Group::cyclic(2), Group::cyclic(30))},
                   {"C2xC6xC12", Group::directProduct(Group::cyclic(2),
                                                      Group::directProduct(Group::cyclic(6),
                                                                           Group::cyclic(12)))}};
  return c;
}

}  // namespace

TEST_CASE("candidate enumeration counts and invariants") {
  CharacterTable c2 = characterTable(Group::cyclic(2));
  auto both = candidateReps(c2, 4);
  CHECK(both.size() == 5);

  CharacterTable q8 = characterTable(Group::dicyclic(2));
  auto cq = candidateReps(q8, 4);
  CHECK(cq.size() == 46);  // 35 four-linear + 10 deg2+two-linear + deg2+deg2
  bool sawDouble2 = false;
  int mixed = 0;
  for (const auto& cand : cq) {
    long long total = 0;
    for (int i : cand.parts) total += q8.degree(i);
    CHECK(total == 4);
    CHECK(std::is_sorted(cand.parts.begin(), cand.parts.end()));
    int deg2 = 0;
    for (int i : cand.parts)
      if (q8.degree(i) == 2) ++deg2;
    if (deg2 == 2) sawDouble2 = true;
    if (deg2 == 1) ++mixed;
  }
  CHECK(sawDouble2);
  CHECK(mixed == 10);

  CharacterTable ts3 = characterTable(s3());
  CHECK(candidateReps(ts3, 4).size() == 9);

  auto again = candidateReps(q8, 4);
  CHECK(again.size() == cq.size());
  for (size_t i = 0; i < cq.size(); ++i) CHECK(again[i].parts == cq[i].parts);

  CHECK_THROWS(candidateReps(c2, 0));
}

TEST_CASE("rep filter on the pinned examples") {
  CHECK(filterRepExists(Group::cyclic(2)).verdict == Verdict::pass);
  CHECK(filterRepExists(Group::cyclic(16)).verdict == Verdict::fail);

  FilterResult c7c7 = filterRepExists(power(7, 2));
  CHECK(c7c7.verdict == Verdict::fail);
  CHECK(c7c7.witness.find("270725") != std::string::npos);  // C(52,4) candidates

  FilterResult q8 = filterRepExists(Group::dicyclic(2));
  CHECK(q8.verdict == Verdict::pass);
  CHECK(q8.witness.find("deg 2") != std::string::npos);

  FilterResult heis = filterRepExists(heisenberg3());
  CHECK(heis.verdict == Verdict::pass);
  CHECK(heis.witness.find("deg 3") != std::string::npos);
}

TEST_CASE("element order filter") {
  CHECK(filterElementOrders(Group::cyclic(30), FilterConfig{}.allowedOrders).verdict ==
        Verdict::pass);
  FilterResult r = filterElementOrders(Group::cyclic(16), FilterConfig{}.allowedOrders);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.witness.find("16") != std::string::npos);
  CHECK(filterElementOrders(Group::cyclic(11), FilterConfig{}.allowedOrders).verdict ==
        Verdict::fail);
}

TEST_CASE("allowed element orders agree with the eigenvalue-side bound") {
  std::set<long long> fromConfigs = FilterConfig{}.allowedOrders;
  CHECK(fromConfigs == elementOrderSet(4));
}

TEST_CASE("conjugate-inverse filter") {
  CHECK(filterConjInverse(Group::cyclic(16)).verdict == Verdict::pass);
  CHECK(filterConjInverse(s3()).verdict == Verdict::pass);
  FilterResult d16 = filterConjInverse(Group::dihedral(8));
  CHECK(d16.verdict == Verdict::fail);
  CHECK(d16.witness.find("order 8") != std::string::npos);
}

TEST_CASE("center filter") {
  CHECK(filterCenter(Group::cyclic(16)).verdict == Verdict::pass);
  CHECK(filterCenter(Group::dicyclic(2)).verdict == Verdict::pass);
  FilterResult bad = filterCenter(Group::directProduct(Group::dihedral(4), Group::cyclic(8)));
  CHECK(bad.verdict == Verdict::fail);
  CHECK(bad.witness.find("2,8") != std::string::npos);
}

TEST_CASE("prime structure filter") {
  CHECK(filterPrimeStructure(Group::cyclic(30)).verdict == Verdict::pass);
  CHECK(filterPrimeStructure(Group::cyclic(35)).verdict == Verdict::pass);
  CHECK(filterPrimeStructure(Group::cyclic(11)).verdict == Verdict::fail);
  CHECK(filterPrimeStructure(Group::cyclic(25)).verdict == Verdict::fail);
  CHECK(filterPrimeStructure(power(7, 2)).verdict == Verdict::fail);
}

TEST_CASE("sylow filter") {
  FilterConfig config = smallConfig();
  Group c4c8 = Group::directProduct(Group::cyclic(4), Group::cyclic(8));
  CHECK(filterSylow(c4c8, config).verdict == Verdict::pass);

  Group q8c2 = Group::directProduct(Group::dicyclic(2), Group::cyclic(2));
  FilterResult r = filterSylow(q8c2, config);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.witness.find("Sylow-2") != std::string::npos);

  CHECK(filterSylow(heisenberg3(), config).verdict == Verdict::pass);

  FilterConfig empty;
  CHECK_THROWS(filterSylow(c4c8, empty));
}

TEST_CASE("forbidden subgroup filter") {
  FilterConfig config = smallConfig();
  FilterResult self = filterForbiddenSubgroups(s4(), config);
  CHECK(self.verdict == Verdict::fail);
  CHECK(self.witness.find("itself") != std::string::npos);

  CHECK(filterForbiddenSubgroups(Group::cyclic(30), config).verdict == Verdict::pass);

  // proper containment: A4 sits inside S4
  FilterConfig viaA4;
  viaA4.forbiddenList = {{"A4", a4()}};
  FilterResult proper = filterForbiddenSubgroups(s4(), viaA4);
  CHECK(proper.verdict == Verdict::fail);
  CHECK(proper.witness.find("order 12") != std::string::npos);

  Group s3v = Group::directProduct(s3(), power(2, 2), "S3xC2xC2");
  FilterConfig viaS3V;
  viaS3V.forbiddenList = {{"S3xC2xC2", s3v}};
  CHECK(filterForbiddenSubgroups(s3v, viaS3V).verdict == Verdict::fail);
  Group bigger = Group::directProduct(s3v, Group::cyclic(2));
  FilterResult inside = filterForbiddenSubgroups(bigger, viaS3V);
  CHECK(inside.verdict == Verdict::fail);
  CHECK(inside.witness.find("order 24") != std::string::npos);
}

TEST_CASE("metacyclic recognition") {
  CHECK(isMetacyclic(Group::cyclic(12)));
  CHECK(isMetacyclic(power(2, 2)));
  CHECK(isMetacyclic(s3()));
  CHECK(isMetacyclic(Group::dicyclic(2)));
  CHECK(isMetacyclic(Group::dihedral(6)));
  CHECK_FALSE(isMetacyclic(a4()));
  CHECK_FALSE(isMetacyclic(heisenberg3()));
  CHECK_FALSE(isMetacyclic(power(2, 3)));
}

TEST_CASE("metacyclic-in-derived filter") {
  FilterResult sl = filterMetacyclicInDerived(sl23());
  CHECK(sl.verdict == Verdict::fail);
  CHECK(sl.witness.find("order 8") != std::string::npos);
  CHECK(filterMetacyclicInDerived(Group::cyclic(12)).verdict == Verdict::pass);
  CHECK(filterMetacyclicInDerived(s4()).verdict == Verdict::pass);
}

TEST_CASE("abelian classification filter") {
  FilterConfig config = smallConfig();
  CHECK(filterAbelianClassified(Group::cyclic(4), config).verdict == Verdict::pass);
  Group c2c30 = Group::directProduct(Group::cyclic(2), Group::cyclic(30));
  CHECK(filterAbelianClassified(c2c30, config).verdict == Verdict::pass);
  FilterResult r = filterAbelianClassified(
      Group::directProduct(Group::cyclic(2), Group::cyclic(14)), config);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.witness.find("2,14") != std::string::npos);
  CHECK(filterAbelianClassified(s3(), config).verdict == Verdict::skipped);
}

TEST_CASE("full battery on the pinned groups") {
  FilterConfig config = smallConfig();

  FilterReport heis = runAllFilters(heisenberg3(), config);
  CHECK(heis.overall);
  for (const auto& o : heis.outcomes) CHECK(o.verdict != Verdict::fail);
  CHECK(heis.toText().find("PASS") != std::string::npos);

  FilterReport g934 = runAllFilters(Group::metacyclic(9, 3, 4), config);
  CHECK_FALSE(g934.overall);
  REQUIRE(!g934.outcomes.empty());
  CHECK(g934.outcomes.back().filter == "sylow");
  CHECK(g934.outcomes.back().verdict == Verdict::fail);

  FilterConfig noShort = config;
  noShort.shortCircuit = false;
  FilterReport full = runAllFilters(Group::metacyclic(9, 3, 4), noShort);
  CHECK_FALSE(full.overall);
  CHECK(full.outcomes.size() == 9);

  Group big = Group::directProduct(Group::cyclic(2),
                                   Group::directProduct(Group::cyclic(6), Group::cyclic(12)),
                                   "C2xC6xC12");
  FilterReport bigReport = runAllFilters(big, config);
  CHECK(bigReport.overall);
}

TEST_CASE("rep filter is isomorphism invariant") {
  Group d4other = Group::fromGenerators(
      4, {permFromCycles("(0,1,2,3)", 4), permFromCycles("(0,2)", 4)}, "D4'");
  Group sl = sl23();
  Group q8other = sl.subgroupAsGroup(sl.sylowSubgroup(2), "Q8'");
  Group c18 = Group::cyclic(18);
  int square = c18.power(c18.generatorIndices()[0], 2);
  Group c9other = c18.subgroupAsGroup(c18.closureOf({square}), "C9'");
  Group a4other = s4().subgroupAsGroup(s4().derivedSubgroup(), "A4'");
  Group v4other = Group::fromGenerators(
      4, {permFromCycles("(0,1)", 4), permFromCycles("(2,3)", 4)}, "V4'");
  Group c3c3 = Group::directProduct(Group::cyclic(3), Group::cyclic(3));
  int hx = c3c3.generatorIndices()[0];
  int hy = c3c3.generatorIndices()[1];
  Group heisOther =
      Group::semidirectProduct(c3c3, Group::cyclic(3), {{hx, c3c3.mul(hx, hy)}}, "Heis3'");

  std::vector<std::pair<Group, Group>> pairs;
  pairs.emplace_back(Group::cyclic(6), Group::directProduct(Group::cyclic(2), Group::cyclic(3)));
  pairs.emplace_back(Group::cyclic(12), Group::directProduct(Group::cyclic(3), Group::cyclic(4)));
  pairs.emplace_back(s3(), Group::metacyclic(3, 2, 2));
  pairs.emplace_back(Group::dihedral(4), d4other);
  pairs.emplace_back(Group::dicyclic(2), q8other);
  pairs.emplace_back(Group::cyclic(9), c9other);
  pairs.emplace_back(a4(), a4other);
  pairs.emplace_back(power(2, 2), v4other);
  pairs.emplace_back(heisenberg3(), heisOther);
  pairs.emplace_back(Group::directProduct(s3(), Group::cyclic(2)), Group::dihedral(6));

  REQUIRE(pairs.size() == 10);
  for (auto& [a, b] : pairs) {
    REQUIRE(a.isIsomorphicTo(b));
    CHECK(filterRepExists(a).verdict == filterRepExists(b).verdict);
  }
}

TEST_CASE("abelian rep filter agrees with the diagonal-embedding oracle") {
  std::vector<std::pair<long long, long long>> shapes = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 3}, {4, 1},
      {4, 2}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 1}, {8, 1},  {9, 1}, {10, 1},
      {12, 1}, {14, 1}, {15, 1}, {16, 1}, {18, 1}, {20, 1}, {24, 1}, {30, 1},
      {36, 1}, {48, 1}};
  for (auto [d, k] : shapes) {
    bool viaChars = filterRepExists(power(d, k)).verdict == Verdict::pass;
    bool viaOracle = !enumerateValidEmbeddings(4, d, k, true, true).empty();
    INFO("C_" << d << "^" << k);
    CHECK(viaChars == viaOracle);
  }
}
