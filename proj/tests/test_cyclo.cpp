#include <catch2/catch_amalgamated.hpp>

#include <hyperell/cyclo.hpp>

#include <array>
#include <functional>
#include <random>

using namespace hyperell;

TEST_CASE("euler phi and divisors") {
  CHECK(eulerPhi(1) == 1);
  CHECK(eulerPhi(5) == 4);
  CHECK(eulerPhi(18) == 6);
  CHECK(eulerPhi(24) == 8);
  CHECK(divisorsOf(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomicPoly(1).c == std::vector<Int>{-1, 1});
  CHECK(cyclotomicPoly(4).c == std::vector<Int>{1, 0, 1});
  CHECK(cyclotomicPoly(5).c == std::vector<Int>{1, 1, 1, 1, 1});
  CHECK(cyclotomicPoly(6).c == std::vector<Int>{1, -1, 1});

  // product over divisors rebuilds X^n - 1
  for (long long n = 1; n <= 64; ++n) {
    IntPoly prod;
    prod.c = {Int(1)};
    for (long long d : divisorsOf(n)) prod = prod.mul(cyclotomicPoly(d));
    CHECK(prod == IntPoly::xPowMinusOne(n));
  }
}

TEST_CASE("root of unity reduced form") {
  CHECK(RootOfUnity(6, 2) == RootOfUnity(3, 1));
  CHECK(RootOfUnity(4, 2) == RootOfUnity(2, 1));
  CHECK(RootOfUnity(5, 0).isIdentity());
  CHECK(RootOfUnity(5, 7) == RootOfUnity(5, 2));
  CHECK((RootOfUnity(4, 1) * RootOfUnity(6, 1)).order == 12);
  CHECK(RootOfUnity(7, 2).conj() == RootOfUnity(7, 5));
  CHECK(RootOfUnity(8, 3).pow(2) == RootOfUnity(4, 3));
}

TEST_CASE("cyclotomic arithmetic basics") {
  CHECK((E(3) + E(3).pow(2) + CycloNum(1)).isZero());
  CHECK(E(4) * E(4) == CycloNum(-1));
  CHECK(E(7).pow(2).conj() == E(7).pow(5));
  CHECK(E(5) + E(5).pow(2) + E(5).pow(3) + E(5).pow(4) == CycloNum(-1));
  CHECK(E(8) * E(8).pow(7) == CycloNum(1));
  CHECK(E(12).pow(3) == E(4));
  CHECK(E(12).pow(3).conductor() == 4);
  CHECK(E(6) == CycloNum(1) + E(3));  // conductor 3 representation
  CHECK(E(6).conductor() == 3);
  CHECK(CycloNum::fromRoot(RootOfUnity(2, 1)) == CycloNum(-1));
}

TEST_CASE("galois action and conjugation") {
  CHECK(E(12).galoisApply(5) == E(12).pow(5));
  CHECK(E(12).galoisApply(5).conductor() == 12);
  CHECK_THROWS(E(12).galoisApply(3));
  CycloNum x = E(5) + E(5).pow(4);
  CHECK(x.conj() == x);  // real value
  CHECK(x.conductor() == 5);
}

TEST_CASE("field trace") {
  CHECK(fieldTrace(CycloNum(1), 3) == Rational(2));
  CHECK(fieldTrace(E(3)) == Rational(-1));
  CHECK(fieldTrace(E(8)) == Rational(0));
  CHECK(fieldTrace(E(3), 12) == Rational(-2));
  CHECK(fieldTrace(E(5) + E(5).pow(4)) == Rational(-1));
  CHECK(fieldTrace(CycloNum(Rational(3, 2))) == Rational(3, 2));
}

TEST_CASE("division") {
  CycloNum x = E(5) + CycloNum(2);
  CHECK(x * x.inverse() == CycloNum(1));
  CHECK((E(8) / E(8)) == CycloNum(1));
  CHECK_THROWS_AS(CycloNum(1) / CycloNum(0), std::domain_error);
  CHECK_THROWS_AS(CycloNum(0).inverse(), std::domain_error);
}

TEST_CASE("text form round trips") {
  CHECK(CycloNum(0).toString() == "0");
  CHECK(CycloNum(Rational(-3, 2)).toString() == "-3/2");
  CHECK(E(4).toString() == "1*E(4)^1");
  CHECK(CycloNum::parse("1 + 1*E(3)^1") == CycloNum(1) + E(3));
  CHECK(CycloNum::parse("E(5)^2") == E(5).pow(2));
  CHECK(CycloNum::parse("-1 - 1*E(3)^1") == E(3).pow(2));
  CHECK(E(3).pow(2).toString() == "-1 - 1*E(3)^1");

  std::mt19937 rng(20240517);
  const std::vector<long long> conductors{8, 9, 12, 15, 16, 20, 24, 27, 28, 33, 35, 36};
  for (int iter = 0; iter < 200; ++iter) {
    long long target = conductors[rng() % conductors.size()];
    auto divs = divisorsOf(target);
    std::vector<std::pair<Rational, RootOfUnity>> terms;
    int nt = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < nt; ++t) {
      long long d = divs[rng() % divs.size()];
      long long k = rng() % d;
      Rational q(static_cast<long long>(rng() % 19) - 9, 1 + static_cast<long long>(rng() % 6));
      terms.push_back({q, RootOfUnity(d, k)});
    }
    CycloNum x = CycloNum::fromTerms(terms);
    CHECK(CycloNum::parse(x.toString()) == x);
  }
}

// Random expression trees over a fixed pool of roots, evaluated twice with
// different association orders, must agree structurally.
TEST_CASE("canonical form is order independent") {
  std::mt19937 rng(987123);
  const std::vector<long long> conductors{8, 9, 12, 15, 16, 20, 24, 27, 28, 33, 35, 36};
  for (int iter = 0; iter < 120; ++iter) {
    long long target = conductors[rng() % conductors.size()];
    auto divs = divisorsOf(target);
    std::vector<CycloNum> pool;
    int np = 3 + static_cast<int>(rng() % 4);
    for (int t = 0; t < np; ++t) {
      long long d = divs[rng() % divs.size()];
      pool.push_back(E(d).pow(rng() % d).scaled(
          Rational(static_cast<long long>(rng() % 7) - 3, 1 + static_cast<long long>(rng() % 4))));
    }
    CycloNum sumA(0), prodA(1);
    for (auto& x : pool) {
      sumA = sumA + x;
      prodA = prodA * x;
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    CycloNum sumB(0), prodB(1);
    for (auto& x : pool) {
      sumB = sumB + x;
      prodB = prodB * x;
    }
    CHECK(sumA == sumB);
    CHECK(prodA == prodB);
    // distributivity spot check
    CycloNum lhs = (pool[0] + pool[1]) * pool[2];
    CycloNum rhs = pool[0] * pool[2] + pool[1] * pool[2];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("accumulator matches naive summation") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 50; ++iter) {
    CycloAccumulator acc(24);
    CycloNum naive(0);
    for (int t = 0; t < 10; ++t) {
      long long d = divisorsOf(24)[rng() % 8];
      CycloNum x = E(d).pow(rng() % d);
      Rational s(static_cast<long long>(rng() % 9) - 4);
      acc.add(x, s);
      naive = naive + x.scaled(s);
    }
    CHECK(acc.value() == naive);
  }
}

TEST_CASE("nu profile fixtures") {
  {
    RUMultiset s{RootOfUnity(1, 0), RootOfUnity(1, 0)};
    auto p = nuProfile(s);
    REQUIRE(p.integral);
    CHECK(p.nu == std::map<long long, long long>{{1, 4}});
  }
  {
    RUMultiset s{RootOfUnity(5, 1), RootOfUnity(5, 4)};
    auto p = nuProfile(s);
    CHECK_FALSE(p.integral);
    CHECK(p.failOrder == 5);
  }
  {
    RUMultiset s{RootOfUnity(1, 0), RootOfUnity(7, 1), RootOfUnity(7, 2), RootOfUnity(7, 4)};
    auto p = nuProfile(s);
    REQUIRE(p.integral);
    CHECK(p.nu == std::map<long long, long long>{{1, 2}, {7, 1}});
  }
  {
    // i and -i pair up into nu_4 = 1
    RUMultiset s{RootOfUnity(4, 1)};
    auto p = nuProfile(s);
    REQUIRE(p.integral);
    CHECK(p.nu == std::map<long long, long long>{{4, 1}});
  }
}

// Independent check of the integrality criterion: expand the characteristic
// polynomial of S + conj(S) over Z[zeta_24] and test that all coefficients are
// rational integers. Exhaustive over multisets of size <= 4 with orders
// dividing 24.
namespace {

struct Z24 {
  std::array<long long, 24> v{};
  bool isRationalInt(const std::vector<std::vector<long long>>& rows) const {
    std::array<long long, 8> red{};
    for (int i = 0; i < 24; ++i) {
      if (v[i] == 0) continue;
      if (i < 8) {
        red[i] += v[i];
      } else {
        for (int j = 0; j < 8; ++j) red[j] += v[i] * rows[i][j];
      }
    }
    for (int j = 1; j < 8; ++j)
      if (red[j] != 0) return false;
    return true;
  }
};

}  // namespace

TEST_CASE("integrality criterion equals brute force expansion") {
  // X^i mod Phi_24 rows as machine integers
  std::vector<std::vector<long long>> rows(24, std::vector<long long>(8, 0));
  const IntPoly& phi24 = cyclotomicPoly(24);
  REQUIRE(phi24.degree() == 8);
  {
    std::vector<long long> cur(8, 0);
    cur[0] = 1;
    for (int i = 0; i < 24; ++i) {
      rows[i] = cur;
      long long carry = cur[7];
      for (int j = 7; j >= 1; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      if (carry != 0)
        for (int j = 0; j < 8; ++j) cur[j] -= carry * toLongLong(phi24.c[j]);
    }
  }

  long long checked = 0, integralCount = 0;
  // multisets as nondecreasing exponent tuples over 0..23
  std::vector<int> stack;
  auto runOne = [&](const std::vector<int>& exps) {
    RUMultiset s;
    for (int e : exps) s.push_back(RootOfUnity(24, e));
    auto prof = nuProfile(s);

    // expand prod (X - zeta^e) over S and conj(S)
    std::vector<int> all;
    for (int e : exps) {
      all.push_back(e % 24);
      all.push_back((24 - e) % 24);
    }
    std::vector<Z24> poly(1);
    poly[0].v[0] = 1;
    for (int e : all) {
      std::vector<Z24> next(poly.size() + 1);
      for (size_t i = 0; i < poly.size(); ++i) {
        for (int t = 0; t < 24; ++t) {
          if (poly[i].v[t] == 0) continue;
          next[i + 1].v[t] += poly[i].v[t];
          next[i].v[(t + e) % 24] -= poly[i].v[t];
        }
      }
      poly = std::move(next);
    }
    bool allInt = true;
    for (auto& coeff : poly)
      if (!coeff.isRationalInt(rows)) {
        allInt = false;
        break;
      }
    CHECK(prof.integral == allInt);
    if (prof.integral) {
      // degree identity: sum phi(k) nu_k == 2|S|
      long long tot = 0;
      for (auto& [k, nu] : prof.nu) tot += eulerPhi(k) * nu;
      CHECK(tot == 2 * static_cast<long long>(exps.size()));
      ++integralCount;
    }
    ++checked;
  };

  std::vector<int> exps;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (!exps.empty()) runOne(exps);
    if (remaining == 0) return;
    for (int e = start; e < 24; ++e) {
      exps.push_back(e);
      rec(e, remaining - 1);
      exps.pop_back();
    }
  };
  rec(0, 4);
  CHECK(checked == 20474);
  CHECK(integralCount > 0);
}
