#pragma once

// Rational central idempotents of the group algebra and the equivariant
// isogeny profile of a degree-4 representation candidate: one torus factor
// per Galois orbit of irreducibles that occur, with its dimension, plus the
// torsion exponent bounding the kernel of the addition map.

#include "chartab.hpp"
#include "repsearch.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperell {

struct GroupAlgebraElement {
  std::vector<Rational> coefficients;  // one per group element index

  bool operator==(const GroupAlgebraElement& o) const { return coefficients == o.coefficients; }
  bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }
};

inline GroupAlgebraElement convolve(const Group& g, const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  GroupAlgebraElement c;
  c.coefficients.assign(g.order(), Rational(0));
  for (int x = 0; x < g.order(); ++x) {
    if (a.coefficients[x] == 0) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (b.coefficients[y] == 0) continue;
      c.coefficients[g.mul(x, y)] += a.coefficients[x] * b.coefficients[y];
    }
  }
  return c;
}

// Commutation with every generator delta; enough for centrality since the
// generators span the algebra multiplicatively.
inline bool isCentral(const Group& g, const GroupAlgebraElement& a) {
  for (int gen : g.generatorIndices()) {
    GroupAlgebraElement delta;
    delta.coefficients.assign(g.order(), Rational(0));
    delta.coefficients[gen] = Rational(1);
    if (convolve(g, delta, a) != convolve(g, a, delta)) return false;
  }
  return true;
}

// Galois orbit of an irreducible under the power maps sigma_k: chi(g) ->
// chi(g^k), k coprime to the exponent. Returned sorted.
inline std::vector<int> galoisOrbitOf(const CharacterTable& t, int charIdx) {
  long long n = t.group.exponent();
  long long nc = t.numClasses();
  std::set<int> orbit;
  for (long long k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    std::vector<CycloNum> moved(nc);
    for (long long c = 0; c < nc; ++c) moved[c] = t.chars[charIdx][t.group.classPower(static_cast<int>(c), k)];
    bool found = false;
    for (size_t j = 0; j < t.chars.size() && !found; ++j) {
      if (t.chars[j] == moved) {
        orbit.insert(static_cast<int>(j));
        found = true;
      }
    }
    if (!found) throw std::logic_error("galoisOrbitOf: conjugate row missing from the table");
  }
  return std::vector<int>(orbit.begin(), orbit.end());
}

// e = (chi(1)/|G|) sum_g Tr_{K/Q}(chi(g)) g, where K is the field generated
// by the values of chi. The trace is the unit sum divided by the stabilizer
// order, so the whole Galois orbit of chi produces the same element.
inline GroupAlgebraElement rationalIdempotent(const CharacterTable& t, int charIdx) {
  const Group& g = t.group;
  long long n = g.exponent();
  long long nc = t.numClasses();

  std::vector<long long> units;
  for (long long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) units.push_back(k);

  long long stab = 0;
  for (long long k : units) {
    bool fixes = true;
    for (long long c = 0; c < nc && fixes; ++c)
      fixes = t.chars[charIdx][g.classPower(static_cast<int>(c), k)] == t.chars[charIdx][c];
    if (fixes) ++stab;
  }

  std::vector<Rational> trace(nc);
  for (long long c = 0; c < nc; ++c) {
    CycloAccumulator acc(n);
    for (long long k : units)
      acc.add(t.chars[charIdx][g.classPower(static_cast<int>(c), k)], Rational(1));
    trace[c] = acc.value().asRational() / stab;
  }

  Rational scale(t.degree(charIdx), g.order());
  GroupAlgebraElement e;
  e.coefficients.resize(g.order());
  for (int x = 0; x < g.order(); ++x) e.coefficients[x] = scale * trace[g.classOf(x)];
  return e;
}

// Dimension of the image of the orbit idempotent in the candidate: summand
// multiplicities times degrees across the orbit.
inline long long idempotentRank(const CharacterTable& t, const RepCandidate& rep, int charIdx) {
  long long rank = 0;
  for (int j : galoisOrbitOf(t, charIdx)) {
    long long mult = std::count(rep.parts.begin(), rep.parts.end(), j);
    rank += mult * t.degree(j);
  }
  return rank;
}

struct IsogenyFactor {
  std::vector<int> galoisOrbit;  // sorted irreducible indices
  long long dimension = 0;
};

struct IsogenyProfile {
  std::vector<IsogenyFactor> factors;
  long long torsionExponent = 1;
};

inline IsogenyProfile isogenyProfile(const CharacterTable& t, const RepCandidate& rep) {
  if (rep.totalDegree != 4)
    throw std::invalid_argument("isogenyProfile: candidate must have total degree 4");
  IsogenyProfile p;
  p.torsionExponent = t.group.order();
  std::set<int> seen;
  for (int idx : rep.parts) {
    if (seen.count(idx)) continue;
    IsogenyFactor f;
    f.galoisOrbit = galoisOrbitOf(t, idx);
    f.dimension = idempotentRank(t, rep, idx);
    for (int j : f.galoisOrbit) seen.insert(j);
    p.factors.push_back(std::move(f));
  }
  std::sort(p.factors.begin(), p.factors.end(), [](const IsogenyFactor& a, const IsogenyFactor& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.galoisOrbit.front() < b.galoisOrbit.front();
  });
  return p;
}

inline std::string profileText(const IsogenyProfile& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.factors.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p.factors[i].dimension);
  }
  out += "), torsion <= " + std::to_string(p.torsionExponent);
  return out;
}

// Renders an algebra element as a rational combination of element words,
// e.g. "1/2*1 - 1/2*a^2". Words come from BFS over the generators, so they
// are shortest products of the supplied symbols.
inline std::string idempotentText(const Group& g, const GroupAlgebraElement& e,
                                  const std::vector<std::string>& genNames) {
  auto gens = g.generatorIndices();
  if (genNames.size() != gens.size())
    throw std::invalid_argument("idempotentText: one name per generator required");

  // shortest word per element, as generator index sequences
  std::vector<std::vector<int>> word(g.order());
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (size_t i = 0; i < gens.size(); ++i) {
        int y = g.mul(x, gens[i]);
        if (seen[y]) continue;
        seen[y] = true;
        word[y] = word[x];
        word[y].push_back(static_cast<int>(i));
        next.push_back(y);
      }
    }
    frontier = std::move(next);
  }

  auto wordText = [&](int x) {
    if (word[x].empty()) return std::string("1");
    std::string out;
    size_t i = 0;
    while (i < word[x].size()) {
      size_t j = i;
      while (j < word[x].size() && word[x][j] == word[x][i]) ++j;
      if (!out.empty()) out += "*";
      out += genNames[word[x][i]];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  };

  std::string out;
  for (int x = 0; x < g.order(); ++x) {
    const Rational& c = e.coefficients[x];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mag = ratToString(c < 0 ? Rational(-c) : c);
    if (word[x].empty())
      out += mag;
    else if (mag == "1")
      out += wordText(x);
    else
      out += mag + "*" + wordText(x);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace hyperell
