#pragma once

// Hodge diamonds of the fourfolds attached to a group together with an
// accepted degree-4 representation candidate. Everything runs in exact
// cyclotomic arithmetic: each diamond entry is the multiplicity of the
// trivial character inside chi_{p,q} and has to come out as a nonnegative
// rational integer, otherwise something upstream is broken and we abort.

#include "chartab.hpp"
#include "repsearch.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperell {

// A class function, one value per conjugacy class in table order.
using Character = std::vector<CycloNum>;

inline Character conjCharacter(const Character& chi) {
  Character out;
  out.reserve(chi.size());
  for (const auto& v : chi) out.push_back(v.conj());
  return out;
}

// Character of the k-th exterior power via the Newton-style recursion
//   k * lam_k(g) = sum_{i=1..k} (-1)^{i-1} lam_{k-i}(g) chi(g^i),
// with lam_0 the trivial character. Power maps act through the class power
// table, so chi only needs to be a class function on this table.
inline Character exteriorPowerChar(const CharacterTable& t, const Character& chi, long long k) {
  if (chi.size() != static_cast<size_t>(t.numClasses()))
    throw std::invalid_argument("exteriorPowerChar: character length does not match the table");
  if (!chi[0].isRationalInteger())
    throw std::invalid_argument("exteriorPowerChar: degree entry is not an integer");
  long long d = toLongLong(asInteger(chi[0].asRational()));
  if (k < 0 || k > d) throw std::out_of_range("exteriorPowerChar: k out of range");

  long long nc = t.numClasses();
  std::vector<Character> lam(k + 1, Character(nc));
  for (long long c = 0; c < nc; ++c) lam[0][c] = CycloNum(1);
  for (long long j = 1; j <= k; ++j) {
    for (long long c = 0; c < nc; ++c) {
      CycloAccumulator acc(t.group.exponent());
      for (long long i = 1; i <= j; ++i) {
        int ci = t.group.classPower(static_cast<int>(c), i);
        acc.add(lam[j - i][c] * chi[ci], Rational(i % 2 == 1 ? 1 : -1));
      }
      lam[j][c] = acc.value().scaled(Rational(1, j));
    }
  }
  return lam[k];
}

struct HodgeDiamond {
  std::array<std::array<long long, 5>, 5> h{};  // h[p][q]

  long long at(long long p, long long q) const { return h[p][q]; }

  bool symmetric() const {
    for (int p = 0; p < 5; ++p)
      for (int q = 0; q < p; ++q)
        if (h[p][q] != h[q][p]) return false;
    return true;
  }

  long long eulerSum() const {
    long long s = 0;
    for (int p = 0; p < 5; ++p)
      for (int q = 0; q < 5; ++q) s += ((p + q) % 2 == 0 ? h[p][q] : -h[p][q]);
    return s;
  }

  bool operator==(const HodgeDiamond& o) const { return h == o.h; }
  bool operator!=(const HodgeDiamond& o) const { return !(*this == o); }

  // Triangular layout: one row per total weight p+q, entries with p
  // descending, rows centered under each other.
  std::string toTriangleText() const {
    std::vector<std::string> rows;
    size_t widest = 0;
    for (int k = 0; k <= 8; ++k) {
      std::string row;
      for (int p = std::min(k, 4); p >= std::max(0, k - 4); --p) {
        if (!row.empty()) row += ' ';
        row += std::to_string(h[p][k - p]);
      }
      widest = std::max(widest, row.size());
      rows.push_back(std::move(row));
    }
    std::string out;
    for (const auto& row : rows) {
      out += std::string((widest - row.size()) / 2, ' ');
      out += row;
      out += '\n';
    }
    return out;
  }

  std::string toFlatText() const {
    std::string out;
    for (int p = 0; p < 5; ++p)
      for (int q = 0; q < 5; ++q)
        out += "h(" + std::to_string(p) + "," + std::to_string(q) + ") = " +
               std::to_string(h[p][q]) + "\n";
    return out;
  }
};

// chi_{p,q} is the sum over all ways of splitting p into exterior degrees
// s_i across the summands and q into degrees t_i on the conjugate side, of
// the product of the corresponding exterior power characters. The diamond
// entry is its inner product with the trivial character.
inline HodgeDiamond hodgeDiamond(const CharacterTable& t, const RepCandidate& rep) {
  if (rep.totalDegree != 4)
    throw std::invalid_argument("hodgeDiamond: candidate must have total degree 4");
  long long nc = t.numClasses();

  // Exterior powers of every summand and of their conjugates, up to the
  // summand's own degree.
  std::vector<std::vector<Character>> ext, extBar;
  for (int idx : rep.parts) {
    long long d = t.degree(idx);
    std::vector<Character> e, eb;
    for (long long s = 0; s <= d; ++s) {
      e.push_back(exteriorPowerChar(t, t.chars[idx], s));
      eb.push_back(conjCharacter(e.back()));
    }
    ext.push_back(std::move(e));
    extBar.push_back(std::move(eb));
  }

  Character trivial(nc, CycloNum(1));
  HodgeDiamond out;
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      Character total(nc, CycloNum(0));
      std::function<void(size_t, int, int, const Character&)> rec =
          [&](size_t i, int sLeft, int tLeft, const Character& prod) {
            if (i == ext.size()) {
              if (sLeft == 0 && tLeft == 0)
                for (long long c = 0; c < nc; ++c) total[c] = total[c] + prod[c];
              return;
            }
            long long d = static_cast<long long>(ext[i].size()) - 1;
            for (long long s = 0; s <= std::min<long long>(d, sLeft); ++s)
              for (long long u = 0; u <= std::min<long long>(d, tLeft); ++u) {
                Character next(nc);
                for (long long c = 0; c < nc; ++c)
                  next[c] = prod[c] * ext[i][s][c] * extBar[i][u][c];
                rec(i + 1, sLeft - static_cast<int>(s), tLeft - static_cast<int>(u), next);
              }
          };
      rec(0, p, q, trivial);

      CycloNum ip = t.innerProduct(total, trivial);
      if (!ip.isRationalInteger())
        throw std::logic_error("hodgeDiamond: trivial multiplicity is not an integer");
      long long v = toLongLong(asInteger(ip.asRational()));
      if (v < 0) throw std::logic_error("hodgeDiamond: trivial multiplicity is negative");
      out.h[p][q] = v;
    }
  }
  return out;
}

// No group in scope admits an irreducible of degree 4, which is what makes
// b_2 > 0 automatic; degree lists provide a cheap certificate.
inline bool b2AndIrreducibilityCheck(const CharacterTable& t) {
  for (size_t i = 0; i < t.chars.size(); ++i)
    if (t.degree(static_cast<int>(i)) == 4) return false;
  return true;
}

}  // namespace hyperell
