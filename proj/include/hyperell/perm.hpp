#pragma once

// Permutations on 0-based points, stored as image vectors. Products compose
// left to right: (a*b) means apply a, then b, so permMul(a,b)[x] = b[a[x]].

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperell {

using Perm = std::vector<int>;

inline Perm permIdentity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool permIsIdentity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline Perm permMul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

inline Perm permInv(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
  return r;
}

inline long long permOrder(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  long long ord = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// "(0,1,2)(3,4)" with 0-based points; "()" or "" is the identity.
inline Perm permFromCycles(const std::string& text, int degree) {
  Perm p = permIdentity(degree);
  size_t pos = 0;
  auto skipWs = [&] {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skipWs();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::runtime_error("permFromCycles: expected '('");
    ++pos;
    std::vector<int> cyc;
    skipWs();
    while (pos < text.size() && text[pos] != ')') {
      size_t start = pos;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::runtime_error("permFromCycles: expected point");
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 0 || pt >= degree) throw std::runtime_error("permFromCycles: point out of range");
      cyc.push_back(pt);
      skipWs();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skipWs();
      }
    }
    if (pos >= text.size()) throw std::runtime_error("permFromCycles: unterminated cycle");
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (p[from] != from) throw std::runtime_error("permFromCycles: repeated point");
      p[from] = to;
    }
    skipWs();
  }
  return p;
}

inline std::string permToCycles(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) {
      seen[i] = true;
      continue;
    }
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) os << ",";
      os << j;
      first = false;
      seen[j] = true;
      j = p[j];
    }
    os << ")";
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace hyperell
