#pragma once

// Brute-force reference implementations. They work on small integer-coded
// relations and bitmask attribute sets and share no code with the library.

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "condep/dependency.hpp"
#include "condep/implication.hpp"
#include "condep/rational.hpp"
#include "condep/relation.hpp"

namespace oracle {

using Mask = std::uint32_t;
using IRow = std::vector<int>;
using IRel = std::set<IRow>;

inline bool has(Mask m, int i) { return (m >> i) & 1u; }

inline IRow cut(const IRow& row, Mask m) {
  IRow out;
  for (int i = 0; i < static_cast<int>(row.size()); ++i)
    if (has(m, i)) out.push_back(row[i]);
  return out;
}

// Rows here are full-width; attributes outside `keep` are zeroed.
inline IRel project(const IRel& r, Mask keep) {
  IRel out;
  for (auto row : r) {
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!has(keep, static_cast<int>(i))) row[i] = 0;
    out.insert(row);
  }
  return out;
}

// X ->> Y | Z on r[XYZ] by the swap-tuple definition.
inline bool emvd(const IRel& r, Mask x, Mask y, Mask z) {
  const IRel p = project(r, x | y | z);
  for (const auto& t1 : p) {
    for (const auto& t2 : p) {
      if (cut(t1, x) != cut(t2, x)) continue;
      IRow t3 = t1;
      for (std::size_t i = 0; i < t3.size(); ++i)
        if (has(z, static_cast<int>(i))) t3[i] = t2[i];
      if (!p.count(t3)) return false;
    }
  }
  return true;
}

// Tuple i of the full space over `width` attributes with `domain` values,
// most significant attribute first.
inline IRow decode(std::size_t index, int width, int domain) {
  IRow row(width);
  for (int i = width - 1; i >= 0; --i) {
    row[i] = static_cast<int>(index % domain);
    index /= domain;
  }
  return row;
}

inline IRel from_mask(std::uint64_t subset, int width, int domain) {
  IRel r;
  std::size_t space = 1;
  for (int i = 0; i < width; ++i) space *= domain;
  for (std::size_t i = 0; i < space; ++i)
    if ((subset >> i) & 1u) r.insert(decode(i, width, domain));
  return r;
}

inline std::vector<std::string> names(int width) {
  std::vector<std::string> out;
  for (int i = 0; i < width; ++i) out.push_back(std::string(1, static_cast<char>('A' + i)));
  return out;
}

inline condep::AttributeSet attrs(Mask m, int width) {
  std::vector<std::string> out;
  const auto all = names(width);
  for (int i = 0; i < width; ++i)
    if (has(m, i)) out.push_back(all[i]);
  return condep::AttributeSet(out);
}

inline condep::ClassicRelation to_classic(const IRel& r, int width) {
  std::vector<condep::Row> rows;
  for (const auto& row : r) {
    condep::Row out;
    for (int v : row) out.push_back(std::to_string(v));
    rows.push_back(out);
  }
  return condep::ClassicRelation(attrs((1u << width) - 1, width), rows);
}

inline condep::DependencyStatement statement(Mask x, Mask y, Mask z, int width,
                                             condep::DependencyKind kind) {
  return condep::DependencyStatement(attrs(x, width), attrs(y, width), attrs(z, width), kind);
}

// Every (X, Y, Z) of pairwise disjoint masks over `width` attributes with Y
// and Z nonempty.
struct Split {
  Mask x, y, z;
};

inline std::vector<Split> splits(int width, bool require_cover) {
  std::vector<Split> out;
  int total = 1;
  for (int i = 0; i < width; ++i) total *= 4;
  for (int code = 0; code < total; ++code) {
    Mask m[4] = {0, 0, 0, 0};
    int rest = code;
    for (int i = 0; i < width; ++i, rest /= 4) m[rest % 4] |= 1u << i;
    if (m[1] == 0 || m[2] == 0) continue;
    if (require_cover && m[3] != 0) continue;
    out.push_back({m[0], m[1], m[2]});
  }
  return out;
}

// Y ⫫ Z | X over the full product space: p(xyz)·p(x) = p(xy)·p(xz).
inline bool ci(const std::map<IRow, condep::Rational>& p, int width, int domain, Mask x, Mask y,
               Mask z) {
  std::map<IRow, condep::Rational> px, pxy, pxz, pxyz;
  for (const auto& [row, w] : p) {
    px[cut(row, x)] += w;
    pxy[cut(row, x | y)] += w;
    pxz[cut(row, x | z)] += w;
    pxyz[cut(row, x | y | z)] += w;
  }
  std::size_t space = 1;
  for (int i = 0; i < width; ++i) space *= domain;
  const auto get = [](const std::map<IRow, condep::Rational>& m, const IRow& k) {
    auto it = m.find(k);
    return it == m.end() ? condep::Rational(0) : it->second;
  };
  for (std::size_t i = 0; i < space; ++i) {
    const IRow row = decode(i, width, domain);
    if (get(pxyz, cut(row, x | y | z)) * get(px, cut(row, x)) !=
        get(pxy, cut(row, x | y)) * get(pxz, cut(row, x | z)))
      return false;
  }
  return true;
}

// Reachability in the implication graph built explicitly over every subset
// of the non-Z attributes.
struct ZStatement {
  Mask x, y;
};

inline bool cover(const std::vector<ZStatement>& sigma, Mask universe, Mask x, Mask y) {
  if (y == 0) return true;
  std::set<Mask> seen{x};
  std::queue<Mask> queue;
  queue.push(x);
  while (!queue.empty()) {
    const Mask w = queue.front();
    queue.pop();
    if (((x | y) & ~w) == 0) return true;
    std::vector<Mask> next;
    for (Mask v = w;; v = (v - 1) & w) {
      next.push_back(v);
      if (v == 0) break;
    }
    for (const auto& s : sigma)
      if (w == s.x) next.push_back(s.x | s.y);
    for (Mask v : next) {
      if ((v & ~universe) != 0) continue;
      if (seen.insert(v).second) queue.push(v);
    }
  }
  return false;
}

// Fixed point of symmetry, augmentation and projection over mask triples.
struct Triple {
  Mask x, y, z;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

inline std::set<Triple> closure(Triple start) {
  std::set<Triple> out{start};
  std::vector<Triple> work{start};
  const auto add = [&](Triple t) {
    if (out.insert(t).second) work.push_back(t);
  };
  while (!work.empty()) {
    const Triple t = work.back();
    work.pop_back();
    add({t.x, t.z, t.y});
    for (Mask w = t.z; w != 0; w = (w - 1) & t.z) add({t.x | w, t.y, t.z & ~w});
    for (Mask a = t.y;; a = (a - 1) & t.y) {
      for (Mask b = t.z;; b = (b - 1) & t.z) {
        add({t.x, a, b});
        if (b == 0) break;
      }
      if (a == 0) break;
    }
  }
  return out;
}

inline Triple to_triple(const condep::DependencyStatement& s,
                        const std::vector<std::string>& universe) {
  const auto mask = [&](const condep::AttributeSet& set) {
    Mask m = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (set.contains(universe[i])) m |= 1u << i;
    return m;
  };
  return {mask(s.lhs), mask(s.first), mask(s.second)};
}

} // namespace oracle
