#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "segcalc/context.hpp"

namespace segcalc {

/// A vertex of the cyclic quiver: a residue on a cuspidal line.
struct Letter {
  LineId line = 0;
  std::int64_t residue = 0;

  auto operator<=>(const Letter&) const = default;
};

/// Words feed the generic-extension monoid; the empty word is its identity.
using Word = std::vector<Letter>;

inline Letter normalize(const Catalog& cat, Letter x) {
  x.residue = cat.period(x.line).reduce(x.residue);
  return x;
}

/// Word on one line from a list of residues.
inline Word make_word(const Catalog& cat, LineId line, const std::vector<std::int64_t>& residues) {
  Word w;
  w.reserve(residues.size());
  for (auto r : residues) w.push_back(normalize(cat, Letter{line, r}));
  return w;
}

}  // namespace segcalc
