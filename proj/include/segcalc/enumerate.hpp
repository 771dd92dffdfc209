#pragma once

// Exhaustive enumeration of single-line multisegments and words, and small
// catalogs with a prescribed line order, for the property suites.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "segcalc/multisegment.hpp"
#include "segcalc/word.hpp"

namespace segcalc {

/// A context (l, q) with ord(q mod l) = n, smallest prime l first, then smallest q.
inline Context context_with_order(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "line order must be positive");
  for (std::int64_t ell = 2;; ++ell) {
    if (!arith::is_prime(ell)) continue;
    for (std::int64_t q = 1; q < ell; ++q)
      if (arith::mult_order(q, ell) == n) return Context::modular(ell, q);
  }
}

/// A single self-dual line "L" of order n (f = 1).
inline Catalog catalog_with_order(std::int64_t n) { return Catalog::single_line(context_with_order(n)); }

/// Calls visit on every multisegment on `line` with total length `total`.
/// Starts range over residues on a finite line and over [lo, hi] otherwise.
inline void for_each_multisegment(const Catalog& cat, LineId line, std::int64_t total,
                                  const std::function<void(const Multisegment&)>& visit, std::int64_t lo = 0,
                                  std::int64_t hi = -1) {
  const Period o = cat.period(line);
  if (o.is_finite()) {
    lo = 0;
    hi = o.n - 1;
  } else if (hi < lo) {
    hi = lo + total - 1;
  }
  std::vector<Segment> kinds;
  for (std::int64_t len = 1; len <= total; ++len)
    for (std::int64_t a = lo; a <= hi; ++a) kinds.push_back(Segment{line, a, len});
  std::vector<Segment> chosen;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t from, std::int64_t left) {
    if (left == 0) {
      visit(Multisegment(chosen));
      return;
    }
    for (std::size_t k = from; k < kinds.size(); ++k) {
      if (kinds[k].len > left) continue;
      chosen.push_back(kinds[k]);
      rec(k, left - kinds[k].len);
      chosen.pop_back();
    }
  };
  rec(0, total);
}

inline std::vector<Multisegment> multisegments_of_length(const Catalog& cat, LineId line, std::int64_t total) {
  std::vector<Multisegment> out;
  for_each_multisegment(cat, line, total, [&](const Multisegment& m) { out.push_back(m); });
  return out;
}

/// All words of length k over the residues of a finite line.
inline std::vector<Word> words_of_length(const Catalog& cat, LineId line, std::size_t k) {
  const Period o = cat.period(line);
  if (!o.is_finite()) throw Error(ErrorCode::InfiniteOrder, "words are enumerated on finite lines");
  std::vector<Word> out;
  Word w(k, Letter{line, 0});
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == k) {
      out.push_back(w);
      return;
    }
    for (std::int64_t r = 0; r < o.n; ++r) {
      w[pos].residue = r;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace segcalc
