#pragma once

// The degeneration order on multisegments, generated by elementary operations
//   [a,b] + [a',b'] -> [a,b'] + [a',b]   whenever   a+1 <= a' <= b+1 <= b'.
// On a finite line every shift of [a',b'] by a multiple of o is tried.

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "segcalc/multisegment.hpp"

namespace segcalc {

/// One elementary operation applied to a linked pair of `source`.
struct ElemMove {
  Multisegment source;
  Segment first;
  Segment second;
  Multisegment result;
};

namespace detail {

/// Integer shifts k such that first precedes second + k*o (k = 0 only on infinite lines).
inline std::vector<std::int64_t> linking_shifts(const Catalog& cat, const Segment& first, const Segment& second) {
  std::vector<std::int64_t> out;
  const Period o = cat.period(first.line);
  auto links = [&](std::int64_t a2) {
    const std::int64_t b2 = a2 + second.len - 1;
    return first.a + 1 <= a2 && a2 <= first.b() + 1 && first.b() + 1 <= b2;
  };
  if (!o.is_finite()) {
    if (links(second.a)) out.push_back(0);
    return out;
  }
  // a+1 <= a2 + k*o <= b+1 bounds k to a finite window.
  const std::int64_t lo = first.a + 1 - second.a;
  const std::int64_t hi = first.b() + 1 - second.a;
  std::int64_t k = lo >= 0 ? (lo + o.n - 1) / o.n : -((-lo) / o.n);
  for (; k * o.n <= hi; ++k)
    if (links(second.a + k * o.n)) out.push_back(k);
  return out;
}

inline Multisegment apply_link(const Catalog& cat, Multisegment rest, const Segment& first,
                               const Segment& second_shifted) {
  rest.add(normalize(cat, Segment{first.line, first.a, second_shifted.b() - first.a + 1}));
  if (second_shifted.a <= first.b())
    rest.add(normalize(cat, Segment{first.line, second_shifted.a, first.b() - second_shifted.a + 1}));
  return rest;
}

}  // namespace detail

/// Linked in either orientation, up to the shift identification on finite lines.
inline bool is_linked(const Catalog& cat, const Segment& x, const Segment& y) {
  if (x.line != y.line) throw Error(ErrorCode::DifferentLines, "linkedness compares segments on one line");
  return !detail::linking_shifts(cat, x, y).empty() || !detail::linking_shifts(cat, y, x).empty();
}

/// Every single elementary operation on m, with the pair it consumed.
inline std::vector<ElemMove> elementary_move_list(const Catalog& cat, const Multisegment& m) {
  std::vector<ElemMove> out;
  std::vector<Segment> distinct(m.begin(), m.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const Segment& x : distinct) {
    for (const Segment& y : distinct) {
      if (x.line != y.line) continue;
      if (x == y && m.count(x) < 2) continue;
      for (std::int64_t k : detail::linking_shifts(cat, x, y)) {
        Multisegment rest = m;
        rest.remove(x);
        rest.remove(y);
        Segment shifted{y.line, y.a + k * cat.period(x.line).n, y.len};
        out.push_back({m, x, y, detail::apply_link(cat, std::move(rest), x, shifted)});
      }
    }
  }
  return out;
}

/// Distinct results of one elementary operation.
inline std::set<Multisegment> elementary_moves(const Catalog& cat, const Multisegment& m) {
  std::set<Multisegment> out;
  for (auto& mv : elementary_move_list(cat, m)) out.insert(std::move(mv.result));
  return out;
}

inline bool is_unlinked(const Catalog& cat, const Multisegment& m) {
  const auto& segs = m.segments();
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (segs[i].line == segs[j].line && is_linked(cat, segs[i], segs[j])) return false;
  return true;
}

/// {n : n <= m}, by breadth-first closure under elementary operations.
inline std::set<Multisegment> down_set(const Catalog& cat, const Multisegment& m) {
  std::set<Multisegment> seen{m};
  std::deque<Multisegment> queue{m};
  while (!queue.empty()) {
    Multisegment x = std::move(queue.front());
    queue.pop_front();
    for (auto& y : elementary_moves(cat, x))
      if (seen.insert(y).second) queue.push_back(y);
  }
  return seen;
}

/// n <= m: n is reachable from m by a chain of elementary operations.
inline bool leq(const Catalog& cat, const Multisegment& n, const Multisegment& m) {
  if (n == m) return true;
  if (support(cat, n) != support(cat, m) || n.size() > m.size()) return false;
  std::set<Multisegment> seen{m};
  std::deque<Multisegment> queue{m};
  while (!queue.empty()) {
    Multisegment x = std::move(queue.front());
    queue.pop_front();
    for (auto& y : elementary_moves(cat, x)) {
      if (y == n) return true;
      // Moves never increase the number of segments.
      if (y.size() < n.size()) continue;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return false;
}

/// The maximal aperiodic multisegments below m, or all of them with `all`.
inline std::set<Multisegment> aperiodic_below(const Catalog& cat, const Multisegment& m, bool all = false) {
  if (is_aperiodic(cat, m)) {
    if (!all) return {m};
  }
  std::set<Multisegment> candidates;
  for (const auto& x : down_set(cat, m))
    if (is_aperiodic(cat, x)) candidates.insert(x);
  if (all) return candidates;
  std::set<Multisegment> dominated;
  for (const auto& x : candidates) {
    if (dominated.count(x)) continue;
    for (const auto& y : down_set(cat, x))
      if (y != x) dominated.insert(y);
  }
  std::set<Multisegment> maxima;
  for (const auto& x : candidates)
    if (!dominated.count(x)) maxima.insert(x);
  return maxima;
}

/// Finds m2' one move [a,b]+[a+1,b+1] -> [a,b+1]+[a+1,b] below m2 with n <= m1 + m2'.
/// An empty result means the search was exhausted.
inline std::optional<Multisegment> elemopap_step(const Catalog& cat, const Multisegment& m1,
                                                 const Multisegment& m2, const Multisegment& n) {
  if (!is_aperiodic(cat, m1) || !is_aperiodic(cat, n))
    throw Error(ErrorCode::PreconditionViolated, "m1 and n must be aperiodic");
  if (is_aperiodic(cat, m2)) throw Error(ErrorCode::PreconditionViolated, "m2 must not be aperiodic");
  if (!leq(cat, n, m1 + m2)) throw Error(ErrorCode::PreconditionViolated, "n is not below m1 + m2");
  const auto& segs = m2.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i > 0 && segs[i] == segs[i - 1]) continue;
    const Segment& lower = segs[i];
    Segment upper = normalize(cat, Segment{lower.line, lower.a + 1, lower.len});
    Multisegment rest = m2;
    rest.remove(lower);
    if (!rest.remove(upper)) continue;
    Segment upper_lifted{lower.line, lower.a + 1, lower.len};
    Multisegment candidate = detail::apply_link(cat, std::move(rest), lower, upper_lifted);
    if (leq(cat, n, m1 + candidate)) return candidate;
  }
  return std::nullopt;
}

}  // namespace segcalc
