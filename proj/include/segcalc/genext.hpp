#pragma once

// Generic extensions of simple modules: the monoid generated by one-point
// segments, its word map m_gen, and the inverse word extraction.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "segcalc/multisegment.hpp"
#include "segcalc/order.hpp"
#include "segcalc/word.hpp"

namespace segcalc {

/// i + m: extend the longest segment starting at i+1 to the left, else adjoin [i,i].
inline Multisegment left_add(const Catalog& cat, const Letter& letter, Multisegment m) {
  const Letter x = normalize(cat, letter);
  const Period o = cat.period(x.line);
  const Segment* best = nullptr;
  for (const auto& s : m)
    if (s.line == x.line && o.congruent(s.a, x.residue + 1) && (!best || s.len > best->len)) best = &s;
  if (!best) {
    m.add(Segment{x.line, x.residue, 1});
    return m;
  }
  const Segment chosen = *best;
  m.remove(chosen);
  m.add(grow_left(cat, chosen));
  return m;
}

/// m + i: extend the longest segment ending at i-1 to the right, else adjoin [i,i].
inline Multisegment right_add(const Catalog& cat, Multisegment m, const Letter& letter) {
  const Letter x = normalize(cat, letter);
  const Period o = cat.period(x.line);
  const Segment* best = nullptr;
  for (const auto& s : m)
    if (s.line == x.line && o.congruent(s.b(), x.residue - 1) && (!best || s.len > best->len)) best = &s;
  if (!best) {
    m.add(Segment{x.line, x.residue, 1});
    return m;
  }
  const Segment chosen = *best;
  m.remove(chosen);
  m.add(grow_right(cat, chosen));
  return m;
}

/// m_gen(i_1 ... i_k) = [i_1] * ... * [i_k], folded with right_add.
inline Multisegment m_gen(const Catalog& cat, const Word& w) {
  Multisegment m;
  for (const auto& x : w) m = right_add(cat, std::move(m), x);
  return m;
}

/// The same product folded from the right with left_add.
inline Multisegment m_gen_left(const Catalog& cat, const Word& w) {
  Multisegment m;
  for (auto it = w.rbegin(); it != w.rend(); ++it) m = left_add(cat, *it, std::move(m));
  return m;
}

namespace detail {

/// Word of one line's part of m, last letter extracted first.
inline Word word_of_line(const Catalog& cat, Multisegment m) {
  Word reversed;
  while (!m.empty()) {
    const Period o = cat.period(m.segments().front().line);
    const Segment* pick = nullptr;
    for (const auto& s : m) {
      // Every segment ending at b-1 must be strictly shorter than s.
      bool ok = true;
      for (const auto& t : m)
        if (o.congruent(t.b(), s.b() - 1) && t.len >= s.len) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (!pick || s.len < pick->len || (s.len == pick->len && s.a < pick->a)) pick = &s;
    }
    if (!pick) throw Error(ErrorCode::NotAperiodic, "no segment can be extracted; input is not aperiodic");
    const Segment chosen = *pick;
    reversed.push_back(Letter{chosen.line, o.reduce(chosen.b())});
    m.remove(chosen);
    if (auto rest = shrink_right(cat, chosen)) m.add(*rest);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

}  // namespace detail

/// A word w with m_gen(w) = m. Lines are emitted in catalog order; within a
/// line the shortest extractable segment (then smallest start) is peeled first.
inline Word word_of(const Catalog& cat, const Multisegment& m) {
  Word out;
  for (LineId line : m.lines()) {
    Word part = detail::word_of_line(cat, m.on_line(line));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Generic-extension product of aperiodic multisegments, through words.
inline Multisegment star(const Catalog& cat, const Multisegment& m, const Multisegment& n) {
  if (!is_aperiodic(cat, m) || !is_aperiodic(cat, n))
    throw Error(ErrorCode::NotAperiodic, "star is defined on aperiodic multisegments");
  Word w = word_of(cat, m);
  const Word tail = word_of(cat, n);
  w.insert(w.end(), tail.begin(), tail.end());
  return m_gen(cat, w);
}

/// Rewrite systems for words with equal m_gen.
enum class SerreRelations {
  /// ij = ji for non-neighbours; i(i+1)i = ii(i+1) and i(i+1)(i+1) = (i+1)i(i+1)
  /// when o > 2; i(i+1)ii = ii(i+1)i when o = 2.
  Classical,
  /// Classical plus, on a finite line of period o > 2, the relation
  /// i i c i = i c i i with c = (i-1)(i-2)...(i+1) running once around the line.
  /// For o = 2 this is the o = 2 relation above.
  WithCycle,
};

/// The rewrite rules (pairs of residue strings) of a line with period o.
inline std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
serre_rules(Period o, std::span<const std::int64_t> alphabet, SerreRelations relations) {
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> rules;
  auto neighbours = [&](std::int64_t i, std::int64_t j) {
    return o.congruent(j, i + 1) || o.congruent(j, i - 1);
  };
  if (o.is_finite() && o.n == 1) return rules;
  for (std::int64_t i : alphabet) {
    for (std::int64_t j : alphabet)
      if (i != j && !neighbours(i, j)) rules.push_back({{i, j}, {j, i}});
    const std::int64_t up = o.reduce(i + 1);
    if (!o.is_finite() || o.n > 2) {
      rules.push_back({{i, up, i}, {i, i, up}});
      rules.push_back({{i, up, up}, {up, i, up}});
    } else {
      rules.push_back({{i, up, i, i}, {i, i, up, i}});
    }
    if (relations == SerreRelations::WithCycle && o.is_finite() && o.n > 2) {
      std::vector<std::int64_t> cycle;
      for (std::int64_t k = 1; k < o.n; ++k) cycle.push_back(o.reduce(i - k));
      std::vector<std::int64_t> lhs{i, i};
      lhs.insert(lhs.end(), cycle.begin(), cycle.end());
      lhs.push_back(i);
      std::vector<std::int64_t> rhs{i};
      rhs.insert(rhs.end(), cycle.begin(), cycle.end());
      rhs.push_back(i);
      rhs.push_back(i);
      rules.push_back({std::move(lhs), std::move(rhs)});
    }
  }
  return rules;
}

/// Words reachable from w by the rewrite rules, both directions.
inline std::set<std::vector<std::int64_t>> serre_class(const Catalog& cat, LineId line,
                                                       const std::vector<std::int64_t>& w,
                                                       SerreRelations relations = SerreRelations::WithCycle) {
  const Period o = cat.period(line);
  std::vector<std::int64_t> alphabet(w.begin(), w.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (!o.is_finite()) {
    // Rules only ever mention letters present in the word, plus i+1 for (2).
    std::vector<std::int64_t> extended = alphabet;
    for (auto x : alphabet) extended.push_back(x + 1);
    std::sort(extended.begin(), extended.end());
    extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
    alphabet = std::move(extended);
  } else {
    alphabet.clear();
    for (std::int64_t i = 0; i < o.n; ++i) alphabet.push_back(i);
  }
  const auto rules = serre_rules(o, alphabet, relations);
  std::set<std::vector<std::int64_t>> seen{w};
  std::deque<std::vector<std::int64_t>> queue{w};
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& [l, r] : rules) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir == 0 ? l : r;
        const auto& to = dir == 0 ? r : l;
        if (from.size() > x.size()) continue;
        for (std::size_t p = 0; p + from.size() <= x.size(); ++p) {
          if (!std::equal(from.begin(), from.end(), x.begin() + static_cast<std::ptrdiff_t>(p))) continue;
          auto y = x;
          std::copy(to.begin(), to.end(), y.begin() + static_cast<std::ptrdiff_t>(p));
          if (seen.insert(y).second) queue.push_back(std::move(y));
        }
      }
    }
  }
  return seen;
}

/// Whether two single-line words are related by the degenerate Serre relations.
inline bool serre_equivalent(const Catalog& cat, const Word& w, const Word& v,
                             SerreRelations relations = SerreRelations::WithCycle) {
  if (w.size() != v.size()) throw Error(ErrorCode::LengthMismatch, "words of different lengths");
  if (w.empty()) return true;
  const LineId line = w.front().line;
  auto residues = [&](const Word& x) {
    std::vector<std::int64_t> out;
    for (const auto& l : x) {
      if (l.line != line) throw Error(ErrorCode::DifferentLines, "serre_equivalent works on one line");
      out.push_back(normalize(cat, l).residue);
    }
    return out;
  };
  const auto a = residues(w);
  const auto b = residues(v);
  auto sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return serre_class(cat, line, a, relations).count(b) > 0;
}

namespace detail {

inline void words_below_rec(const Catalog& cat, const Multisegment& m, Word& prefix, std::set<Word>& out) {
  if (m.empty()) {
    out.insert(prefix);
    return;
  }
  std::set<std::int64_t> starts;
  for (const auto& s : m) starts.insert(s.a);
  for (std::int64_t i : starts) {
    const Segment* longest = nullptr;
    for (const auto& s : m)
      if (s.a == i && (!longest || s.len > longest->len)) longest = &s;
    const Segment chosen = *longest;
    Multisegment next = m;
    next.remove(chosen);
    if (auto rest = shrink_left(cat, chosen)) next.add(*rest);
    prefix.push_back(Letter{chosen.line, i});
    words_below_rec(cat, next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All words w = i_1...i_k with [i_1] * ... * [i_k] <= m (single-line m).
inline std::vector<Word> words_below(const Catalog& cat, const Multisegment& m) {
  if (m.lines().size() > 1) throw Error(ErrorCode::DifferentLines, "words_below works on one line");
  std::set<Word> out;
  Word prefix;
  detail::words_below_rec(cat, m, prefix, out);
  return {out.begin(), out.end()};
}

/// Reverse the word and dualize every letter: i -> -i on the dual line.
inline Word word_dual(const Catalog& cat, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(normalize(cat, Letter{cat.dual(it->line), -it->residue}));
  return out;
}

/// [a,b] precedes [a',b'] when a+1 <= a' <= b+1 <= b' on the same line.
inline bool precedes(const Segment& x, const Segment& y) {
  return x.line == y.line && x.a + 1 <= y.a && y.a <= x.b() + 1 && x.b() + 1 <= y.b();
}

/// Arranged form in characteristic zero: sorted by decreasing end, then
/// decreasing start, then line.
inline std::vector<Segment> arranged_form(const Catalog& cat, const Multisegment& m) {
  if (cat.context().is_modular()) throw Error(ErrorCode::ModularContext, "arranged forms need characteristic zero");
  std::vector<Segment> out(m.begin(), m.end());
  std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
    if (x.b() != y.b()) return x.b() > y.b();
    if (x.a != y.a) return x.a > y.a;
    return x.line < y.line;
  });
  return out;
}

inline bool is_arranged(const std::vector<Segment>& order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (precedes(order[i], order[j])) return false;
  return true;
}

}  // namespace segcalc
