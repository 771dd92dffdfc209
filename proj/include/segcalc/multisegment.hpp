#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "segcalc/context.hpp"

namespace segcalc {

/// The segment [a, a+len-1] on a cuspidal line.
///
/// On a finite line the start is kept in [0, o); the length is unbounded, so
/// a segment may wrap around the line several times.
struct Segment {
  LineId line = 0;
  std::int64_t a = 0;
  std::int64_t len = 1;

  constexpr std::int64_t b() const noexcept { return a + len - 1; }
  auto operator<=>(const Segment&) const = default;
};

inline Segment normalize(const Catalog& cat, Segment s) {
  if (s.len < 1) throw Error(ErrorCode::PreconditionViolated, "segment length must be positive");
  s.a = cat.period(s.line).reduce(s.a);
  return s;
}

/// [a, b] on a line; requires a <= b.
inline Segment make_segment(const Catalog& cat, LineId line, std::int64_t a, std::int64_t b) {
  if (b < a) throw Error(ErrorCode::PreconditionViolated, "segment end precedes its start");
  return normalize(cat, Segment{line, a, b - a + 1});
}

inline bool same_residue(const Catalog& cat, LineId line, std::int64_t x, std::int64_t y) {
  return cat.period(line).congruent(x, y);
}

/// Finite multiset of segments, kept sorted by (line, a, len).
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
    std::sort(segments_.begin(), segments_.end());
  }
  Multisegment(std::initializer_list<Segment> segments) : Multisegment(std::vector<Segment>(segments)) {}

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool empty() const noexcept { return segments_.empty(); }
  std::size_t size() const noexcept { return segments_.size(); }
  auto begin() const noexcept { return segments_.begin(); }
  auto end() const noexcept { return segments_.end(); }

  void add(const Segment& s) { segments_.insert(std::upper_bound(segments_.begin(), segments_.end(), s), s); }

  /// Removes one copy; false when the segment is absent.
  bool remove(const Segment& s) {
    auto it = std::lower_bound(segments_.begin(), segments_.end(), s);
    if (it == segments_.end() || *it != s) return false;
    segments_.erase(it);
    return true;
  }

  std::size_t count(const Segment& s) const {
    auto [lo, hi] = std::equal_range(segments_.begin(), segments_.end(), s);
    return static_cast<std::size_t>(hi - lo);
  }

  bool contains(const Multisegment& sub) const {
    return std::includes(segments_.begin(), segments_.end(), sub.segments_.begin(), sub.segments_.end());
  }

  Multisegment on_line(LineId line) const {
    Multisegment out;
    for (const auto& s : segments_)
      if (s.line == line) out.segments_.push_back(s);
    return out;
  }

  std::vector<LineId> lines() const {
    std::vector<LineId> out;
    for (const auto& s : segments_)
      if (out.empty() || out.back() != s.line) out.push_back(s.line);
    return out;
  }

  std::int64_t total_length() const {
    std::int64_t n = 0;
    for (const auto& s : segments_) n += s.len;
    return n;
  }

  friend Multisegment operator+(Multisegment x, const Multisegment& y) {
    x.segments_.insert(x.segments_.end(), y.segments_.begin(), y.segments_.end());
    std::sort(x.segments_.begin(), x.segments_.end());
    return x;
  }

  auto operator<=>(const Multisegment&) const = default;

 private:
  std::vector<Segment> segments_;
};

inline Multisegment normalize(const Catalog& cat, const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m) out.push_back(normalize(cat, s));
  return Multisegment(std::move(out));
}

// Elementary segment operations. Shrinking a single point yields no segment.

inline std::optional<Segment> shrink_left(const Catalog& cat, const Segment& s) {
  if (s.len == 1) return std::nullopt;
  return normalize(cat, Segment{s.line, s.a + 1, s.len - 1});
}

inline std::optional<Segment> shrink_right(const Catalog&, const Segment& s) {
  if (s.len == 1) return std::nullopt;
  return Segment{s.line, s.a, s.len - 1};
}

inline Segment grow_left(const Catalog& cat, const Segment& s) {
  return normalize(cat, Segment{s.line, s.a - 1, s.len + 1});
}

inline Segment grow_right(const Catalog&, const Segment& s) { return Segment{s.line, s.a, s.len + 1}; }

/// [a,b]^v = [-b,-a] on the dual line.
inline Segment dual(const Catalog& cat, const Segment& s) {
  return normalize(cat, Segment{cat.dual(s.line), -s.b(), s.len});
}

inline Multisegment dual(const Catalog& cat, const Multisegment& m) {
  std::vector<Segment> out;
  out.reserve(m.size());
  for (const auto& s : m) out.push_back(dual(cat, s));
  return Multisegment(std::move(out));
}

/// Sum of len * deg(line).
inline std::int64_t degree(const Catalog& cat, const Multisegment& m) {
  std::int64_t d = 0;
  for (const auto& s : m) d += s.len * cat.line(s.line).deg;
  return d;
}

/// Per line, the multiplicity of each exponent (a residue class on finite lines).
using SupportVector = std::map<LineId, std::map<std::int64_t, std::int64_t>>;

inline SupportVector support(const Catalog& cat, const Multisegment& m) {
  SupportVector out;
  for (const auto& s : m) {
    auto& counts = out[s.line];
    const Period o = cat.period(s.line);
    for (std::int64_t k = 0; k < s.len; ++k) ++counts[o.reduce(s.a + k)];
  }
  return out;
}

/// Dense multiplicities on residues 0..n-1 of one line of finite period n.
inline std::vector<std::int64_t> dimension_vector(const Catalog& cat, const Multisegment& m, LineId line) {
  const Period o = cat.period(line);
  if (!o.is_finite()) throw Error(ErrorCode::InfiniteOrder, "dimension vectors need a finite line");
  std::vector<std::int64_t> dims(static_cast<std::size_t>(o.n), 0);
  for (const auto& s : m)
    if (s.line == line)
      for (std::int64_t k = 0; k < s.len; ++k) ++dims[static_cast<std::size_t>(o.reduce(s.a + k))];
  return dims;
}

/// The full-period family [a,b] + [a+1,b+1] + ... + [a+e-1,b+e-1].
inline Multisegment period_family(const Catalog& cat, const Segment& s) {
  const std::int64_t e = cat.aperiodicity_period(s.line);
  std::vector<Segment> out;
  out.reserve(static_cast<std::size_t>(e));
  for (std::int64_t k = 0; k < e; ++k) out.push_back(normalize(cat, Segment{s.line, s.a + k, s.len}));
  return Multisegment(std::move(out));
}

/// Aperiodic: no full-period family occurs as a sub-multisegment.
/// Always true in characteristic zero.
inline bool is_aperiodic(const Catalog& cat, const Multisegment& m) {
  if (!cat.context().is_modular()) return true;
  for (const auto& s : m)
    if (m.contains(period_family(cat, s))) return false;
  return true;
}

/// (m_b, m_nb): segments on lines with o > 1, and the rest.
inline std::pair<Multisegment, Multisegment> banal_split(const Catalog& cat, const Multisegment& m) {
  std::vector<Segment> banal;
  std::vector<Segment> rest;
  for (const auto& s : m) (cat.is_banal(s.line) ? banal : rest).push_back(s);
  return {Multisegment(std::move(banal)), Multisegment(std::move(rest))};
}

/// Lifts a modular multisegment to characteristic zero.
///
/// starts[k] is the chosen integer start for the k-th segment of m (canonical
/// order); it must be congruent to that segment's start modulo o(line).
/// line_map sends each modular line to its lift line in `target`.
inline Multisegment lift(const Catalog& source, const Multisegment& m, std::span<const std::int64_t> starts,
                         const Catalog& target, const std::map<LineId, LineId>& line_map) {
  if (starts.size() != m.size())
    throw Error(ErrorCode::PreconditionViolated, "one representative per segment is required");
  if (target.context().is_modular())
    throw Error(ErrorCode::ModularContext, "lifts live in a characteristic-zero catalog");
  std::vector<Segment> out;
  out.reserve(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const Segment& s = m.segments()[k];
    if (!source.period(s.line).congruent(starts[k], s.a))
      throw Error(ErrorCode::BadResidue, "representative " + std::to_string(starts[k]) +
                                             " is not congruent to " + std::to_string(s.a));
    auto it = line_map.find(s.line);
    if (it == line_map.end())
      throw Error(ErrorCode::UnknownLine, "no lift line for '" + source.line(s.line).id + "'");
    out.push_back(Segment{it->second, starts[k], s.len});
  }
  return Multisegment(std::move(out));
}

}  // namespace segcalc
