#pragma once

// L-factors of C'-parameters. An L-factor is stored through its inverse, a
// product of factors 1 - (beta X)^f, kept as a multiset of (beta, f).

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "segcalc/multisegment.hpp"
#include "segcalc/poly.hpp"

namespace segcalc {

/// beta = chi(varpi) written as twist * q^power in characteristic zero.
struct FormalBeta {
  std::string twist;
  std::int64_t q_power = 0;

  auto operator<=>(const FormalBeta&) const = default;
};

/// The inverse-L factor 1 - (beta X)^f.
///
/// Two factors are equal when they are the same polynomial, so modular roots
/// compare through beta^f rather than beta.
class InverseRoot {
 public:
  static InverseRoot modular(std::int64_t beta, std::int64_t f, std::int64_t ell) {
    const std::int64_t b = arith::mod(beta, ell);
    if (b == 0) throw Error(ErrorCode::PreconditionViolated, "inverse roots are units");
    return InverseRoot(b, f, arith::pow_mod(b, static_cast<std::uint64_t>(f), ell));
  }

  static InverseRoot formal(std::string twist, std::int64_t q_power, std::int64_t f) {
    return InverseRoot(FormalBeta{std::move(twist), q_power}, f, 0);
  }

  bool is_modular() const noexcept { return std::holds_alternative<std::int64_t>(beta_); }
  std::int64_t beta() const { return std::get<std::int64_t>(beta_); }
  const FormalBeta& formal_beta() const { return std::get<FormalBeta>(beta_); }
  std::int64_t f() const noexcept { return f_; }
  /// beta^f modulo l; the coefficient of X^f is its negative.
  std::int64_t beta_power() const noexcept { return power_; }

  friend bool operator==(const InverseRoot& x, const InverseRoot& y) { return x.key() == y.key(); }
  friend bool operator<(const InverseRoot& x, const InverseRoot& y) { return x.key() < y.key(); }

  std::string to_string() const {
    std::ostringstream out;
    std::string base;
    if (is_modular()) {
      base = beta() == 1 ? "X" : std::to_string(beta()) + "*X";
    } else {
      const auto& b = formal_beta();
      base = b.twist;
      if (b.q_power == 1)
        base += "*q";
      else if (b.q_power != 0)
        base += "*q^" + std::to_string(b.q_power);
      base += "*X";
    }
    out << "(1 - ";
    if (f_ == 1)
      out << base;
    else if (is_modular() && beta() == 1)
      out << "X^" << f_;
    else
      out << '(' << base << ")^" << f_;
    out << ")^-1";
    return out.str();
  }

 private:
  InverseRoot(std::variant<std::int64_t, FormalBeta> beta, std::int64_t f, std::int64_t power)
      : beta_(std::move(beta)), f_(f), power_(power) {
    if (f_ < 1) throw Error(ErrorCode::PreconditionViolated, "f must be positive");
  }

  std::tuple<std::int64_t, bool, std::int64_t, FormalBeta> key() const {
    if (is_modular()) return {f_, true, power_, FormalBeta{}};
    return {f_, false, 0, formal_beta()};
  }

  std::variant<std::int64_t, FormalBeta> beta_;
  std::int64_t f_;
  std::int64_t power_;
};

/// L(X)^{-1} as a multiset of inverse roots; the empty multiset is L = 1.
class LFactorInv {
 public:
  LFactorInv() = default;
  explicit LFactorInv(std::vector<InverseRoot> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
  }

  const std::vector<InverseRoot>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }

  LFactorInv& operator*=(const LFactorInv& other) {
    std::vector<InverseRoot> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
               std::back_inserter(merged));
    factors_ = std::move(merged);
    return *this;
  }
  friend LFactorInv operator*(LFactorInv x, const LFactorInv& y) { return x *= y; }

  bool contains(const LFactorInv& other) const {
    return std::includes(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end());
  }

  /// L_this / L_other as inverse roots: the multiset difference, when other is contained.
  std::optional<LFactorInv> quotient(const LFactorInv& other) const {
    if (!contains(other)) return std::nullopt;
    std::vector<InverseRoot> rest;
    std::set_difference(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
                        std::back_inserter(rest));
    return LFactorInv(std::move(rest));
  }

  friend bool operator==(const LFactorInv& x, const LFactorInv& y) { return x.factors_ == y.factors_; }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& r : factors_) {
      if (!out.empty()) out += " * ";
      out += r.to_string();
    }
    return out;
  }

 private:
  std::vector<InverseRoot> factors_;
};

/// rho |-|^shift on a line.
struct CuspidalRef {
  LineId line = 0;
  std::int64_t shift = 0;
};

namespace detail {

/// The root chi(varpi) = twist * q^{-exponent} attached to `line` and its dual.
inline InverseRoot root_for(const Catalog& cat, LineId line, std::int64_t exponent) {
  const CuspidalLine& decl = cat.line(line);
  const Context& ctx = cat.context();
  if (ctx.is_modular()) {
    const std::int64_t e = cat.period(line).reduce(exponent);
    const std::int64_t beta =
        arith::mul_mod(std::get<std::int64_t>(decl.twist), arith::zpow_mod(ctx.q(), -e, ctx.ell()), ctx.ell());
    return InverseRoot::modular(beta, decl.f, ctx.ell());
  }
  return InverseRoot::formal(std::get<std::string>(decl.twist), -exponent, decl.f);
}

inline bool pairs_with(const Catalog& cat, LineId line, LineId other) {
  return cat.has_dual(line) && cat.dual(line) == other && cat.is_banal(line);
}

}  // namespace detail

/// L(X, C'(rho), C'(rho')): one factor when rho' is an unramified twist of
/// rho^v and o(rho) > 1, otherwise 1.
inline LFactorInv l_cuspidal(const Catalog& cat, const CuspidalRef& rho, const CuspidalRef& rho2) {
  if (!detail::pairs_with(cat, rho.line, rho2.line)) return {};
  return LFactorInv({detail::root_for(cat, rho.line, rho.shift + rho2.shift)});
}

inline LFactorInv l_segment(const Catalog& cat, const Segment& x, const Segment& y) {
  std::vector<InverseRoot> out;
  if (!detail::pairs_with(cat, x.line, y.line)) return {};
  if (x.len <= y.len) {
    for (std::int64_t i = x.a; i <= x.b(); ++i) out.push_back(detail::root_for(cat, x.line, i + y.b()));
  } else {
    for (std::int64_t i = y.a; i <= y.b(); ++i) out.push_back(detail::root_for(cat, x.line, x.b() + i));
  }
  return LFactorInv(std::move(out));
}

inline LFactorInv l_multisegment(const Catalog& cat, const Multisegment& m, const Multisegment& n) {
  LFactorInv out;
  for (const auto& x : m)
    for (const auto& y : n) out *= l_segment(cat, x, y);
  return out;
}

/// prod (1 - beta^f X^f) over F_l.
inline PolyModEll expand(const Catalog& cat, const LFactorInv& l) {
  const Context& ctx = cat.context();
  if (!ctx.is_modular()) throw Error(ErrorCode::RequiresModular, "expansion needs a modular context");
  PolyModEll out = PolyModEll::one(ctx.ell());
  for (const auto& r : l.factors()) {
    if (!r.is_modular()) throw Error(ErrorCode::RequiresModular, "formal factor in a modular expansion");
    out = out * PolyModEll::one_minus(ctx.ell(), r.beta_power(), r.f());
  }
  return out;
}

/// Whether expand(a) divides expand(b) in F_l[X].
inline bool divides(const Catalog& cat, const LFactorInv& a, const LFactorInv& b) {
  return poly_divides(expand(cat, a), expand(cat, b));
}

/// A quotient L(m, n) / L(m', n) computed directly, next to its closed form.
struct RatioCheck {
  Multisegment reduced;                 // m'
  std::optional<LFactorInv> quotient;   // empty when L(m',n)^{-1} does not divide L(m,n)^{-1} as multisets
  LFactorInv predicted;

  bool holds() const { return quotient && *quotient == predicted; }
};

namespace detail {

/// prod over [c,d] in n on the dual line of `line`, with d - c selected by `keep`, of the
/// factor with exponent a + d.
template <typename Keep>
LFactorInv predicted_ratio(const Catalog& cat, LineId line, std::int64_t a, const Multisegment& n, Keep keep) {
  std::vector<InverseRoot> out;
  if (!cat.has_dual(line)) return {};
  const LineId dual_line = cat.dual(line);
  for (const auto& s : n)
    if (s.line == dual_line && keep(s.len - 1)) out.push_back(root_for(cat, line, a + s.b()));
  return LFactorInv(std::move(out));
}

}  // namespace detail

/// Replaces [a,b] + [a+1,b+1] in m by [a,b+1] + [a+1,b] and compares the
/// L-factor quotient with the product over dual segments of n of length b-a+1.
inline RatioCheck ratio_aperiodic(const Catalog& cat, const Multisegment& m, const Multisegment& n,
                                  const Segment& delta) {
  const Segment lower = normalize(cat, delta);
  if (!cat.is_banal(lower.line))
    throw Error(ErrorCode::PreconditionViolated, "the periodic pair must lie on a line with o > 1");
  const Segment upper = normalize(cat, Segment{lower.line, lower.a + 1, lower.len});
  Multisegment reduced = m;
  if (!reduced.remove(lower) || !reduced.remove(upper))
    throw Error(ErrorCode::MissingPeriodicPair, "m lacks the pair [a,b] + [a+1,b+1]");
  reduced.add(Segment{lower.line, lower.a, lower.len + 1});
  if (lower.len > 1) reduced.add(normalize(cat, Segment{lower.line, lower.a + 1, lower.len - 1}));

  RatioCheck out{reduced, l_multisegment(cat, m, n).quotient(l_multisegment(cat, reduced, n)), {}};
  out.predicted = detail::predicted_ratio(cat, lower.line, lower.a, n,
                                          [&](std::int64_t diff) { return diff == lower.len - 1; });
  return out;
}

/// Replaces the chosen segment [a,b] of m by [a+1,b] and compares the quotient
/// with the product over dual segments of n of length at least b-a+1.
inline RatioCheck ratio_red(const Catalog& cat, const Multisegment& m, const Multisegment& n, const Segment& delta) {
  const Segment chosen = normalize(cat, delta);
  if (!cat.is_banal(chosen.line))
    throw Error(ErrorCode::PreconditionViolated, "the segment must lie on a line with o > 1");
  Multisegment reduced = m;
  if (!reduced.remove(chosen)) throw Error(ErrorCode::PreconditionViolated, "segment not in m");
  if (auto rest = shrink_left(cat, chosen)) reduced.add(*rest);

  RatioCheck out{reduced, l_multisegment(cat, m, n).quotient(l_multisegment(cat, reduced, n)), {}};
  out.predicted = detail::predicted_ratio(cat, chosen.line, chosen.a, n,
                                          [&](std::int64_t diff) { return diff >= chosen.len - 1; });
  return out;
}

/// A longest segment of m on a line with o > 1 (the first in canonical order).
inline std::optional<Segment> longest_banal_segment(const Catalog& cat, const Multisegment& m) {
  std::optional<Segment> best;
  for (const auto& s : m)
    if (cat.is_banal(s.line) && (!best || s.len > best->len)) best = s;
  return best;
}

inline RatioCheck ratio_red(const Catalog& cat, const Multisegment& m, const Multisegment& n) {
  auto delta = longest_banal_segment(cat, m);
  if (!delta) throw Error(ErrorCode::PreconditionViolated, "m has no segment on a line with o > 1");
  return ratio_red(cat, m, n, *delta);
}

}  // namespace segcalc
