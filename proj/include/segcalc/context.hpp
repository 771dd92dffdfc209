#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "segcalc/arith.hpp"
#include "segcalc/error.hpp"

namespace segcalc {

enum class Mode { CharZero, Modular };

/// Coefficient arithmetic: characteristic zero (q formal) or l-modular with q a unit mod l.
class Context {
 public:
  static Context char_zero() { return Context(Mode::CharZero, 0, 0); }

  static Context modular(std::int64_t ell, std::int64_t q) {
    if (!arith::is_prime(ell))
      throw Error(ErrorCode::NonPrimeEll, std::to_string(ell) + " is not prime");
    const std::int64_t reduced = arith::mod(q, ell);
    if (reduced == 0)
      throw Error(ErrorCode::QDivisibleByEll,
                  "q = " + std::to_string(q) + " vanishes modulo " + std::to_string(ell));
    return Context(Mode::Modular, ell, reduced);
  }

  Mode mode() const noexcept { return mode_; }
  bool is_modular() const noexcept { return mode_ == Mode::Modular; }
  std::int64_t ell() const noexcept { return ell_; }
  std::int64_t q() const noexcept { return q_; }

  bool operator==(const Context&) const = default;

 private:
  Context(Mode mode, std::int64_t ell, std::int64_t q) : mode_(mode), ell_(ell), q_(q) {}

  Mode mode_;
  std::int64_t ell_;
  std::int64_t q_;
};

/// Cardinality of a cuspidal line; zero encodes an infinite line.
struct Period {
  std::int64_t n = 0;

  static constexpr Period infinite() { return Period{0}; }
  static constexpr Period finite(std::int64_t n) { return Period{n}; }

  constexpr bool is_finite() const noexcept { return n > 0; }
  constexpr std::int64_t reduce(std::int64_t x) const noexcept {
    return is_finite() ? arith::mod(x, n) : x;
  }
  constexpr bool congruent(std::int64_t x, std::int64_t y) const noexcept {
    return reduce(x) == reduce(y);
  }
  bool operator==(const Period&) const = default;
};

/// o(rho): infinite in characteristic zero, otherwise the order of q^f modulo l.
inline Period line_order(std::int64_t f, const Context& ctx) {
  if (!ctx.is_modular()) return Period::infinite();
  return Period::finite(arith::mult_order(arith::pow_mod(ctx.q(), static_cast<std::uint64_t>(f), ctx.ell()),
                                          ctx.ell()));
}

/// e(rho): the aperiodicity period, o(rho) when o(rho) > 1 and l otherwise.
inline std::int64_t e_of(std::int64_t f, const Context& ctx) {
  if (!ctx.is_modular()) throw Error(ErrorCode::InfiniteOrder, "e(rho) needs a modular context");
  const Period o = line_order(f, ctx);
  return o.n > 1 ? o.n : ctx.ell();
}

/// A twist value: a residue in F_l^x (modular) or an opaque symbol (characteristic zero).
using Twist = std::variant<std::int64_t, std::string>;

struct CuspidalLine {
  std::string id;
  std::int64_t f = 1;
  std::string dual;
  Twist twist = std::int64_t{1};
  std::int64_t deg = 1;
};

using LineId = std::uint32_t;

/// The declared cuspidal lines of a computation together with its context.
///
/// Lines are indexed in lexicographic order of their ids, so LineId order is
/// the canonical line order used by multisegments.
class Catalog {
 public:
  Catalog(Context ctx, std::vector<CuspidalLine> lines) : ctx_(ctx), lines_(std::move(lines)) {
    std::sort(lines_.begin(), lines_.end(),
              [](const CuspidalLine& x, const CuspidalLine& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      const auto& line = lines_[i];
      if (line.id.empty()) throw Error(ErrorCode::InvalidLine, "empty line id");
      if (i > 0 && lines_[i - 1].id == line.id)
        throw Error(ErrorCode::InvalidLine, "duplicate line id " + line.id);
      if (line.f < 1) throw Error(ErrorCode::InvalidLine, "f must be positive on " + line.id);
      if (line.deg < 1) throw Error(ErrorCode::InvalidLine, "deg must be positive on " + line.id);
      validate_twist(line);
      if (ctx_.is_modular())
        lines_[i].twist = arith::mod(std::get<std::int64_t>(line.twist), ctx_.ell());
    }
    dual_.assign(lines_.size(), std::nullopt);
    periods_.reserve(lines_.size());
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      periods_.push_back(line_order(lines_[i].f, ctx_));
      if (auto d = lookup(lines_[i].dual)) dual_[i] = *d;
    }
    for (std::size_t i = 0; i < lines_.size(); ++i) {
      if (!dual_[i]) continue;
      const auto& line = lines_[i];
      const auto& other = lines_[*dual_[i]];
      if (other.dual != line.id)
        throw Error(ErrorCode::InvalidLine, "dual of " + line.id + " is " + other.id +
                                                " but its dual is " + other.dual);
      if (other.f != line.f)
        throw Error(ErrorCode::InvalidLine, "f differs between dual lines " + line.id + ", " + other.id);
      if (other.twist != line.twist)
        throw Error(ErrorCode::InvalidLine, "twist differs between dual lines " + line.id + ", " + other.id);
    }
  }

  /// One self-dual line "L" with f = 1 and trivial twist; handy for single-line work.
  static Catalog single_line(Context ctx, std::int64_t f = 1, std::string id = "L") {
    CuspidalLine line;
    line.id = id;
    line.f = f;
    line.dual = id;
    line.twist = ctx.is_modular() ? Twist{std::int64_t{1}} : Twist{id};
    return Catalog(ctx, {line});
  }

  const Context& context() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return lines_.size(); }
  const CuspidalLine& line(LineId id) const { return lines_.at(id); }
  const std::vector<CuspidalLine>& lines() const noexcept { return lines_; }

  std::optional<LineId> lookup(const std::string& name) const {
    auto it = std::lower_bound(lines_.begin(), lines_.end(), name,
                               [](const CuspidalLine& l, const std::string& n) { return l.id < n; });
    if (it == lines_.end() || it->id != name) return std::nullopt;
    return static_cast<LineId>(it - lines_.begin());
  }

  LineId find(const std::string& name) const {
    if (auto id = lookup(name)) return *id;
    throw Error(ErrorCode::UnknownLine, "line '" + name + "' is not declared");
  }

  Period period(LineId id) const { return periods_.at(id); }

  /// e(rho) of a line; characteristic zero has no finite period.
  std::int64_t aperiodicity_period(LineId id) const { return e_of(lines_.at(id).f, ctx_); }

  bool has_dual(LineId id) const { return dual_.at(id).has_value(); }

  LineId dual(LineId id) const {
    if (!dual_.at(id))
      throw Error(ErrorCode::MissingDualLine,
                  "dual '" + lines_[id].dual + "' of line '" + lines_[id].id + "' is not declared");
    return *dual_[id];
  }

  /// Lines in the banal part: o(rho) > 1 (every line in characteristic zero).
  bool is_banal(LineId id) const {
    const Period o = period(id);
    return !o.is_finite() || o.n > 1;
  }

 private:
  void validate_twist(const CuspidalLine& line) const {
    if (ctx_.is_modular()) {
      const auto* value = std::get_if<std::int64_t>(&line.twist);
      if (!value || arith::mod(*value, ctx_.ell()) == 0)
        throw Error(ErrorCode::InvalidLine, "twist of " + line.id + " must be a unit modulo l");
    } else if (!std::holds_alternative<std::string>(line.twist)) {
      throw Error(ErrorCode::InvalidLine, "twist of " + line.id + " must be a symbol in characteristic zero");
    }
  }

  Context ctx_;
  std::vector<CuspidalLine> lines_;
  std::vector<std::optional<LineId>> dual_;
  std::vector<Period> periods_;
};

}  // namespace segcalc
