#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "segcalc/arith.hpp"
#include "segcalc/error.hpp"

namespace segcalc {

/// Dense polynomial over F_p, constant term first, no trailing zeros.
class PolyModEll {
 public:
  explicit PolyModEll(std::int64_t p, std::vector<std::int64_t> coeffs = {}) : p_(p), c_(std::move(coeffs)) {
    for (auto& x : c_) x = arith::mod(x, p_);
    trim();
  }

  static PolyModEll one(std::int64_t p) { return PolyModEll(p, {1}); }

  /// 1 - c X^k.
  static PolyModEll one_minus(std::int64_t p, std::int64_t c, std::int64_t k) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs[0] = 1;
    coeffs[static_cast<std::size_t>(k)] = arith::mod(-c, p);
    if (k == 0) coeffs[0] = arith::mod(1 - c, p);
    return PolyModEll(p, std::move(coeffs));
  }

  std::int64_t modulus() const noexcept { return p_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::int64_t coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
  std::int64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = arith::mod(arith::mul_mod(acc, x, p_) + *it, p_);
    return acc;
  }

  friend PolyModEll operator*(const PolyModEll& x, const PolyModEll& y) {
    check(x, y);
    if (x.is_zero() || y.is_zero()) return PolyModEll(x.p_);
    std::vector<std::int64_t> out(x.c_.size() + y.c_.size() - 1, 0);
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        out[i + j] = arith::mod(out[i + j] + arith::mul_mod(x.c_[i], y.c_[j], x.p_), x.p_);
    return PolyModEll(x.p_, std::move(out));
  }

  friend PolyModEll operator-(const PolyModEll& x, const PolyModEll& y) {
    check(x, y);
    std::vector<std::int64_t> out(std::max(x.c_.size(), y.c_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.coeff(i) - y.coeff(i);
    return PolyModEll(x.p_, std::move(out));
  }

  /// Quotient and remainder of Euclidean division.
  friend std::pair<PolyModEll, PolyModEll> divmod(const PolyModEll& x, const PolyModEll& y) {
    check(x, y);
    if (y.is_zero()) throw Error(ErrorCode::PreconditionViolated, "division by the zero polynomial");
    const std::int64_t p = x.p_;
    std::vector<std::int64_t> rem = x.c_;
    const std::size_t dy = y.c_.size() - 1;
    if (rem.size() < y.c_.size()) return {PolyModEll(p), x};
    std::vector<std::int64_t> quo(rem.size() - dy, 0);
    const std::int64_t inv_lead = arith::inv_mod(y.leading(), p);
    for (std::size_t k = rem.size(); k-- > dy;) {
      const std::int64_t c = arith::mul_mod(rem[k], inv_lead, p);
      quo[k - dy] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dy; ++j)
        rem[k - dy + j] = arith::mod(rem[k - dy + j] - arith::mul_mod(c, y.c_[j], p), p);
    }
    return {PolyModEll(p, std::move(quo)), PolyModEll(p, std::move(rem))};
  }

  PolyModEll monic() const {
    if (is_zero()) return *this;
    const std::int64_t inv = arith::inv_mod(leading(), p_);
    std::vector<std::int64_t> out = c_;
    for (auto& x : out) x = arith::mul_mod(x, inv, p_);
    return PolyModEll(p_, std::move(out));
  }

  /// Scaled to constant term 1 when that term is nonzero, monic otherwise.
  PolyModEll normalized() const {
    if (is_zero() || c_.front() == 0) return monic();
    const std::int64_t inv = arith::inv_mod(c_.front(), p_);
    std::vector<std::int64_t> out = c_;
    for (auto& x : out) x = arith::mul_mod(x, inv, p_);
    return PolyModEll(p_, std::move(out));
  }

  bool operator==(const PolyModEll&) const = default;

  /// "1 + 2X + 2X^2 (mod 5)".
  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (k == 0 || c_[k] != 1) out << c_[k];
      if (k >= 1) out << 'X';
      if (k >= 2) out << '^' << k;
    }
    if (first) out << '0';
    out << " (mod " << p_ << ')';
    return out.str();
  }

 private:
  static void check(const PolyModEll& x, const PolyModEll& y) {
    if (x.p_ != y.p_) throw Error(ErrorCode::PreconditionViolated, "polynomials over different fields");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::int64_t p_;
  std::vector<std::int64_t> c_;
};

/// gcd by Euclid, normalized as in PolyModEll::normalized; gcd(0, 0) = 0.
inline PolyModEll gcd_poly(PolyModEll x, PolyModEll y) {
  while (!y.is_zero()) {
    auto r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.normalized();
}

inline bool poly_divides(const PolyModEll& d, const PolyModEll& x) {
  if (d.is_zero()) return x.is_zero();
  return divmod(x, d).second.is_zero();
}

}  // namespace segcalc
