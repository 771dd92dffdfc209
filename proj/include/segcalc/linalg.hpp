#pragma once

// Dense linear algebra over a prime field F_p, sized for the oracle suites.

#include <cstdint>
#include <optional>
#include <vector>

#include "segcalc/arith.hpp"
#include "segcalc/error.hpp"

namespace segcalc {

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::int64_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n, std::int64_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t modulus() const noexcept { return p_; }

  std::int64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { a_[r * cols_ + c] = arith::mod(v, p_); }
  void add(std::size_t r, std::size_t c, std::int64_t v) { set(r, c, at(r, c) + v); }

  bool is_zero() const {
    for (auto x : a_)
      if (x != 0) return false;
    return true;
  }

  friend FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes differ");
    FpMatrix out(x.rows_, y.cols_, x.p_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const std::int64_t v = x.at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          out.a_[i * out.cols_ + j] = (out.a_[i * out.cols_ + j] + v * y.at(k, j)) % x.p_;
      }
    return out;
  }

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t p_ = 2;
  std::vector<std::int64_t> a_;
};

/// Incrementally built row space in reduced echelon form.
class RowSpace {
 public:
  RowSpace(std::size_t width, std::int64_t p) : width_(width), p_(p) {}

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }

  /// Reduces v against the basis; the result is zero exactly when v lies in the span.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::int64_t c = v[pivots_[k]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) v[j] = arith::mod(v[j] - c * rows_[k][j], p_);
    }
    return v;
  }

  /// Adds v; false when v was already in the span.
  bool insert(std::vector<std::int64_t> v) {
    for (auto& x : v) x = arith::mod(x, p_);
    v = reduce(std::move(v));
    std::size_t pivot = 0;
    while (pivot < width_ && v[pivot] == 0) ++pivot;
    if (pivot == width_) return false;
    const std::int64_t inv = arith::inv_mod(v[pivot], p_);
    for (auto& x : v) x = arith::mul_mod(x, inv, p_);
    for (auto& row : rows_) {
      const std::int64_t c = row[pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) row[j] = arith::mod(row[j] - c * v[j], p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

 private:
  std::size_t width_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const FpMatrix& m) {
  RowSpace space(m.cols(), m.modulus());
  std::vector<std::int64_t> row(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    space.insert(row);
  }
  return space.dim();
}

}  // namespace segcalc
