#pragma once

// Nilpotent representations of the cyclic quiver with n vertices over F_p.
// This module only uses plain linear algebra, so it can act as an oracle for
// the combinatorial modules.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "segcalc/linalg.hpp"
#include "segcalc/multisegment.hpp"

namespace segcalc {

/// Vector spaces V_0..V_{n-1} with T_i : V_i -> V_{i+1 mod n}.
struct QuiverRep {
  std::int64_t n = 1;
  std::int64_t p = 101;
  std::vector<std::size_t> dims;
  std::vector<FpMatrix> maps;  // maps[i] is dims[i+1] x dims[i]

  static QuiverRep zero(std::int64_t n, std::int64_t p, std::vector<std::size_t> dims) {
    QuiverRep r{n, p, std::move(dims), {}};
    for (std::int64_t i = 0; i < n; ++i) r.maps.emplace_back(r.dim(i + 1), r.dim(i), p);
    return r;
  }

  std::size_t vertex(std::int64_t i) const { return static_cast<std::size_t>(arith::mod(i, n)); }
  std::size_t dim(std::int64_t i) const { return dims[vertex(i)]; }
  const FpMatrix& map(std::int64_t i) const { return maps[vertex(i)]; }
  std::size_t total_dim() const {
    std::size_t d = 0;
    for (auto x : dims) d += x;
    return d;
  }
};

/// The path map V_i -> V_{i+len} of length len.
inline FpMatrix path_map(const QuiverRep& r, std::int64_t i, std::int64_t len) {
  FpMatrix acc = FpMatrix::identity(r.dim(i), r.p);
  for (std::int64_t k = 0; k < len; ++k) acc = r.map(i + k) * acc;
  return acc;
}

/// Direct sum of the indecomposables of the segments of m, read modulo n:
/// basis e_1..e_len, e_k at vertex a+k-1, T e_k = e_{k+1}, T e_len = 0.
inline QuiverRep build_rep(std::int64_t n, const Multisegment& m, std::int64_t p) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  struct Slot {
    std::size_t vertex, index;
  };
  std::vector<std::vector<Slot>> chains;
  for (const auto& s : m) {
    std::vector<Slot> chain;
    for (std::int64_t k = 0; k < s.len; ++k) {
      const auto v = static_cast<std::size_t>(arith::mod(s.a + k, n));
      chain.push_back({v, dims[v]++});
    }
    chains.push_back(std::move(chain));
  }
  QuiverRep r = QuiverRep::zero(n, p, dims);
  for (const auto& chain : chains)
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) r.maps[chain[k].vertex].set(chain[k + 1].index, chain[k].index, 1);
  return r;
}

/// build_rep for a multisegment on one finite line of a catalog.
inline QuiverRep build_rep(const Catalog& cat, const Multisegment& m, std::int64_t p) {
  const auto lines = m.lines();
  if (lines.size() > 1) throw Error(ErrorCode::DifferentLines, "quiver representations live on one line");
  const Period o = lines.empty() ? cat.period(0) : cat.period(lines.front());
  if (!o.is_finite()) throw Error(ErrorCode::InfiniteOrder, "the cyclic quiver needs a finite line");
  return build_rep(o.n, m, p);
}

namespace detail {

inline void check_compatible(const QuiverRep& x, const QuiverRep& y) {
  if (x.n != y.n || x.p != y.p) throw Error(ErrorCode::DimensionMismatch, "representations of different quivers");
}

/// Offsets of the blocks Hom(X_i, Y_{i+shift}) inside a flattened graded Hom space.
inline std::vector<std::size_t> hom_offsets(const QuiverRep& x, const QuiverRep& y, std::int64_t shift) {
  std::vector<std::size_t> off(static_cast<std::size_t>(x.n) + 1, 0);
  for (std::int64_t i = 0; i < x.n; ++i)
    off[static_cast<std::size_t>(i) + 1] = off[static_cast<std::size_t>(i)] + y.dim(i + shift) * x.dim(i);
  return off;
}

/// The map phi -> (phi_{i+1} T^X_i - T^Y_i phi_i)_i from graded Hom(X, Y) to
/// the graded maps X_i -> Y_{i+1}, as a matrix acting on flattened coordinates.
inline FpMatrix difference_map(const QuiverRep& x, const QuiverRep& y) {
  check_compatible(x, y);
  const auto src = hom_offsets(x, y, 0);
  const auto dst = hom_offsets(x, y, 1);
  FpMatrix d(dst.back(), src.back(), x.p);
  for (std::int64_t i = 0; i < x.n; ++i) {
    const auto vi = static_cast<std::size_t>(i);
    const auto vn = x.vertex(i + 1);
    const std::size_t rows = y.dim(i + 1), cols = x.dim(i);
    const FpMatrix& tx = x.map(i);
    const FpMatrix& ty = y.map(i);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t out = dst[vi] + r * cols + c;
        // (phi_{i+1} T^X_i)[r][c] = sum_k phi_{i+1}[r][k] T^X_i[k][c]
        for (std::size_t k = 0; k < x.dim(i + 1); ++k)
          if (tx.at(k, c) != 0) d.add(out, src[vn] + r * x.dim(i + 1) + k, tx.at(k, c));
        // (T^Y_i phi_i)[r][c] = sum_k T^Y_i[r][k] phi_i[k][c]
        for (std::size_t k = 0; k < y.dim(i); ++k)
          if (ty.at(r, k) != 0) d.add(out, src[vi] + k * cols + c, -ty.at(r, k));
      }
  }
  return d;
}

}  // namespace detail

/// dim Hom(X, Y) as the kernel dimension of the difference map.
inline std::size_t hom_dim(const QuiverRep& x, const QuiverRep& y) {
  const FpMatrix d = detail::difference_map(x, y);
  return d.cols() - rank(d);
}

/// dim of the orbit of X under prod GL(d_i): sum d_i^2 - dim End(X).
inline std::size_t orbit_dim(const QuiverRep& x) {
  std::size_t g = 0;
  for (auto d : x.dims) g += d * d;
  return g - hom_dim(x, x);
}

/// Whether every long enough composite around the cycle vanishes.
inline bool is_nilpotent(const QuiverRep& x) {
  const auto steps = static_cast<std::int64_t>(x.total_dim()) + 1;
  for (std::int64_t i = 0; i < x.n; ++i)
    if (!path_map(x, i, steps).is_zero()) return false;
  return true;
}

/// The multisegment m with build_rep(m) isomorphic to X, placed on `line`.
///
/// With r(i, l) the rank of the path map of length l out of vertex i, the
/// number of segments of length L ending at vertex j is
///   r(j-L+1, L-1) - r(j-L+1, L) - r(j-L, L) + r(j-L, L+1).
inline Multisegment recover_multisegment(const QuiverRep& x, LineId line = 0) {
  if (!is_nilpotent(x)) throw Error(ErrorCode::NotNilpotent, "the representation is not nilpotent");
  const auto max_len = static_cast<std::int64_t>(x.total_dim());
  std::vector<std::vector<std::int64_t>> r(static_cast<std::size_t>(x.n),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(max_len) + 2, 0));
  for (std::int64_t i = 0; i < x.n; ++i) {
    FpMatrix acc = FpMatrix::identity(x.dim(i), x.p);
    for (std::int64_t l = 0; l <= max_len + 1; ++l) {
      r[x.vertex(i)][static_cast<std::size_t>(l)] = static_cast<std::int64_t>(rank(acc));
      acc = x.map(i + l) * acc;
    }
  }
  auto rk = [&](std::int64_t i, std::int64_t l) { return r[x.vertex(i)][static_cast<std::size_t>(l)]; };
  std::vector<Segment> out;
  for (std::int64_t j = 0; j < x.n; ++j)
    for (std::int64_t len = 1; len <= max_len; ++len) {
      const std::int64_t a = j - len + 1;
      const std::int64_t count = rk(a, len - 1) - rk(a, len) - rk(a - 1, len) + rk(a - 1, len + 1);
      for (std::int64_t c = 0; c < count; ++c) out.push_back(Segment{line, arith::mod(a, x.n), len});
    }
  return Multisegment(std::move(out));
}

/// Hom-dimensions against every indecomposable of length <= max_len, in both
/// directions: first Hom(lambda(s), X) for all s, then Hom(X, lambda(s)).
inline std::vector<std::size_t> hom_profile(const QuiverRep& x, std::int64_t max_len) {
  std::vector<std::size_t> into, out_of;
  for (std::int64_t a = 0; a < x.n; ++a)
    for (std::int64_t len = 1; len <= max_len; ++len) {
      const QuiverRep s = build_rep(x.n, Multisegment{Segment{0, a, len}}, x.p);
      into.push_back(hom_dim(s, x));
      out_of.push_back(hom_dim(x, s));
    }
  into.insert(into.end(), out_of.begin(), out_of.end());
  return into;
}

/// n <= m through the Hom-order: lambda(m) lies in the orbit closure of lambda(n)
/// exactly when Hom into and out of every indecomposable is at least as large for m.
inline bool hom_leq(std::int64_t quiver_n, const Multisegment& n, const Multisegment& m, std::int64_t p = 101) {
  const QuiverRep rn = build_rep(quiver_n, n, p);
  const QuiverRep rm = build_rep(quiver_n, m, p);
  if (rn.dims != rm.dims) throw Error(ErrorCode::SupportMismatch, "hom_leq compares equal dimension vectors");
  const auto max_len = static_cast<std::int64_t>(rm.total_dim()) + quiver_n;
  const auto pn = hom_profile(rn, max_len);
  const auto pm = hom_profile(rm, max_len);
  for (std::size_t k = 0; k < pn.size(); ++k)
    if (pm[k] < pn[k]) return false;
  return true;
}

/// Ext^1(N, M): extensions 0 -> M -> X -> N -> 0, each given by a cocycle
/// c = (c_i : N_i -> M_{i+1}) stored block by block in row-major order.
struct ExtSpace {
  QuiverRep quotient;  // N
  QuiverRep sub;       // M
  std::vector<std::vector<std::int64_t>> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  /// Width of a flattened cocycle.
  std::size_t width() const { return detail::hom_offsets(quotient, sub, 1).back(); }
};

inline ExtSpace ext_space(const QuiverRep& quotient, const QuiverRep& sub) {
  const FpMatrix d = detail::difference_map(quotient, sub);
  RowSpace image(d.rows(), quotient.p);
  std::vector<std::int64_t> col(d.rows());
  for (std::size_t j = 0; j < d.cols(); ++j) {
    for (std::size_t i = 0; i < d.rows(); ++i) col[i] = d.at(i, j);
    image.insert(col);
  }
  ExtSpace out{quotient, sub, {}};
  // Complete the coboundaries to the whole space with standard vectors.
  for (std::size_t k = 0; k < d.rows(); ++k) {
    std::vector<std::int64_t> e(d.rows(), 0);
    e[k] = 1;
    if (image.insert(e)) out.basis.push_back(std::move(e));
  }
  return out;
}

/// The total space with T = [[T^M, c], [0, T^N]] on M_i + N_i.
inline QuiverRep extension(const ExtSpace& ext, const std::vector<std::int64_t>& cocycle) {
  const QuiverRep& m = ext.sub;
  const QuiverRep& nq = ext.quotient;
  std::vector<std::size_t> dims(static_cast<std::size_t>(m.n));
  for (std::int64_t i = 0; i < m.n; ++i) dims[static_cast<std::size_t>(i)] = m.dim(i) + nq.dim(i);
  QuiverRep x = QuiverRep::zero(m.n, m.p, dims);
  const auto off = detail::hom_offsets(nq, m, 1);
  for (std::int64_t i = 0; i < m.n; ++i) {
    FpMatrix& t = x.maps[static_cast<std::size_t>(i)];
    const std::size_t dm = m.dim(i), dm1 = m.dim(i + 1);
    for (std::size_t r = 0; r < dm1; ++r)
      for (std::size_t c = 0; c < dm; ++c) t.set(r, c, m.map(i).at(r, c));
    for (std::size_t r = 0; r < nq.dim(i + 1); ++r)
      for (std::size_t c = 0; c < nq.dim(i); ++c) t.set(dm1 + r, dm + c, nq.map(i).at(r, c));
    for (std::size_t r = 0; r < dm1; ++r)
      for (std::size_t c = 0; c < nq.dim(i); ++c)
        t.set(r, dm + c, cocycle[off[static_cast<std::size_t>(i)] + r * nq.dim(i) + c]);
  }
  return x;
}

/// Every extension the generic-extension search looks at: the split one, one
/// per basis cocycle, and `samples` random cocycles drawn with `seed`.
inline std::vector<QuiverRep> sampled_extensions(const ExtSpace& ext, std::size_t samples, std::uint64_t seed) {
  std::vector<QuiverRep> out;
  const std::size_t width = ext.width();
  out.push_back(extension(ext, std::vector<std::int64_t>(width, 0)));
  for (const auto& c : ext.basis) out.push_back(extension(ext, c));
  if (ext.dim() == 0) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, ext.sub.p - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::int64_t> c(width, 0);
    for (const auto& b : ext.basis) {
      const std::int64_t k = coeff(rng);
      for (std::size_t j = 0; j < width; ++j) c[j] = arith::mod(c[j] + k * b[j], ext.sub.p);
    }
    out.push_back(extension(ext, c));
  }
  return out;
}

/// The generic extension [m] * [n]: lambda(m) on top, lambda(n) as the
/// subrepresentation, with the largest orbit among the sampled extensions.
inline Multisegment generic_ext_oracle(std::int64_t quiver_n, const Multisegment& m, const Multisegment& n,
                                       std::int64_t p = 101, std::size_t samples = 32, std::uint64_t seed = 1) {
  const ExtSpace ext = ext_space(build_rep(quiver_n, m, p), build_rep(quiver_n, n, p));
  const QuiverRep* best = nullptr;
  std::size_t best_dim = 0;
  const auto candidates = sampled_extensions(ext, samples, seed);
  for (const auto& x : candidates) {
    const std::size_t d = orbit_dim(x);
    if (!best || d > best_dim) {
      best = &x;
      best_dim = d;
    }
  }
  return recover_multisegment(*best);
}

}  // namespace segcalc
