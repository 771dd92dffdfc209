#pragma once

// Property suites over exhaustive or seeded random inputs. Each suite stops at
// the first counterexample and reports it in text form.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "segcalc/enumerate.hpp"
#include "segcalc/genext.hpp"
#include "segcalc/io.hpp"
#include "segcalc/lfactor.hpp"
#include "segcalc/order.hpp"
#include "segcalc/quiver.hpp"

namespace segcalc {

struct CheckResult {
  std::string suite;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;
  std::vector<std::string> notes;
  double seconds = 0;

  /// Records one case; returns false (and keeps the first message) on failure.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      counterexample = describe();
    }
    return ok;
  }
};

struct CheckOptions {
  std::vector<std::int64_t> orders{2, 3};
  std::int64_t max_deg = 6;
  std::int64_t p = 101;
  std::size_t samples = 32;
  std::uint64_t seed = 7;
  std::size_t random_cases = 10000;
  SerreRelations relations = SerreRelations::WithCycle;
};

namespace detail {

template <typename Body>
CheckResult timed(std::string name, Body body) {
  CheckResult r;
  r.suite = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string residues_string(const Word& w) {
  std::string out;
  for (const auto& x : w) out += std::to_string(x.residue) + (w.size() > 1 ? " " : "");
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return '"' + out + '"';
}

inline std::vector<std::int64_t> residues_of(const Word& w) {
  std::vector<std::int64_t> out;
  for (const auto& x : w) out.push_back(x.residue);
  return out;
}

}  // namespace detail

/// The image of m_gen on words of length k is exactly the set of aperiodic
/// multisegments of total length k.
inline CheckResult check_image(const CheckOptions& opt) {
  return detail::timed("image", [&](CheckResult& r) {
    for (auto o : opt.orders) {
      const Catalog cat = catalog_with_order(o);
      for (std::int64_t k = 0; k <= opt.max_deg; ++k) {
        std::set<Multisegment> image;
        for (const auto& w : words_of_length(cat, 0, static_cast<std::size_t>(k))) image.insert(m_gen(cat, w));
        std::set<Multisegment> aperiodic;
        for (const auto& m : multisegments_of_length(cat, 0, k))
          if (is_aperiodic(cat, m)) aperiodic.insert(m);
        for (const auto& m : aperiodic)
          r.expect(image.count(m) > 0, [&] { return "o=" + std::to_string(o) + ": " + to_string(cat, m) + " is aperiodic but not in the image"; });
        for (const auto& m : image)
          r.expect(aperiodic.count(m) > 0, [&] { return "o=" + std::to_string(o) + ": m_gen image " + to_string(cat, m) + " is not aperiodic"; });
      }
    }
  });
}

/// serre_equivalent(w, v) <=> m_gen(w) = m_gen(v) for all words of length <= max_len.
inline CheckResult check_serre(const CheckOptions& opt, std::int64_t max_len = 5) {
  return detail::timed("serre", [&](CheckResult& r) {
    for (auto o : opt.orders) {
      const Catalog cat = catalog_with_order(o);
      for (std::int64_t k = 0; k <= max_len; ++k) {
        const auto words = words_of_length(cat, 0, static_cast<std::size_t>(k));
        std::map<Multisegment, std::set<std::vector<std::int64_t>>> fibres;
        for (const auto& w : words) fibres[m_gen(cat, w)].insert(detail::residues_of(w));
        std::set<std::vector<std::int64_t>> done;
        for (const auto& w : words) {
          const auto rw = detail::residues_of(w);
          if (done.count(rw)) continue;
          const auto cls = serre_class(cat, 0, rw, opt.relations);
          done.insert(cls.begin(), cls.end());
          const auto& fibre = fibres.at(m_gen(cat, w));
          for (const auto& v : fibre)
            r.expect(cls.count(v) > 0, [&] {
              return "o=" + std::to_string(o) + ": " + detail::residues_string(w) + " and " +
                     detail::residues_string(make_word(cat, 0, v)) + " have equal m_gen but are not related";
            });
          for (const auto& v : cls)
            r.expect(fibre.count(v) > 0, [&] {
              return "o=" + std::to_string(o) + ": " + detail::residues_string(w) + " and " +
                     detail::residues_string(make_word(cat, 0, v)) + " are related but m_gen differs";
            });
        }
      }
    }
  });
}

/// leq(n, m) <=> hom_leq(n, m) on all same-support pairs of total length <= max_deg.
inline CheckResult check_order_oracle(const CheckOptions& opt) {
  return detail::timed("order-oracle", [&](CheckResult& r) {
    for (auto o : opt.orders) {
      const Catalog cat = catalog_with_order(o);
      for (std::int64_t d = 0; d <= opt.max_deg; ++d) {
        std::map<std::vector<std::size_t>, std::vector<std::pair<Multisegment, std::vector<std::size_t>>>> groups;
        for (const auto& m : multisegments_of_length(cat, 0, d)) {
          const QuiverRep rep = build_rep(o, m, opt.p);
          groups[rep.dims].push_back({m, hom_profile(rep, d + o)});
        }
        for (const auto& [dims, group] : groups)
          for (const auto& [n, pn] : group)
            for (const auto& [m, pm] : group) {
              bool hom = true;
              for (std::size_t k = 0; k < pn.size(); ++k) hom = hom && pm[k] >= pn[k];
              const bool comb = leq(cat, n, m);
              r.expect(hom == comb, [&] {
                return "o=" + std::to_string(o) + ": leq(" + to_string(cat, n) + ", " + to_string(cat, m) +
                       ") = " + (comb ? "true" : "false") + " but hom_leq = " + (hom ? "true" : "false");
              });
            }
      }
    }
  });
}

/// left_add / right_add against generic extensions of explicit representations,
/// and minimality of the generic extension among sampled extensions.
inline CheckResult check_genext_oracle(const CheckOptions& opt) {
  return detail::timed("genext-oracle", [&](CheckResult& r) {
    for (auto o : opt.orders) {
      const Catalog cat = catalog_with_order(o);
      for (std::int64_t d = 0; d <= opt.max_deg; ++d)
        for (const auto& m : multisegments_of_length(cat, 0, d))
          for (std::int64_t i = 0; i < o; ++i) {
            const Multisegment simple{Segment{0, i, 1}};
            const auto left = generic_ext_oracle(o, simple, m, opt.p, opt.samples, opt.seed);
            r.expect(left == left_add(cat, Letter{0, i}, m), [&] {
              return "o=" + std::to_string(o) + ": oracle [" + std::to_string(i) + "] * " + to_string(cat, m) +
                     " = " + to_string(cat, left) + " but left_add gives " + to_string(cat, left_add(cat, Letter{0, i}, m));
            });
            const auto right = generic_ext_oracle(o, m, simple, opt.p, opt.samples, opt.seed);
            r.expect(right == right_add(cat, m, Letter{0, i}), [&] {
              return "o=" + std::to_string(o) + ": oracle " + to_string(cat, m) + " * [" + std::to_string(i) +
                     "] = " + to_string(cat, right) + " but right_add gives " + to_string(cat, right_add(cat, m, Letter{0, i}));
            });
          }
      // Every sampled extension degenerates from the generic one.
      for (std::int64_t d1 = 1; d1 <= 2; ++d1)
        for (std::int64_t d2 = 1; d1 + d2 <= std::min<std::int64_t>(opt.max_deg, 4); ++d2)
          for (const auto& m : multisegments_of_length(cat, 0, d1))
            for (const auto& n : multisegments_of_length(cat, 0, d2)) {
              const ExtSpace ext = ext_space(build_rep(o, m, opt.p), build_rep(o, n, opt.p));
              const auto generic = generic_ext_oracle(o, m, n, opt.p, opt.samples, opt.seed);
              for (const auto& x : sampled_extensions(ext, 4, opt.seed)) {
                const auto rx = recover_multisegment(x);
                r.expect(leq(cat, generic, rx), [&] {
                  return "o=" + std::to_string(o) + ": extension " + to_string(cat, rx) + " of " + to_string(cat, m) +
                         " by " + to_string(cat, n) + " is not above the generic " + to_string(cat, generic);
                });
              }
            }
    }
  });
}

/// star is monotone in both arguments, and the long-segment degenerations hold.
inline CheckResult check_monotonicity(const CheckOptions& opt) {
  return detail::timed("monotonicity", [&](CheckResult& r) {
    for (auto o : opt.orders) {
      const Catalog cat = catalog_with_order(o);
      std::vector<std::vector<Multisegment>> aperiodic(static_cast<std::size_t>(opt.max_deg) + 1);
      std::map<Multisegment, std::vector<Multisegment>> below;
      for (std::int64_t d = 0; d <= opt.max_deg; ++d)
        for (const auto& m : multisegments_of_length(cat, 0, d)) {
          if (!is_aperiodic(cat, m)) continue;
          aperiodic[static_cast<std::size_t>(d)].push_back(m);
          for (const auto& x : down_set(cat, m))
            if (is_aperiodic(cat, x)) below[m].push_back(x);
        }
      for (std::int64_t d1 = 0; d1 <= opt.max_deg; ++d1)
        for (std::int64_t d2 = 0; d1 + d2 <= opt.max_deg; ++d2)
          for (const auto& m2 : aperiodic[static_cast<std::size_t>(d1)])
            for (const auto& n2 : aperiodic[static_cast<std::size_t>(d2)]) {
              const auto top = star(cat, m2, n2);
              for (const auto& m1 : below[m2])
                for (const auto& n1 : below[n2]) {
                  const auto bottom = star(cat, m1, n1);
                  r.expect(leq(cat, bottom, top), [&] {
                    return "o=" + std::to_string(o) + ": " + to_string(cat, m1) + " <= " + to_string(cat, m2) + ", " +
                           to_string(cat, n1) + " <= " + to_string(cat, n2) + " but " + to_string(cat, bottom) +
                           " is not below " + to_string(cat, top);
                  });
                }
            }
      for (std::int64_t d = 1; d <= opt.max_deg; ++d)
        for (const auto& m : multisegments_of_length(cat, 0, d))
          for (const auto& s : m) {
            Multisegment rest = m;
            rest.remove(s);
            Multisegment left = rest;
            if (auto t = shrink_left(cat, s)) left.add(*t);
            const auto lx = left_add(cat, Letter{0, s.a}, left);
            r.expect(leq(cat, lx, m), [&] {
              return "o=" + std::to_string(o) + ": left_add at " + to_string(cat, s) + " in " + to_string(cat, m) +
                     " gives " + to_string(cat, lx) + ", not below";
            });
            Multisegment right = rest;
            if (auto t = shrink_right(cat, s)) right.add(*t);
            const auto rx = right_add(cat, right, Letter{0, s.b()});
            r.expect(leq(cat, rx, m), [&] {
              return "o=" + std::to_string(o) + ": right_add at " + to_string(cat, s) + " in " + to_string(cat, m) +
                     " gives " + to_string(cat, rx) + ", not below";
            });
          }
    }
  });
}

namespace detail {

/// (l, q, f) with 1 < ord(q^f) <= 4, l in {3, 5, 7}, f <= 3.
struct RatioSetting {
  std::int64_t ell, q, f, o;
};

inline std::vector<RatioSetting> ratio_settings() {
  std::vector<RatioSetting> out;
  for (std::int64_t ell : {3, 5, 7})
    for (std::int64_t q = 2; q < ell; ++q)
      for (std::int64_t f = 1; f <= 3; ++f) {
        const auto o = line_order(f, Context::modular(ell, q)).n;
        if (o >= 2 && o <= 4) out.push_back({ell, q, f, o});
      }
  return out;
}

/// A random catalog for a setting: one self-dual line "L", or a dual pair "A", "B".
inline Catalog ratio_catalog(const RatioSetting& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> twist(1, s.ell - 1);
  const std::int64_t t = twist(rng);
  const Context ctx = Context::modular(s.ell, s.q);
  if (rng() % 2 == 0) return Catalog(ctx, {CuspidalLine{"L", s.f, "L", t, 1}});
  return Catalog(ctx, {CuspidalLine{"A", s.f, "B", t, 1}, CuspidalLine{"B", s.f, "A", t, 1}});
}

inline Segment random_segment(const Catalog& cat, LineId line, std::mt19937_64& rng, std::int64_t max_len) {
  const std::int64_t span = std::max<std::int64_t>(cat.period(line).n, 1);
  std::uniform_int_distribution<std::int64_t> a(0, span - 1), len(1, max_len);
  return normalize(cat, Segment{line, a(rng), len(rng)});
}

inline Multisegment random_multisegment(const Catalog& cat, std::mt19937_64& rng, std::size_t max_count,
                                        std::int64_t max_len) {
  std::uniform_int_distribution<std::size_t> count(0, max_count);
  std::uniform_int_distribution<LineId> line(0, static_cast<LineId>(cat.size() - 1));
  Multisegment m;
  for (std::size_t k = count(rng); k > 0; --k) m.add(random_segment(cat, line(rng), rng, max_len));
  return m;
}

}  // namespace detail

/// The two ratio lemmas, banal reduction, and coprimality of distinct inverse roots.
inline CheckResult check_lfactor_ratios(const CheckOptions& opt) {
  return detail::timed("lfactor-ratios", [&](CheckResult& r) {
    std::mt19937_64 rng(opt.seed);
    const auto settings = detail::ratio_settings();
    std::uniform_int_distribution<std::size_t> pick(0, settings.size() - 1);
    auto describe = [](const Catalog& cat, const std::string& what, const Multisegment& m, const Multisegment& n,
                       const RatioCheck& rc) {
      return what + " on l=" + std::to_string(cat.context().ell()) + ", q=" + std::to_string(cat.context().q()) +
             ", f=" + std::to_string(cat.lines().front().f) + ": m=" + to_string(cat, m) + ", n=" + to_string(cat, n) +
             ", quotient=" + (rc.quotient ? rc.quotient->to_string() : std::string("not a sub-multiset")) +
             ", predicted=" + rc.predicted.to_string();
    };
    for (std::size_t c = 0; c < opt.random_cases; ++c) {
      const auto& s = settings[pick(rng)];
      const Catalog cat = detail::ratio_catalog(s, rng);
      const Multisegment n = detail::random_multisegment(cat, rng, 4, 5);
      // A periodic pair [a,b] + [a+1,b+1] on the first line plus noise.
      Multisegment m = detail::random_multisegment(cat, rng, 3, 5);
      const Segment lower = detail::random_segment(cat, 0, rng, 4);
      m.add(lower);
      m.add(normalize(cat, Segment{0, lower.a + 1, lower.len}));
      const RatioCheck ap = ratio_aperiodic(cat, m, n, lower);
      r.expect(ap.holds(), [&] { return describe(cat, "ratio_aperiodic at " + to_string(cat, lower), m, n, ap); });

      Multisegment m2 = detail::random_multisegment(cat, rng, 4, 5);
      m2.add(detail::random_segment(cat, 0, rng, 5));
      const RatioCheck red = ratio_red(cat, m2, n);
      r.expect(red.holds(), [&] { return describe(cat, "ratio_red", m2, n, red); });
    }

    // Banal reduction on catalogs mixing a line with o > 1 and a line with o = 1.
    struct Mixed {
      std::int64_t ell, q, f_banal, f_flat;
    };
    const std::vector<Mixed> mixed{{3, 2, 1, 2}, {5, 4, 1, 2}, {5, 2, 2, 4}, {7, 2, 1, 3}, {7, 6, 1, 2}, {7, 3, 2, 6}};
    std::uniform_int_distribution<std::size_t> pick_mixed(0, mixed.size() - 1);
    for (std::size_t c = 0; c < opt.random_cases / 5; ++c) {
      const auto& s = mixed[pick_mixed(rng)];
      std::uniform_int_distribution<std::int64_t> twist(1, s.ell - 1);
      const std::int64_t t1 = twist(rng), t2 = twist(rng);
      const Catalog cat(Context::modular(s.ell, s.q),
                        {CuspidalLine{"L", s.f_banal, "L", t1, 1}, CuspidalLine{"N", s.f_flat, "N", t2, 1}});
      const Multisegment m = detail::random_multisegment(cat, rng, 5, 4);
      const Multisegment n = detail::random_multisegment(cat, rng, 5, 4);
      const auto full = l_multisegment(cat, m, n);
      const auto banal = l_multisegment(cat, banal_split(cat, m).first, banal_split(cat, n).first);
      r.expect(full == banal, [&] {
        return "banal reduction: m=" + to_string(cat, m) + ", n=" + to_string(cat, n) + ": " + full.to_string() +
               " vs " + banal.to_string();
      });
    }

    for (std::int64_t ell : {3, 5, 7})
      for (std::int64_t f = 1; f <= 4; ++f)
        for (std::int64_t alpha = 1; alpha < ell; ++alpha)
          for (std::int64_t beta = 1; beta < ell; ++beta) {
            const std::int64_t af = arith::pow_mod(alpha, static_cast<std::uint64_t>(f), ell);
            const std::int64_t bf = arith::pow_mod(beta, static_cast<std::uint64_t>(f), ell);
            if (af == bf) continue;
            const auto g = gcd_poly(PolyModEll::one_minus(ell, af, f), PolyModEll::one_minus(ell, bf, f));
            r.expect(g == PolyModEll::one(ell), [&] {
              return "gcd(1-(" + std::to_string(alpha) + "X)^" + std::to_string(f) + ", 1-(" + std::to_string(beta) +
                     "X)^" + std::to_string(f) + ") = " + g.to_string();
            });
          }
  });
}

/// Structural roundtrips: quiver recovery, word extraction, and both dualities.
inline CheckResult check_roundtrips(const CheckOptions& opt) {
  return detail::timed("roundtrips", [&](CheckResult& r) {
    std::vector<std::int64_t> orders = opt.orders;
    if (std::find(orders.begin(), orders.end(), 1) == orders.end()) orders.insert(orders.begin(), 1);
    for (auto o : orders) {
      const Catalog cat = catalog_with_order(o);
      for (std::int64_t d = 0; d <= opt.max_deg; ++d) {
        for (const auto& m : multisegments_of_length(cat, 0, d)) {
          const auto back = recover_multisegment(build_rep(o, m, opt.p));
          r.expect(back == m, [&] { return "recover(build(" + to_string(cat, m) + ")) = " + to_string(cat, back); });
          r.expect(dual(cat, dual(cat, m)) == m, [&] { return "dual is not an involution at " + to_string(cat, m); });
          // Word extraction presumes o > 1: on a one-point line m_gen only reaches single segments.
          if (o > 1 && is_aperiodic(cat, m)) {
            const auto w = word_of(cat, m);
            const auto again = m_gen(cat, w);
            r.expect(again == m, [&] {
              return "o=" + std::to_string(o) + ": m_gen(word_of(" + to_string(cat, m) + ")) = " + to_string(cat, again);
            });
          }
        }
        for (const auto& w : words_of_length(cat, 0, static_cast<std::size_t>(d))) {
          const auto wd = word_dual(cat, w);
          r.expect(word_dual(cat, wd) == w, [&] { return "word_dual is not an involution at " + detail::residues_string(w); });
          const auto lhs = m_gen(cat, wd);
          const auto rhs = dual(cat, m_gen(cat, w));
          r.expect(lhs == rhs, [&] {
            return "o=" + std::to_string(o) + ": m_gen(word_dual(" + detail::residues_string(w) + ")) = " +
                   to_string(cat, lhs) + " but dual(m_gen) = " + to_string(cat, rhs);
          });
        }
      }
    }
    // Characteristic zero: every multisegment has a word.
    const Catalog zero = Catalog::single_line(Context::char_zero());
    for (std::int64_t d = 0; d <= std::min<std::int64_t>(opt.max_deg, 5); ++d)
      for_each_multisegment(zero, 0, d, [&](const Multisegment& m) {
        const auto again = m_gen(zero, word_of(zero, m));
        r.expect(again == m, [&] { return "char 0: m_gen(word_of(" + to_string(zero, m) + ")) = " + to_string(zero, again); });
      }, 0, 3);
  });
}

/// Hand-computed instances, each recomputed along an independent path.
inline CheckResult check_worked_examples(const CheckOptions& opt) {
  return detail::timed("worked-examples", [&](CheckResult& r) {
    const Catalog c3 = catalog_with_order(3);
    auto ms = [&](const char* text) { return parse_multisegment(c3, text); };
    auto oracle_fold = [&](const Word& w) {
      Multisegment acc;
      for (const auto& x : w) acc = generic_ext_oracle(3, acc, Multisegment{Segment{0, x.residue, 1}}, opt.p, opt.samples, opt.seed);
      return acc;
    };
    for (const auto& [word, expected] : std::vector<std::pair<const char*, const char*>>{{"L:0,L:1", "L[0,1]"}, {"L:0,L:1,L:2", "L[0,2]"}}) {
      const Word w = parse_word(c3, word);
      r.expect(m_gen(c3, w) == ms(expected), [&] { return std::string("m_gen(") + word + ") = " + to_string(c3, m_gen(c3, w)); });
      r.expect(oracle_fold(w) == ms(expected), [&] { return std::string("oracle fold of ") + word + " = " + to_string(c3, oracle_fold(w)); });
    }
    r.expect(star(c3, ms("L[0,0]"), ms("L[1,1]")) == ms("L[0,1]"), [] { return std::string("star([0,0],[1,1]) != [0,1]"); });
    r.expect(generic_ext_oracle(3, ms("L[0,0]"), ms("L[1,1]"), opt.p, opt.samples, opt.seed) == ms("L[0,1]"),
             [] { return std::string("oracle [0,0]*[1,1] != [0,1]"); });

    const Multisegment top = ms("L[0,0]+L[1,1]+L[2,2]");
    const std::set<Multisegment> expected{ms("L[0,1]+L[2,2]"), ms("L[1,2]+L[0,0]"), ms("L[2,3]+L[1,1]")};
    r.expect(aperiodic_below(c3, top) == expected, [] { return std::string("aperiodic_below([0,0]+[1,1]+[2,2]) differs"); });
    // The same maxima through the Hom-order.
    std::vector<Multisegment> candidates;
    const auto dims = build_rep(3, top, opt.p).dims;
    for (const auto& m : multisegments_of_length(c3, 0, 3))
      if (is_aperiodic(c3, m) && build_rep(3, m, opt.p).dims == dims && hom_leq(3, m, top, opt.p)) candidates.push_back(m);
    std::set<Multisegment> maxima;
    for (const auto& x : candidates) {
      bool dominated = false;
      for (const auto& y : candidates) dominated = dominated || (x != y && hom_leq(3, x, y, opt.p));
      if (!dominated) maxima.insert(x);
    }
    r.expect(maxima == expected, [] { return std::string("Hom-order maxima below [0,0]+[1,1]+[2,2] differ"); });

    const Catalog c5 = Catalog::single_line(Context::modular(5, 3));
    const auto l = l_multisegment(c5, parse_multisegment(c5, "L[0,0]+L[1,1]"), parse_multisegment(c5, "L[0,0]"));
    const PolyModEll want(5, {1, 2, 2});
    r.expect(expand(c5, l) == want, [&] { return "L expands to " + expand(c5, l).to_string(); });
    const auto direct = PolyModEll::one_minus(5, 1, 1) * PolyModEll::one_minus(5, 2, 1);
    r.expect(direct == want, [&] { return "(1-X)(1-2X) = " + direct.to_string(); });
  });
}

/// Suites addressable by name; the order here is the order `all` runs them in.
inline const std::vector<std::pair<std::string, std::function<CheckResult(const CheckOptions&)>>>& check_suites() {
  static const std::vector<std::pair<std::string, std::function<CheckResult(const CheckOptions&)>>> suites{
      {"image", check_image},
      {"serre", [](const CheckOptions& o) { return check_serre(o); }},
      {"order-oracle", check_order_oracle},
      {"genext-oracle", check_genext_oracle},
      {"monotonicity", check_monotonicity},
      {"lfactor-ratios", check_lfactor_ratios},
      {"roundtrips", check_roundtrips},
      {"worked-examples", check_worked_examples},
  };
  return suites;
}

}  // namespace segcalc
