#include <gtest/gtest.h>

#include <random>

#include "segcalc/segcalc.hpp"

using namespace segcalc;

namespace {

Catalog line_of_order(std::int64_t ell, std::int64_t q, std::int64_t f = 1) {
  return Catalog::single_line(Context::modular(ell, q), f);
}

Multisegment ms(const Catalog& cat, const char* text) { return parse_multisegment(cat, text); }

}  // namespace

TEST(Context, ModularReducesQ) {
  const Context c = Context::modular(5, 3);
  EXPECT_TRUE(c.is_modular());
  EXPECT_EQ(c.ell(), 5);
  EXPECT_EQ(c.q(), 3);
  EXPECT_EQ(Context::modular(5, 8).q(), 3);
}

TEST(Context, RejectsBadParameters) {
  try {
    Context::modular(5, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::QDivisibleByEll);
  }
  try {
    Context::modular(6, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonPrimeEll);
  }
  EXPECT_FALSE(Context::char_zero().is_modular());
}

TEST(LineOrder, Examples) {
  EXPECT_EQ(line_order(1, Context::modular(5, 3)), Period::finite(4));
  EXPECT_EQ(line_order(2, Context::modular(5, 3)), Period::finite(2));
  EXPECT_FALSE(line_order(1, Context::char_zero()).is_finite());
}

TEST(EOf, Examples) {
  EXPECT_EQ(e_of(1, Context::modular(5, 3)), 4);
  EXPECT_EQ(e_of(1, Context::modular(5, 1)), 5);
  EXPECT_THROW(e_of(1, Context::char_zero()), Error);
}

TEST(Catalog, ValidatesDeclarations) {
  const Context ctx = Context::modular(5, 3);
  EXPECT_THROW(Catalog(ctx, {CuspidalLine{"A", 1, "B", std::int64_t{1}, 1}, CuspidalLine{"B", 2, "A", std::int64_t{1}, 1}}),
               Error);
  EXPECT_THROW(Catalog(ctx, {CuspidalLine{"A", 1, "A", std::int64_t{0}, 1}}), Error);
  EXPECT_THROW(Catalog(ctx, {CuspidalLine{"A", 1, "B", std::int64_t{1}, 1}, CuspidalLine{"B", 1, "C", std::int64_t{1}, 1},
                             CuspidalLine{"C", 1, "A", std::int64_t{1}, 1}}),
               Error);
  const Catalog cat(ctx, {CuspidalLine{"B", 1, "A", std::int64_t{2}, 1}, CuspidalLine{"A", 1, "B", std::int64_t{7}, 1}});
  EXPECT_EQ(cat.line(cat.find("A")).id, "A");
  EXPECT_EQ(cat.dual(cat.find("A")), cat.find("B"));
  EXPECT_EQ(std::get<std::int64_t>(cat.line(0).twist), 2);
}

TEST(Segment, ShrinkAndGrow) {
  const Catalog cat = line_of_order(7, 2);  // o = 3
  EXPECT_EQ(shrink_left(cat, Segment{0, 0, 2}), (Segment{0, 1, 1}));
  EXPECT_FALSE(shrink_right(cat, Segment{0, 0, 1}).has_value());
  EXPECT_EQ(grow_left(cat, Segment{0, 0, 1}), (Segment{0, 2, 2}));
  EXPECT_EQ(grow_right(cat, Segment{0, 2, 1}), (Segment{0, 2, 2}));
}

TEST(Dual, Examples) {
  const Catalog cat = line_of_order(5, 3);  // o = 4
  EXPECT_EQ(dual(cat, ms(cat, "L[0,1]")), (Multisegment{Segment{0, 3, 2}}));
  EXPECT_TRUE(dual(cat, Multisegment{}).empty());
}

TEST(Dual, InvolutionAndDegree) {
  const Context ctx = Context::modular(7, 2);
  const Catalog cat(ctx, {CuspidalLine{"A", 1, "B", std::int64_t{3}, 2}, CuspidalLine{"B", 1, "A", std::int64_t{3}, 2}});
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Multisegment m;
    for (int j = 0; j < 4; ++j)
      m.add(normalize(cat, Segment{static_cast<LineId>(rng() % 2), static_cast<std::int64_t>(rng() % 3),
                                   static_cast<std::int64_t>(1 + rng() % 4)}));
    const auto d = dual(cat, m);
    EXPECT_EQ(dual(cat, d), m);
    EXPECT_EQ(degree(cat, d), degree(cat, m));
    // Support is carried by i -> -i to the dual line.
    const auto sm = support(cat, m);
    const auto sd = support(cat, d);
    for (const auto& [line, counts] : sm)
      for (const auto& [i, c] : counts) EXPECT_EQ(sd.at(cat.dual(line)).at(cat.period(line).reduce(-i)), c);
  }
}

TEST(Dual, MissingDualLine) {
  const Catalog cat(Context::modular(5, 3), {CuspidalLine{"A", 1, "Z", std::int64_t{1}, 1}});
  try {
    dual(cat, ms(cat, "A[0,0]"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingDualLine);
  }
}

TEST(Aperiodic, Examples) {
  const Catalog c3 = line_of_order(7, 2);
  EXPECT_FALSE(is_aperiodic(c3, ms(c3, "L[0,0]+L[1,1]+L[2,2]")));
  const Catalog c2 = line_of_order(3, 2);
  EXPECT_TRUE(is_aperiodic(c2, ms(c2, "L[0,0]+L[0,1]")));
  EXPECT_FALSE(is_aperiodic(c2, ms(c2, "L[0,1]+L[1,2]")));
  const Catalog c0 = Catalog::single_line(Context::char_zero());
  EXPECT_TRUE(is_aperiodic(c0, ms(c0, "L[0,0]+L[1,1]+L[2,2]")));
}

TEST(Aperiodic, OrderOneUsesEll) {
  const Catalog cat = line_of_order(3, 1);  // o = 1, e = 3
  EXPECT_TRUE(is_aperiodic(cat, ms(cat, "L[0,0]+L[0,0]")));
  EXPECT_FALSE(is_aperiodic(cat, ms(cat, "L[0,0]+L[0,0]+L[0,0]")));
}

TEST(Aperiodic, ShiftInvariant) {
  const Catalog cat = line_of_order(5, 2);  // o = 4
  for (std::int64_t d = 1; d <= 5; ++d)
    for (const auto& m : multisegments_of_length(cat, 0, d)) {
      std::vector<Segment> shifted;
      for (const auto& s : m) shifted.push_back(normalize(cat, Segment{s.line, s.a + 1, s.len}));
      EXPECT_EQ(is_aperiodic(cat, m), is_aperiodic(cat, Multisegment(shifted)));
    }
}

TEST(BanalSplit, PartitionsByOrder) {
  const Catalog c4 = line_of_order(5, 3);
  const auto m = ms(c4, "L[0,1]+L[2,2]");
  EXPECT_EQ(banal_split(c4, m), std::make_pair(m, Multisegment{}));
  const Catalog c1 = line_of_order(5, 1);
  const auto m1 = ms(c1, "L[0,1]");
  EXPECT_EQ(banal_split(c1, m1), std::make_pair(Multisegment{}, m1));
  // q = 4 mod 5: f = 1 gives o = 2, f = 2 gives o = 1.
  const Catalog mixed(Context::modular(5, 4),
                      {CuspidalLine{"B", 1, "B", std::int64_t{1}, 1}, CuspidalLine{"N", 2, "N", std::int64_t{1}, 1}});
  const auto [b, nb] = banal_split(mixed, ms(mixed, "B[0,1]+N[0,2]+B[1,1]"));
  EXPECT_EQ(b, ms(mixed, "B[0,1]+B[1,1]"));
  EXPECT_EQ(nb, ms(mixed, "N[0,2]"));
  EXPECT_EQ(b + nb, ms(mixed, "B[0,1]+N[0,2]+B[1,1]"));
}

TEST(Lift, Examples) {
  const Catalog src = line_of_order(5, 3);
  const Catalog dst = Catalog::single_line(Context::char_zero(), 1, "T");
  const std::map<LineId, LineId> to{{0, 0}};
  const auto m = ms(src, "L[0,1]");
  std::vector<std::int64_t> zero{0}, four{4}, three{3};
  EXPECT_EQ(lift(src, m, zero, dst, to), ms(dst, "T[0,1]"));
  EXPECT_EQ(lift(src, m, four, dst, to), ms(dst, "T[4,5]"));
  try {
    lift(src, m, three, dst, to);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadResidue);
  }
}

TEST(Lift, ReducesBack) {
  const Catalog src = line_of_order(7, 2);
  const Catalog dst = Catalog::single_line(Context::char_zero(), 1, "T");
  std::mt19937_64 rng(11);
  for (const auto& m : multisegments_of_length(src, 0, 4)) {
    std::vector<std::int64_t> starts;
    for (const auto& s : m) starts.push_back(s.a + 3 * static_cast<std::int64_t>(rng() % 5) - 6);
    const auto lifted = lift(src, m, starts, dst, {{0, 0}});
    std::vector<Segment> back;
    for (const auto& s : lifted) back.push_back(normalize(src, Segment{0, s.a, s.len}));
    EXPECT_EQ(Multisegment(back), m);
  }
}

TEST(Support, Examples) {
  const Catalog cat = line_of_order(7, 2);
  EXPECT_EQ(dimension_vector(cat, ms(cat, "L[0,1]"), 0), (std::vector<std::int64_t>{1, 1, 0}));
  EXPECT_EQ(dimension_vector(cat, ms(cat, "L[0,2]+L[1,1]"), 0), (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_TRUE(support(cat, Multisegment{}).empty());
}

TEST(Normalize, Idempotent) {
  const Catalog cat = line_of_order(5, 2);
  for (std::int64_t a = -9; a < 9; ++a) {
    const Segment s = normalize(cat, Segment{0, a, 3});
    EXPECT_EQ(normalize(cat, s), s);
    EXPECT_GE(s.a, 0);
    EXPECT_LT(s.a, 4);
  }
}

TEST(Parse, RoundTripsText) {
  const Catalog cat = line_of_order(5, 3);
  EXPECT_EQ(to_string(cat, ms(cat, " L[1, 1] + L[0,2] ")), "L[0,2]+L[1,1]");
  EXPECT_EQ(to_string(cat, ms(cat, "L[5,6]")), "L[1,2]");
  EXPECT_EQ(to_string(cat, ms(cat, "0")), "0");
}

TEST(Parse, ReportsColumns) {
  const Catalog cat = line_of_order(5, 3);
  try {
    parse_multisegment(cat, "L[0,");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    parse_multisegment(cat, "L[0,1]+L[3,2]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 8u);
  }
  try {
    parse_multisegment(cat, "M[0,1]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLine);
  }
}

TEST(Json, CatalogRoundTrip) {
  const auto doc = nlohmann::json::parse(
      R"({"mode":"modular","ell":5,"q":3,"lines":[{"id":"L","f":1,"dual":"L","twist":1,"deg":1}]})");
  const Catalog cat = catalog_from_json(doc);
  EXPECT_EQ(cat.period(0), Period::finite(4));
  EXPECT_EQ(to_json(catalog_from_json(to_json(cat))), to_json(cat));
  const Catalog zero = catalog_from_json(nlohmann::json::parse(R"({"mode":"char0","lines":[{"id":"R"}]})"));
  EXPECT_EQ(std::get<std::string>(zero.line(0).twist), "R");
}
