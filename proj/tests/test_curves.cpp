#include <gtest/gtest.h>

#include <random>

#include "intfn/curves.hpp"
#include "intfn/error.hpp"
#include "oracles.hpp"

namespace intfn {
namespace {

std::int64_t floor_of(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

TEST(Presets, UniformMotion) {
  const auto c = uniform_motion(5, 3);
  EXPECT_EQ(c.bank[Reg::X], 3);
  EXPECT_EQ(c.bank[Reg::Y], 5);
  EXPECT_EQ(c.bank[Reg::RX], 0);
  EXPECT_EQ(c.bank[Reg::RY], 0);
  EXPECT_EQ(c.stop, StopRule::step_count(8));
  EXPECT_EQ(generate(c).function.back(), (IntegerPair{5, 3}));
  EXPECT_THROW(uniform_motion(0, 3), PreconditionError);
}

TEST(Presets, HarmonicMotion) {
  const auto c = harmonic_motion(1000);
  EXPECT_EQ(c.bank[Reg::X], 1000);
  EXPECT_EQ(c.bank[Reg::Y], 1000);
  EXPECT_EQ(c.bank[Reg::XX], -1);
  EXPECT_EQ(c.bank[Reg::XXY], -1);
  EXPECT_EQ(c.stop.kind(), StopRule::Kind::WhilePositive);
  EXPECT_EQ(c.stop.watched(), Reg::X);
  EXPECT_EQ(TypeDesignation::implied_by(c.bank), TypeDesignation::parse("{XXY,Y}"));
  EXPECT_THROW(harmonic_motion(1), PreconditionError);
}

TEST(Presets, FreeFall) {
  const auto c = free_fall(2, 100, 50);
  EXPECT_EQ(TypeDesignation::implied_by(c.bank), TypeDesignation({Reg::XX, Reg::Y}));
  for (Reg r : kAllRegisters) {
    if (r != Reg::XX && r != Reg::Y) EXPECT_EQ(c.bank[r], 0) << name(r);
  }
  // Equal velocity increments per time step: X grows by XX on every i step.
  const auto run = generate(c);
  std::int64_t last_x = 0;
  for (const auto& rec : run.trace.records) {
    if (rec.step.axis == Axis::I) {
      EXPECT_EQ(rec.bank[Reg::X], last_x + 2);
      last_x = rec.bank[Reg::X];
    }
  }
}

TEST(Presets, EveryFamilyBuilds) {
  for (const auto& preset : curve_presets()) {
    PresetParams p;
    for (Reg r : preset.designation.registers()) p.registers[r] = 3;
    p.stop = StopRule::step_count(50);
    const auto c = preset_config(preset.name, p);
    EXPECT_EQ(TypeDesignation::implied_by(c.bank), preset.designation) << preset.name;
    const auto run = generate(c);
    EXPECT_TRUE(satisfies_neighbor_property(run.function.elements()));
    EXPECT_EQ(run.designation, preset.designation);
  }
}

TEST(Presets, Errors) {
  PresetParams p;
  p.registers = {{Reg::X, 3}, {Reg::Y, 0}};
  EXPECT_THROW(preset_config("line", p), PreconditionError);
  EXPECT_THROW(preset_config("spiral", p), PreconditionError);
  p.registers = {{Reg::X, 3}, {Reg::Y, 4}, {Reg::XXX, 1}};
  EXPECT_THROW(preset_config("line", p), PreconditionError);
}

// The exponential family fires XY on j steps into X.
TEST(Presets, ExponentialUsesDroppingRule) {
  PresetParams p;
  p.registers = {{Reg::X, 1}, {Reg::XY, 1}, {Reg::Y, 4}};
  p.stop = StopRule::step_count(40);
  const auto run = generate(preset_config("exponential", p));
  std::int64_t x = 1;
  for (const auto& rec : run.trace.records) {
    if (rec.step.axis == Axis::J) ++x;
    ASSERT_EQ(rec.bank[Reg::X], x);
  }
}

TEST(PiBounds, GoldenRows) {
  struct Row {
    std::int64_t x0, i, j;
    const char* lower;
    const char* upper;
  };
  const Row rows[] = {
      {10000, 157, 99, "1.56", "1.59596"},
      {10000000, 4967, 3161, "1.570524", "1.571655"},
      {1000000000000, 1570796, 999999, "1.570795", "1.570799"},
  };
  for (const auto& row : rows) {
    const auto r = pi_bounds(row.x0);
    EXPECT_EQ(r.i, row.i);
    EXPECT_EQ(r.j, row.j);
    EXPECT_EQ(format_significant(r.lower, 7, Rounding::Down), row.lower);
    EXPECT_EQ(format_significant(r.upper, 7, Rounding::Up), row.upper);
    EXPECT_EQ(r.steps, static_cast<std::uint64_t>(r.i + r.j));
  }
}

TEST(PiBounds, SmallRowFollowsAlgorithm) {
  const auto r = pi_bounds(100);
  EXPECT_EQ(r.i, 15);
  EXPECT_EQ(r.j, 9);
  EXPECT_EQ(r.lower, Rational(14, 10));
  EXPECT_EQ(r.upper, Rational(16, 9));
  EXPECT_EQ(format_significant(r.upper, 7, Rounding::Up), "1.777778");
}

TEST(PiBounds, AgreesWithMacroOracle) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> x0s(2, 2000000);
  for (int n = 0; n < 40; ++n) {
    const auto x0 = x0s(rng);
    const auto r = pi_bounds(x0);
    const auto o = oracle::macro_pi(x0);
    ASSERT_EQ(r.i, o.i) << x0;
    ASSERT_EQ(r.j, o.j) << x0;
  }
}

TEST(PiBounds, Brackets) {
  for (std::int64_t x0 : {2, 5, 100, 10000, 123456, 10000000}) {
    const auto r = pi_bounds(x0);
    EXPECT_LT(r.lower, r.upper);
    EXPECT_LE(compare(r.lower, 15707963267948966, 16), 0) << x0;
    EXPECT_GE(compare(r.upper, 15707963267948967, 16), 0) << x0;
  }
  EXPECT_THROW(pi_bounds(1), PreconditionError);
}

TEST(Digitize, LineAtUnitScale) {
  std::vector<RealSample> samples;
  for (int k = 0; k < 50; ++k) samples.push_back({Rational(k, 10), Rational(4 * k, 100)});
  const auto f = digitize(RealSampleSeries(samples), IntegerScale(Rational(1)));
  const std::vector<IntegerPair> expected = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}, {4, 1}};
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), f.elements().begin(), f.elements().end()));
}

TEST(Digitize, FloorOracle) {
  // Every sample's floor cell appears, and nothing but those cells (no corner
  // crossings happen for this slope and density).
  std::vector<RealSample> samples;
  for (int k = 0; k < 300; ++k) samples.push_back({Rational(k, 37), Rational(k * k, 3000)});
  const auto f = digitize(RealSampleSeries(samples), IntegerScale(Rational(1, 3)));
  EXPECT_TRUE(satisfies_neighbor_property(f.elements()));
  for (const auto& s : samples) {
    const IntegerPair cell{floor_of(s.x * Rational(3)), floor_of(s.y * Rational(3))};
    EXPECT_NE(std::find(f.elements().begin(), f.elements().end(), cell), f.elements().end());
  }
}

TEST(Digitize, ConstantAndCorner) {
  std::vector<RealSample> flat;
  for (int k = 0; k < 30; ++k) flat.push_back({Rational(k, 10), Rational(1, 2)});
  const auto f = digitize(RealSampleSeries(flat), IntegerScale(Rational(1)));
  EXPECT_EQ(f, from_step_sequence({0, 0}, parse_steps("i i")));

  std::vector<RealSample> diagonal;
  for (int k = 0; k <= 3; ++k) diagonal.push_back({Rational(k), Rational(k)});
  const auto g = digitize(RealSampleSeries(diagonal), IntegerScale(Rational(1)));
  ASSERT_GE(g.elements().size(), 3u);
  EXPECT_EQ(g[1], (IntegerPair{1, 0}));
  EXPECT_EQ(g[2], (IntegerPair{1, 1}));
  EXPECT_EQ(g, from_step_sequence({0, 0}, parse_steps("i j i j i j")));
}

TEST(Digitize, Errors) {
  const std::vector<RealSample> sparse = {{Rational(0), Rational(0)}, {Rational(3), Rational(0)}};
  EXPECT_THROW(digitize(RealSampleSeries(sparse), IntegerScale(Rational(1))), PreconditionError);
  const std::vector<RealSample> unordered = {{Rational(1), Rational(0)}, {Rational(1), Rational(1)}};
  EXPECT_THROW(RealSampleSeries{unordered}, PreconditionError);
  EXPECT_THROW(digitize(RealSampleSeries({}), IntegerScale(Rational(1))), PreconditionError);
}

TEST(DigitizeProperty, RefinementAcrossScales) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> rise(0, 90);
  for (int n = 0; n < 50; ++n) {
    // Random non-decreasing piecewise-linear curve, dense enough for unit 1/10.
    std::vector<RealSample> samples;
    Rational y(0);
    for (int k = 0; k < 400; ++k) {
      samples.push_back({Rational(k, 100), y});
      y += Rational(rise(rng), 1000);
    }
    const RealSampleSeries series(samples);
    const auto coarse = digitize(series, IntegerScale(Rational(1)));
    const auto fine = digitize(series, IntegerScale(Rational(1, 10)));
    ASSERT_TRUE(satisfies_neighbor_property(fine.elements()));
    ASSERT_TRUE(refinement_compatible(coarse, fine, 10).empty());
  }
}

TEST(Composite, FigureConfigsAreValid) {
  for (const auto& config : {egg_config(), sinusoid_config()}) {
    const auto r = composite_generate(config);
    EXPECT_EQ(r.function.length(), 2000u);
    EXPECT_TRUE(satisfies_neighbor_property(r.function.elements()));
    EXPECT_FALSE(r.function.is_monotone());
  }
  EXPECT_EQ(composite_generate(egg_config()).designation, TypeDesignation::parse("{XX, YYY}"));
  EXPECT_EQ(composite_generate(sinusoid_config()).designation, TypeDesignation::parse("{XXY, Y}"));
}

TEST(Composite, MatchesMonotoneForPositiveRates) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> v(1, 100);
  std::uniform_int_distribution<std::int64_t> h(0, 4);
  for (int n = 0; n < 200; ++n) {
    GeneratorConfig c;
    c.bank[Reg::X] = v(rng);
    c.bank[Reg::Y] = v(rng);
    c.bank[Reg::XX] = h(rng);
    c.bank[Reg::YY] = h(rng);
    c.bank[Reg::XXY] = h(rng);
    c.stop = StopRule::step_count(150);
    const auto mono = generate(c);
    c.mode = Mode::SignHarmonized;
    const auto signed_run = composite_generate(c);
    ASSERT_EQ(mono.function, signed_run.function);
    ASSERT_EQ(mono.trace, signed_run.trace);
  }
}

TEST(Composite, Preconditions) {
  auto c = uniform_motion(3, 3);
  EXPECT_THROW(composite_generate(c), PreconditionError);
  c.mode = Mode::SignHarmonized;
  c.stop = StopRule::while_positive(Reg::X, 10);
  EXPECT_THROW(composite_generate(c), PreconditionError);
}

}  // namespace
}  // namespace intfn
