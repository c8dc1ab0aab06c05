#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "intfn/curves.hpp"
#include "intfn/error.hpp"
#include "intfn/io.hpp"
#include "oracles.hpp"

namespace intfn {
namespace {

std::string serialize(const GenerationTrace& t) {
  std::ostringstream out;
  write_trace(out, t);
  return out.str();
}

GenerationTrace parse(const std::string& text) {
  std::istringstream in(text);
  return read_trace(in);
}

TEST(TraceCsv, EmptyTraceIsHeaderOnly) {
  EXPECT_EQ(serialize(GenerationTrace{}), std::string(kTraceHeader) + "\n");
  EXPECT_TRUE(parse(serialize(GenerationTrace{})).records.empty());
}

TEST(TraceCsv, StraightLineRows) {
  const auto trace = generate(uniform_motion(5, 3)).trace;
  const auto text = serialize(trace);
  std::istringstream lines(text);
  std::string header, row1;
  std::getline(lines, header);
  std::getline(lines, row1);
  EXPECT_EQ(row1, "1,i+,1,0,3,0,3,5,0,0,0,0,0,0,0,0,0,0,0,0");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 9);
}

TEST(TraceCsvProperty, RoundTrip) {
  std::mt19937_64 rng(77);
  for (int n = 0; n < 100; ++n) {
    const auto t = oracle::random_trace(rng, 40);
    ASSERT_EQ(parse(serialize(t)), t);
  }
}

TEST(TraceCsv, Malformed) {
  const std::string header = std::string(kTraceHeader) + "\n";
  EXPECT_THROW(parse(header + "1,i+,1,0,3,0,3,5,0,0,0,0,0,0,0,0,0,0,0\n"), ParseError);  // 19 columns
  EXPECT_THROW(parse(header + "1,k+,1,0,3,0,3,5,0,0,0,0,0,0,0,0,0,0,0,0\n"), ParseError);
  EXPECT_THROW(parse(header + "1,i+,1.5,0,3,0,3,5,0,0,0,0,0,0,0,0,0,0,0,0\n"), ParseError);
  EXPECT_THROW(parse(header + "1,i+,1,0,99999999999999999999,0,3,5,0,0,0,0,0,0,0,0,0,0,0,0\n"),
               OverflowError);
  EXPECT_THROW(parse("k,step\n"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(ConfigFile, DefaultsAndComments) {
  std::istringstream in("# straight line\nX=3\nY = 5   # rate\nCAP=8\n");
  const auto c = read_config(in);
  EXPECT_EQ(c.start, (IntegerPair{0, 0}));
  EXPECT_EQ(c.bank[Reg::X], 3);
  EXPECT_EQ(c.bank[Reg::Y], 5);
  EXPECT_EQ(c.bank[Reg::XXY], 0);
  EXPECT_EQ(c.stop, StopRule::step_count(8));
  EXPECT_EQ(c.mode, Mode::Monotone);
}

TEST(ConfigFile, StopAndMode) {
  std::istringstream in("I0=25\nJ0=-60\nMODE=SIGNED\nSTOP=POSITIVE:X\nCAP=100\nXXY=-1\n");
  const auto c = read_config(in);
  EXPECT_EQ(c.start, (IntegerPair{25, -60}));
  EXPECT_EQ(c.mode, Mode::SignHarmonized);
  EXPECT_EQ(c.stop, StopRule::while_positive(Reg::X, 100));
  EXPECT_EQ(c.bank[Reg::XXY], -1);
}

TEST(ConfigFile, Errors) {
  auto read = [](const std::string& text) {
    std::istringstream in(text);
    return read_config(in);
  };
  EXPECT_THROW(read("X=3\nCAP=8\nFOO=1\n"), ParseError);
  EXPECT_THROW(read("X=3\n"), ParseError);            // CAP is mandatory
  EXPECT_THROW(read("X=abc\nCAP=1\n"), ParseError);
  EXPECT_THROW(read("X 3\nCAP=1\n"), ParseError);
  EXPECT_THROW(read("MODE=FAST\nCAP=1\n"), ParseError);
  EXPECT_THROW(read("STOP=POSITIVE:Q\nCAP=1\n"), ParseError);
  EXPECT_THROW(read("CAP=0\n"), ParseError);
}

TEST(ConfigFile, RoundTripAndOverrides) {
  for (const auto& config : {uniform_motion(5, 3), harmonic_motion(100), egg_config(), sinusoid_config()}) {
    std::stringstream buf;
    write_config(buf, config);
    const auto back = read_config(buf);
    EXPECT_EQ(back.start, config.start);
    EXPECT_EQ(back.bank, config.bank);
    EXPECT_EQ(back.stop, config.stop);
    EXPECT_EQ(back.mode, config.mode);
  }
  auto c = harmonic_motion(100);
  apply_config_assignment(c, "CAP=7");
  EXPECT_EQ(c.stop, StopRule::while_positive(Reg::X, 7));
  apply_config_assignment(c, "STOP=COUNT");
  EXPECT_EQ(c.stop, StopRule::step_count(7));
  apply_config_assignment(c, "Y=3");
  EXPECT_EQ(c.bank[Reg::Y], 3);
}

TEST(Samples, Parse) {
  std::istringstream in("# x,y\n0,0\n1/2, 0.25\n-0.5e0,1\n");
  EXPECT_THROW(read_samples(in), ParseError);
  std::istringstream ok("0,0\n1/2, 0.25\n3/4,-1/3\n");
  const auto s = read_samples(ok);
  ASSERT_EQ(s.samples().size(), 3u);
  EXPECT_EQ(s.samples()[1].y, Rational(1, 4));
  EXPECT_EQ(s.samples()[2].y, Rational(-1, 3));
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("1/100"), Rational(1, 100));
  EXPECT_EQ(parse_rational(" -3 "), Rational(-3));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("-.5"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");

  EXPECT_EQ(format_significant(Rational(156, 100), 7, Rounding::Down), "1.56");
  EXPECT_EQ(format_significant(Rational(158, 99), 7, Rounding::Up), "1.59596");
  EXPECT_EQ(format_significant(Rational(158, 99), 7, Rounding::Down), "1.595959");
  EXPECT_EQ(format_significant(Rational(1, 3), 3, Rounding::Up), "0.334");
  EXPECT_EQ(format_significant(Rational(-1, 3), 3, Rounding::Down), "-0.334");
  EXPECT_EQ(format_significant(Rational(123456789), 3, Rounding::Down), "123000000");
  EXPECT_EQ(format_significant(Rational(1, 1000), 2, Rounding::Up), "0.001");
  EXPECT_EQ(format_significant(Rational(0), 5, Rounding::Up), "0");

  EXPECT_EQ(floor_quotient(Rational(7, 10), Rational(1, 10)), 7);
  EXPECT_EQ(floor_quotient(Rational(-1, 10), Rational(1)), -1);
  EXPECT_EQ(compare(Rational(3, 2), 15, 1), 0);
  EXPECT_EQ(compare(Rational(3, 2), 16, 1), -1);
}

TEST(RationalsProperty, OutwardRoundingBrackets) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> num(1, 1000000000);
  for (int n = 0; n < 500; ++n) {
    const Rational v(num(rng), num(rng));
    const auto lo = parse_rational(format_significant(v, 7, Rounding::Down));
    const auto hi = parse_rational(format_significant(v, 7, Rounding::Up));
    ASSERT_LE(lo, v);
    ASSERT_GE(hi, v);
  }
}

}  // namespace
}  // namespace intfn
