#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intfn/calculus.hpp"
#include "intfn/machine.hpp"
#include "intfn/rational.hpp"

namespace intfn {

struct CurvePreset {
  std::string_view name;
  std::string_view family;
  TypeDesignation designation;
  std::vector<Reg> optional;  // may be set in addition to the designation
};

const std::vector<CurvePreset>& curve_presets();
const CurvePreset& find_preset(std::string_view name);

struct PresetParams {
  IntegerPair start;
  std::map<Reg, std::int64_t> registers;
  StopRule stop = StopRule::step_count(1);
};

// Throws PreconditionError for unknown presets, registers outside the
// preset, or values whose implied designation differs from the preset's.
GeneratorConfig preset_config(std::string_view preset, const PresetParams& params);

// {X, Y}: X = j_l, Y = i_l, runs i_l + j_l steps from [0, 0].
GeneratorConfig uniform_motion(std::int64_t i_l, std::int64_t j_l);
// {XX, Y}: XX is the acceleration, Y the distance unit.
GeneratorConfig free_fall(std::int64_t acceleration, std::int64_t y, std::uint64_t steps,
                          std::int64_t initial_velocity = 0);
// {XXY, Y} quarter period: X = Y = X0, XX = XXY = -1, stop when X <= 0.
GeneratorConfig harmonic_motion(std::int64_t x0, std::uint64_t cap = 1ULL << 40);

// Closed semi-cubic egg, type {XX, YYY}, 2000 steps.
GeneratorConfig egg_config();
// Sinusoid arc, type {XXY, Y}, 2000 steps.
GeneratorConfig sinusoid_config();

struct PiResult {
  std::int64_t i = 0;
  std::int64_t j = 0;
  Rational lower;  // (i - 1) / (j + 1)
  Rational upper;  // (i + 1) / j
  std::uint64_t steps = 0;
  double elapsed_seconds = 0.0;
};

PiResult pi_bounds(std::int64_t x0);

struct RealSample {
  Rational x;
  Rational y;
};

class RealSampleSeries {
 public:
  // Throws PreconditionError unless x is strictly increasing.
  explicit RealSampleSeries(std::vector<RealSample> samples);
  std::span<const RealSample> samples() const { return samples_; }

 private:
  std::vector<RealSample> samples_;
};

IntegerFunction digitize(const RealSampleSeries& samples, const IntegerScale& scale);

// Requires mode == SignHarmonized and a StepCount stop rule.
GenerationResult composite_generate(const GeneratorConfig& config);

}  // namespace intfn
