#include "intfn/curves.hpp"

#include <algorithm>
#include <chrono>

#include "intfn/checked.hpp"
#include "intfn/error.hpp"

namespace intfn {

const std::vector<CurvePreset>& curve_presets() {
  static const std::vector<CurvePreset> presets = {
      {"line", "straight lines", TypeDesignation({Reg::X, Reg::Y}), {}},
      {"parabola", "parabolas", TypeDesignation({Reg::XX, Reg::Y}), {Reg::X}},
      {"exponential", "exponentials and logarithms", TypeDesignation({Reg::XY, Reg::Y}), {Reg::X}},
      {"ellipse", "ellipses and hyperbolas", TypeDesignation({Reg::XX, Reg::YY}), {Reg::X, Reg::Y}},
      {"sine", "sin, cos, sh, ch and inverses", TypeDesignation({Reg::XXY, Reg::Y}),
       {Reg::X, Reg::XX}},
      {"semicubic", "semi cubic parabolas", TypeDesignation({Reg::XX, Reg::YYY}),
       {Reg::X, Reg::Y, Reg::YY}},
  };
  return presets;
}

const CurvePreset& find_preset(std::string_view preset_name) {
  for (const auto& p : curve_presets()) {
    if (p.name == preset_name) return p;
  }
  throw PreconditionError("unknown curve preset '" + std::string(preset_name) + "'");
}

GeneratorConfig preset_config(std::string_view preset_name, const PresetParams& params) {
  const auto& preset = find_preset(preset_name);
  GeneratorConfig config;
  config.start = params.start;
  config.stop = params.stop;
  for (const auto& [reg, value] : params.registers) {
    const bool allowed = !is_work(reg) || preset.designation.contains(reg) ||
                         std::find(preset.optional.begin(), preset.optional.end(), reg) !=
                             preset.optional.end();
    if (!allowed) {
      throw PreconditionError("register " + std::string(name(reg)) + " is not part of preset " +
                              std::string(preset.name));
    }
    config.bank[reg] = value;
  }
  const auto implied = TypeDesignation::implied_by(config.bank);
  if (implied != preset.designation) {
    throw PreconditionError("preset " + std::string(preset.name) + " needs type " +
                            to_string(preset.designation) + ", parameters give " +
                            to_string(implied));
  }
  return config;
}

GeneratorConfig uniform_motion(std::int64_t i_l, std::int64_t j_l) {
  if (i_l <= 0 || j_l <= 0) throw PreconditionError("uniform motion needs positive i_l and j_l");
  PresetParams p;
  p.registers = {{Reg::X, j_l}, {Reg::Y, i_l}};
  p.stop = StopRule::step_count(static_cast<std::uint64_t>(checked::add(i_l, j_l)));
  return preset_config("line", p);
}

GeneratorConfig free_fall(std::int64_t acceleration, std::int64_t y, std::uint64_t steps,
                          std::int64_t initial_velocity) {
  PresetParams p;
  p.registers = {{Reg::XX, acceleration}, {Reg::Y, y}, {Reg::X, initial_velocity}};
  p.stop = StopRule::step_count(steps);
  return preset_config("parabola", p);
}

GeneratorConfig harmonic_motion(std::int64_t x0, std::uint64_t cap) {
  if (x0 < 2) throw PreconditionError("harmonic motion needs X0 >= 2");
  PresetParams p;
  p.registers = {{Reg::X, x0}, {Reg::Y, x0}, {Reg::XX, -1}, {Reg::XXY, -1}};
  p.stop = StopRule::while_positive(Reg::X, cap);
  return preset_config("sine", p);
}

GeneratorConfig egg_config() {
  GeneratorConfig c;
  c.start = {25, 60};
  c.bank[Reg::X] = 500000;
  c.bank[Reg::Y] = 10;
  c.bank[Reg::XX] = -10000;
  c.bank[Reg::YY] = 10000;
  c.bank[Reg::YYY] = -125;
  c.stop = StopRule::step_count(2000);
  c.mode = Mode::SignHarmonized;
  return c;
}

GeneratorConfig sinusoid_config() {
  GeneratorConfig c;
  c.start = {0, 140};
  c.bank[Reg::RX] = 500;
  c.bank[Reg::Y] = 600;
  c.bank[Reg::XX] = -200;
  c.bank[Reg::XXY] = -3;
  c.stop = StopRule::step_count(2000);
  c.mode = Mode::SignHarmonized;
  return c;
}

PiResult pi_bounds(std::int64_t x0) {
  const auto config = harmonic_motion(x0);
  const auto t0 = std::chrono::steady_clock::now();

  // The quarter period ends on the step that makes X non-positive. The
  // regulators are rebased every step; only their difference matters.
  Machine machine(config.start, config.bank);
  do {
    machine.step();
    machine.rebase_regulators();
  } while (machine.bank()[Reg::X] > 0);

  const auto t1 = std::chrono::steady_clock::now();
  PiResult r;
  r.i = machine.position().i;
  r.j = machine.position().j;
  if (r.i < 2 || r.j < 1) throw ConsistencyError("quarter period ended before both axes moved");
  r.lower = Rational(r.i - 1, checked::add(r.j, 1));
  r.upper = Rational(checked::add(r.i, 1), r.j);
  r.steps = machine.steps_taken();
  r.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

RealSampleSeries::RealSampleSeries(std::vector<RealSample> samples) : samples_(std::move(samples)) {
  for (std::size_t n = 1; n < samples_.size(); ++n) {
    if (!(samples_[n - 1].x < samples_[n].x)) {
      throw PreconditionError("sample x values must be strictly increasing");
    }
  }
}

IntegerFunction digitize(const RealSampleSeries& series, const IntegerScale& scale) {
  const auto samples = series.samples();
  if (samples.empty()) throw PreconditionError("cannot digitize an empty sample series");
  auto cell_of = [&](const RealSample& s) {
    return IntegerPair{floor_quotient(s.x, scale.unit()), floor_quotient(s.y, scale.unit())};
  };

  IntegerFunction f(cell_of(samples.front()));
  for (std::size_t n = 1; n < samples.size(); ++n) {
    const auto cell = cell_of(samples[n]);
    const auto from = f.back();
    const auto di = checked::sub(cell.i, from.i);
    const auto dj = checked::sub(cell.j, from.j);
    if (di > 1 || di < -1 || dj > 1 || dj < -1) {
      throw PreconditionError("samples too sparse: cell jump from " + to_string(from) + " to " +
                              to_string(cell));
    }
    // A corner crossing takes the i step first.
    if (di != 0) f.append(Step{Axis::I, di > 0 ? Direction::Plus : Direction::Minus});
    if (dj != 0) f.append(Step{Axis::J, dj > 0 ? Direction::Plus : Direction::Minus});
  }
  return f;
}

GenerationResult composite_generate(const GeneratorConfig& config) {
  if (config.mode != Mode::SignHarmonized) {
    throw PreconditionError("composite_generate needs a sign-harmonized config");
  }
  if (config.stop.kind() != StopRule::Kind::StepCount) {
    throw PreconditionError("composite_generate needs a step-count stop rule");
  }
  return run_machine(config);
}

}  // namespace intfn
