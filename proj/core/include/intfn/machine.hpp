#pragma once

#include <cstdint>
#include <vector>

#include "intfn/integer_function.hpp"
#include "intfn/registers.hpp"

namespace intfn {

enum class Mode : std::uint8_t { Monotone, SignHarmonized };

class StopRule {
 public:
  enum class Kind : std::uint8_t { StepCount, WhilePositive };

  // Exactly `steps` steps; steps must be positive.
  static StopRule step_count(std::uint64_t steps);
  // Step while `watched` > 0 after each step, at most `cap` steps.
  static StopRule while_positive(Reg watched, std::uint64_t cap);

  Kind kind() const { return kind_; }
  Reg watched() const { return watched_; }
  // The step count for StepCount, the cap for WhilePositive.
  std::uint64_t limit() const { return limit_; }

  friend bool operator==(const StopRule&, const StopRule&) = default;

 private:
  StopRule(Kind k, Reg r, std::uint64_t limit) : kind_(k), watched_(r), limit_(limit) {}

  Kind kind_;
  Reg watched_;
  std::uint64_t limit_;
};

struct GeneratorConfig {
  IntegerPair start;
  RegisterBank bank;
  StopRule stop = StopRule::step_count(1);
  Mode mode = Mode::Monotone;
};

struct TraceRecord {
  std::uint64_t k = 0;
  Step step;
  IntegerPair at;
  RegisterBank bank;  // after the step

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct GenerationTrace {
  std::vector<TraceRecord> records;

  friend bool operator==(const GenerationTrace&, const GenerationTrace&) = default;
};

enum class Termination : std::uint8_t {
  StepCountReached,    // StepCount rule ran to completion
  PredicateSatisfied,  // WhilePositive register went non-positive
  CapExhausted,        // WhilePositive cap hit first
};

struct GenerationResult {
  IntegerFunction function;
  GenerationTrace trace;
  Termination termination = Termination::StepCountReached;
  TypeDesignation designation;
};

// J when RX - RY > 0, otherwise I.
Axis choose_step(const RegisterBank& bank);

// Applies the rank cascade for one step along `axis`, highest rank first,
// ending with the regulator of that axis.
RegisterBank apply_step(RegisterBank bank, Axis axis);

/// Single-stepping register machine shared by the monotone and the
/// sign-harmonized generators.
class Machine {
 public:
  Machine(IntegerPair start, RegisterBank bank, Mode mode = Mode::Monotone)
      : position_(start), bank_(bank), mode_(mode) {}

  Step step();

  // Subtracts min(RX, RY) from both regulators. Step selection only looks at
  // RX - RY, so long runs can keep the regulators small.
  void rebase_regulators();

  IntegerPair position() const { return position_; }
  const RegisterBank& bank() const { return bank_; }
  std::uint64_t steps_taken() const { return steps_; }

 private:
  IntegerPair position_;
  RegisterBank bank_;
  Mode mode_;
  std::uint64_t steps_ = 0;
};

// Monotone-mode generation with full trace. Throws PreconditionError for
// SignHarmonized configs.
GenerationResult generate(const GeneratorConfig& config);

// Shared driver; `generate` and `composite_generate` are thin wrappers.
GenerationResult run_machine(const GeneratorConfig& config);

// Rebuilds the integer function a trace walked. An empty trace yields the
// single-element function at `empty_start`.
IntegerFunction function_from_trace(const GenerationTrace& trace, IntegerPair empty_start = {});

}  // namespace intfn
