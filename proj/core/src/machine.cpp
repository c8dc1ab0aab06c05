#include "intfn/machine.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "intfn/checked.hpp"
#include "intfn/error.hpp"

namespace intfn {

namespace {

struct Transfer {
  Reg from;
  Reg to;
};

// Rank 3 into rank 2, then rank 2 into rank 1, for registers whose
// identifier ends in the step letter. Rank 1 into the regulator is handled
// separately because the sign-harmonized mode changes it.
constexpr std::array<Transfer, 6> kCascadeX = {{
    {Reg::XXX, Reg::XX}, {Reg::XYX, Reg::XY}, {Reg::YXX, Reg::YX}, {Reg::YYX, Reg::YY},
    {Reg::XX, Reg::X}, {Reg::YX, Reg::Y},
}};
constexpr std::array<Transfer, 6> kCascadeY = {{
    {Reg::XXY, Reg::XX}, {Reg::XYY, Reg::XY}, {Reg::YXY, Reg::YX}, {Reg::YYY, Reg::YY},
    {Reg::XY, Reg::X}, {Reg::YY, Reg::Y},
}};

void cascade_work_registers(RegisterBank& bank, Axis axis) {
  const auto& table = axis == Axis::I ? kCascadeX : kCascadeY;
  for (const auto& t : table) {
    if (bank[t.from] != 0) bank[t.to] = checked::add(bank[t.to], bank[t.from]);
  }
}

constexpr Reg rate_register(Axis axis) { return axis == Axis::I ? Reg::X : Reg::Y; }
constexpr Reg regulator(Axis axis) { return axis == Axis::I ? Reg::RX : Reg::RY; }

void validate(const StopRule& stop) {
  if (stop.limit() == 0) throw PreconditionError("stop rule needs a positive step count or cap");
}

}  // namespace

StopRule StopRule::step_count(std::uint64_t steps) {
  return StopRule(Kind::StepCount, Reg::X, steps);
}

StopRule StopRule::while_positive(Reg watched, std::uint64_t cap) {
  return StopRule(Kind::WhilePositive, watched, cap);
}

Axis choose_step(const RegisterBank& bank) {
  return checked::sub(bank[Reg::RX], bank[Reg::RY]) > 0 ? Axis::J : Axis::I;
}

RegisterBank apply_step(RegisterBank bank, Axis axis) {
  cascade_work_registers(bank, axis);
  const Reg rate = rate_register(axis);
  const Reg reg = regulator(axis);
  bank[reg] = checked::add(bank[reg], bank[rate]);
  return bank;
}

Step Machine::step() {
  const Axis axis = choose_step(bank_);
  Step s{axis, Direction::Plus};
  if (mode_ == Mode::Monotone) {
    bank_ = apply_step(bank_, axis);
  } else {
    cascade_work_registers(bank_, axis);
    const std::int64_t rate = bank_[rate_register(axis)];
    const Reg reg = regulator(axis);
    bank_[reg] = checked::add(bank_[reg], checked::abs(rate));
    if (rate < 0) s.direction = Direction::Minus;
  }
  position_ = moved(position_, s);
  ++steps_;
  return s;
}

void Machine::rebase_regulators() {
  const std::int64_t base = std::min(bank_[Reg::RX], bank_[Reg::RY]);
  bank_[Reg::RX] = checked::sub(bank_[Reg::RX], base);
  bank_[Reg::RY] = checked::sub(bank_[Reg::RY], base);
}

GenerationResult run_machine(const GeneratorConfig& config) {
  validate(config.stop);

  GenerationResult result;
  result.function = IntegerFunction(config.start);
  result.designation = TypeDesignation::implied_by(config.bank);
  const auto constants = result.designation.registers();

  Machine machine(config.start, config.bank, config.mode);
  auto record = [&](Step s) {
    result.function.append(s);
    result.trace.records.push_back(
        TraceRecord{machine.steps_taken(), s, machine.position(), machine.bank()});
    for (Reg r : constants) {
      if (machine.bank()[r] != config.bank[r]) {
        throw ConsistencyError("register " + std::string(name(r)) +
                               " of the type designation changed during generation");
      }
    }
  };

  const std::uint64_t limit = config.stop.limit();
  result.trace.records.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(limit, 1U << 20)));
  if (config.stop.kind() == StopRule::Kind::StepCount) {
    while (machine.steps_taken() < limit) record(machine.step());
    result.termination = Termination::StepCountReached;
  } else {
    const Reg watched = config.stop.watched();
    do {
      record(machine.step());
    } while (machine.bank()[watched] > 0 && machine.steps_taken() < limit);
    result.termination = machine.bank()[watched] > 0 ? Termination::CapExhausted
                                                     : Termination::PredicateSatisfied;
  }
  return result;
}

GenerationResult generate(const GeneratorConfig& config) {
  if (config.mode != Mode::Monotone) {
    throw PreconditionError("generate handles monotone configs; use composite_generate");
  }
  return run_machine(config);
}

IntegerFunction function_from_trace(const GenerationTrace& trace, IntegerPair empty_start) {
  if (trace.records.empty()) return IntegerFunction(empty_start);
  const auto& first = trace.records.front();
  const Step back{first.step.axis,
                  first.step.direction == Direction::Plus ? Direction::Minus : Direction::Plus};
  IntegerFunction f(moved(first.at, back));
  for (const auto& rec : trace.records) {
    f.append(rec.step);
    if (f.back() != rec.at) {
      throw ParseError("trace row k=" + std::to_string(rec.k) +
                       " is not a neighbour of the previous row");
    }
  }
  return f;
}

}  // namespace intfn
