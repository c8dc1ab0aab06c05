#include "intfn/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "intfn/error.hpp"

namespace intfn {

namespace {

constexpr std::size_t kTraceColumns = 4 + kRegisterCount;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    out.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename Int>
Int parse_integer(std::string_view field, std::size_t line_no) {
  Int v{};
  const auto s = trim(field);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError("line " + std::to_string(line_no) + ": integer out of range '" +
                        std::string(s) + "'");
  }
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": not an integer '" + std::string(s) + "'");
  }
  return v;
}

struct ConfigDraft {
  std::optional<StopRule::Kind> stop_kind;
  Reg watched = Reg::X;
  std::optional<std::uint64_t> cap;
};

void assign(GeneratorConfig& config, ConfigDraft& draft, std::string_view line, std::size_t line_no) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("line " + std::to_string(line_no) + ": expected KEY=VALUE");
  }
  const auto key = trim(line.substr(0, eq));
  const auto value = trim(line.substr(eq + 1));
  if (key == "I0") {
    config.start.i = parse_integer<std::int64_t>(value, line_no);
  } else if (key == "J0") {
    config.start.j = parse_integer<std::int64_t>(value, line_no);
  } else if (key == "MODE") {
    if (value == "MONOTONE") {
      config.mode = Mode::Monotone;
    } else if (value == "SIGNED") {
      config.mode = Mode::SignHarmonized;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": MODE must be MONOTONE or SIGNED");
    }
  } else if (key == "STOP") {
    if (value == "COUNT") {
      draft.stop_kind = StopRule::Kind::StepCount;
    } else if (value.starts_with("POSITIVE:")) {
      const auto reg = parse_register(value.substr(9));
      if (!reg) throw ParseError("line " + std::to_string(line_no) + ": unknown register in STOP");
      draft.stop_kind = StopRule::Kind::WhilePositive;
      draft.watched = *reg;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": STOP must be COUNT or POSITIVE:<register>");
    }
  } else if (key == "CAP") {
    draft.cap = parse_integer<std::uint64_t>(value, line_no);
    if (*draft.cap == 0) throw ParseError("line " + std::to_string(line_no) + ": CAP must be positive");
  } else if (auto reg = parse_register(key)) {
    config.bank[*reg] = parse_integer<std::int64_t>(value, line_no);
  } else {
    throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
  }
}

void finish(GeneratorConfig& config, const ConfigDraft& draft) {
  const auto kind = draft.stop_kind.value_or(config.stop.kind());
  const auto cap = draft.cap.value_or(config.stop.limit());
  const auto watched = draft.stop_kind ? draft.watched : config.stop.watched();
  config.stop = kind == StopRule::Kind::StepCount ? StopRule::step_count(cap)
                                                  : StopRule::while_positive(watched, cap);
}

}  // namespace

void write_trace(std::ostream& out, const GenerationTrace& trace) {
  out << kTraceHeader << '\n';
  for (const auto& rec : trace.records) {
    out << rec.k << ',' << to_string(rec.step) << ',' << rec.at.i << ',' << rec.at.j;
    for (auto v : rec.bank.values()) out << ',' << v;
    out << '\n';
  }
}

GenerationTrace read_trace(std::istream& in) {
  GenerationTrace trace;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty trace file");
  ++line_no;
  if (trim(line) != kTraceHeader) throw ParseError("line 1: unexpected trace header");
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(trim(line), ',');
    if (fields.size() != kTraceColumns) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(kTraceColumns) + " columns, got " +
                       std::to_string(fields.size()));
    }
    TraceRecord rec;
    rec.k = parse_integer<std::uint64_t>(fields[0], line_no);
    const auto step = trim(fields[1]);
    if (step != "i+" && step != "i-" && step != "j+" && step != "j-") {
      throw ParseError("line " + std::to_string(line_no) + ": bad step '" + std::string(step) + "'");
    }
    rec.step = parse_step(step);
    rec.at.i = parse_integer<std::int64_t>(fields[2], line_no);
    rec.at.j = parse_integer<std::int64_t>(fields[3], line_no);
    for (std::size_t r = 0; r < kRegisterCount; ++r) {
      rec.bank[kAllRegisters[r]] = parse_integer<std::int64_t>(fields[4 + r], line_no);
    }
    trace.records.push_back(rec);
  }
  return trace;
}

GeneratorConfig read_config(std::istream& in) {
  GeneratorConfig config;
  ConfigDraft draft;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto content = std::string_view(line);
    if (const auto hash = content.find('#'); hash != std::string_view::npos) {
      content = content.substr(0, hash);
    }
    content = trim(content);
    if (content.empty()) continue;
    assign(config, draft, content, line_no);
  }
  if (!draft.cap) throw ParseError("config is missing CAP");
  finish(config, draft);
  return config;
}

void apply_config_assignment(GeneratorConfig& config, std::string_view assignment) {
  ConfigDraft draft;
  assign(config, draft, trim(assignment), 0);
  finish(config, draft);
}

void write_config(std::ostream& out, const GeneratorConfig& config) {
  out << "I0=" << config.start.i << '\n' << "J0=" << config.start.j << '\n';
  out << "MODE=" << (config.mode == Mode::Monotone ? "MONOTONE" : "SIGNED") << '\n';
  if (config.stop.kind() == StopRule::Kind::StepCount) {
    out << "STOP=COUNT\n";
  } else {
    out << "STOP=POSITIVE:" << name(config.stop.watched()) << '\n';
  }
  out << "CAP=" << config.stop.limit() << '\n';
  for (Reg r : kAllRegisters) {
    if (config.bank[r] != 0) out << name(r) << '=' << config.bank[r] << '\n';
  }
}

RealSampleSeries read_samples(std::istream& in) {
  std::vector<RealSample> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto content = std::string_view(line);
    if (const auto hash = content.find('#'); hash != std::string_view::npos) {
      content = content.substr(0, hash);
    }
    content = trim(content);
    if (content.empty()) continue;
    const auto fields = split(content, ',');
    if (fields.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected x,y");
    }
    try {
      samples.push_back({parse_rational(fields[0]), parse_rational(fields[1])});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return RealSampleSeries(std::move(samples));
}

}  // namespace intfn
