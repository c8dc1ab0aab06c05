#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "intfn/calculus.hpp"
#include "intfn/curves.hpp"
#include "intfn/error.hpp"
#include "intfn/io.hpp"
#include "intfn/render.hpp"

namespace intfn::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return in;
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw PreconditionError("cannot write '" + path + "'");
  write(file);
}

IntegerPair parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected I,J but got '" + text + "'");
  const auto i = parse_rational(text.substr(0, comma));
  const auto j = parse_rational(text.substr(comma + 1));
  if (i.denominator() != 1 || j.denominator() != 1) throw ParseError("start must be integral");
  return {i.numerator(), j.numerator()};
}

Viewport parse_viewport(const std::string& text, std::int64_t cell_px) {
  std::vector<std::int64_t> bounds;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    const auto v = parse_rational(part);
    if (v.denominator() != 1) throw ParseError("viewport bounds must be integers");
    bounds.push_back(v.numerator());
  }
  if (bounds.size() != 4) throw ParseError("viewport must be i_min:i_max:j_min:j_max");
  return make_viewport(bounds[0], bounds[1], bounds[2], bounds[3], cell_px);
}

Axis parse_axis(const std::string& text) {
  if (text == "i" || text == "I") return Axis::I;
  if (text == "j" || text == "J") return Axis::J;
  throw ParseError("axis must be i or j");
}

// Trace rows for an ingested step sequence carry all-zero registers.
GenerationTrace trace_of(const IntegerFunction& f) {
  GenerationTrace trace;
  const auto elements = f.elements();
  const auto steps = f.steps();
  for (std::size_t k = 1; k < elements.size(); ++k) {
    trace.records.push_back(TraceRecord{k, steps[k - 1], elements[k], RegisterBank{}});
  }
  return trace;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer-function generator, differentiator and renderer", "intfn"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Run the register machine and write a trace CSV");
  std::string gen_config, gen_steps, gen_out, gen_start = "0,0";
  std::vector<std::string> gen_sets;
  auto* gen_config_opt = gen->add_option("--config", gen_config, "KEY=VALUE config file");
  auto* gen_steps_opt = gen->add_option("--steps", gen_steps, "File of step tokens (i, j, i-, j+ ...)");
  gen_config_opt->excludes(gen_steps_opt);
  gen->add_option("--start", gen_start, "Start pair I,J for --steps");
  gen->add_option("--set", gen_sets, "Override a config key, KEY=VALUE");
  gen->add_option("--out", gen_out, "Output trace file (default stdout)");

  // derive
  auto* der = app.add_subcommand("derive", "Print difference fields of a trace");
  std::string der_in, der_axis = "i";
  std::int64_t der_class = 1;
  bool der_all = false;
  der->add_option("--in", der_in, "Trace CSV")->required();
  der->add_option("--axis", der_axis, "i or j")->check(CLI::IsMember({"i", "j", "I", "J"}));
  der->add_option("--class", der_class, "Difference class D");
  der->add_flag("--all", der_all, "Every meaningful class");

  // pi
  auto* pic = app.add_subcommand("pi", "Bound pi/2 with the discrete quarter sine");
  std::int64_t pi_x0 = 0;
  std::string pi_trace;
  pic->add_option("--x0", pi_x0, "Common initial value X0 = Y0")->required();
  pic->add_option("--trace", pi_trace, "Also write the full trace CSV");

  // digitize
  auto* dig = app.add_subcommand("digitize", "Discrete counterpart of real samples");
  std::string dig_unit, dig_samples, dig_out;
  dig->add_option("--unit", dig_unit, "Integer scale unit P/Q")->required();
  dig->add_option("--samples", dig_samples, "File of x,y rational pairs")->required();
  dig->add_option("--out", dig_out, "Output trace file (default stdout)");

  // render
  auto* ren = app.add_subcommand("render", "Render a trace as unit squares");
  std::string ren_in, ren_format = "ascii", ren_viewport, ren_out, ren_label;
  std::int64_t ren_cell_px = 10;
  ren->add_option("--in", ren_in, "Trace CSV")->required();
  ren->add_option("--format", ren_format, "ascii, pbm or svg")
      ->check(CLI::IsMember({"ascii", "pbm", "svg"}));
  ren->add_option("--viewport", ren_viewport, "i_min:i_max:j_min:j_max");
  ren->add_option("--out", ren_out, "Output file (default stdout)");
  ren->add_option("--label", ren_label, "Scale label (svg)");
  ren->add_option("--cell-px", ren_cell_px, "Cell size in pixels (svg)");

  // mech
  auto* mech = app.add_subcommand("mech", "Emit a mechanics preset as a config file");
  mech->require_subcommand(1);
  std::string mech_out;
  mech->add_option("--out", mech_out, "Output config file (default stdout)");
  auto* uni = mech->add_subcommand("uniform", "Uniform motion, type {X, Y}");
  std::int64_t uni_il = 0, uni_jl = 0;
  uni->add_option("--il", uni_il, "Elapsed time units")->required();
  uni->add_option("--jl", uni_jl, "Covered distance units")->required();
  auto* ff = mech->add_subcommand("freefall", "Free fall, type {XX, Y}");
  std::int64_t ff_xx = 0, ff_y = 0, ff_v0 = 0;
  std::uint64_t ff_steps = 100;
  ff->add_option("--xx", ff_xx, "Acceleration XX")->required();
  ff->add_option("--y", ff_y, "Distance register Y")->required();
  ff->add_option("--v0", ff_v0, "Initial velocity X");
  ff->add_option("--steps", ff_steps, "Step count");
  auto* har = mech->add_subcommand("harmonic", "Harmonic motion quarter period, type {XXY, Y}");
  std::int64_t har_x0 = 0;
  std::uint64_t har_cap = 1ULL << 32;
  har->add_option("--x0", har_x0, "X0 = Y0")->required();
  har->add_option("--cap", har_cap, "Step cap");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "intfn: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_config.empty() == gen_steps.empty()) {
        err << "intfn generate: give exactly one of --config or --steps\n";
        return kUsage;
      }
      GenerationTrace trace;
      if (!gen_steps.empty()) {
        auto in = open_input(gen_steps);
        std::stringstream buf;
        buf << in.rdbuf();
        const auto steps = parse_steps(buf.str());
        trace = trace_of(from_step_sequence(parse_pair(gen_start), steps));
      } else {
        auto in = open_input(gen_config);
        auto config = read_config(in);
        for (const auto& s : gen_sets) apply_config_assignment(config, s);
        trace = config.mode == Mode::Monotone ? generate(config).trace
                                              : composite_generate(config).trace;
      }
      emit(gen_out, out, [&](std::ostream& os) { write_trace(os, trace); });
    } else if (der->parsed()) {
      auto in = open_input(der_in);
      const auto f = function_from_trace(read_trace(in));
      const auto axis = parse_axis(der_axis);
      if (der_all) {
        const auto fields = full_derivative(f, axis);
        out << "class,coordinate,d\n";
        for (const auto& [D, field] : fields) {
          for (const auto& e : field.entries) out << D << ',' << e.coordinate << ',' << e.d << '\n';
        }
      } else {
        const auto field = difference_field(f, axis, der_class);
        out << "coordinate,d\n";
        for (const auto& e : field.entries) out << e.coordinate << ',' << e.d << '\n';
      }
    } else if (pic->parsed()) {
      const auto r = pi_bounds(pi_x0);
      out << "i=" << r.i << " j=" << r.j
          << " lower=" << format_significant(r.lower, 7, Rounding::Down)
          << " upper=" << format_significant(r.upper, 7, Rounding::Up) << '\n'
          << "steps=" << r.steps << " elapsed=" << r.elapsed_seconds << '\n';
      if (!pi_trace.empty()) {
        const auto trace = generate(harmonic_motion(pi_x0)).trace;
        emit(pi_trace, out, [&](std::ostream& os) { write_trace(os, trace); });
      }
    } else if (dig->parsed()) {
      auto in = open_input(dig_samples);
      const auto samples = read_samples(in);
      const auto f = digitize(samples, IntegerScale(parse_rational(dig_unit)));
      emit(dig_out, out, [&](std::ostream& os) { write_trace(os, trace_of(f)); });
    } else if (ren->parsed()) {
      auto in = open_input(ren_in);
      const auto f = function_from_trace(read_trace(in));
      const auto v = ren_viewport.empty() ? bounding_viewport(f, ren_cell_px)
                                          : parse_viewport(ren_viewport, ren_cell_px);
      std::string text;
      if (ren_format == "ascii") {
        text = render_ascii(f, v);
      } else if (ren_format == "pbm") {
        text = render_pbm(f, v);
      } else {
        text = render_svg(f, v, ren_label.empty() ? std::nullopt
                                                  : std::optional<std::string_view>(ren_label));
      }
      emit(ren_out, out, [&](std::ostream& os) { os << text; });
    } else if (mech->parsed()) {
      GeneratorConfig config;
      if (uni->parsed()) {
        config = uniform_motion(uni_il, uni_jl);
      } else if (ff->parsed()) {
        config = free_fall(ff_xx, ff_y, ff_steps, ff_v0);
      } else {
        config = harmonic_motion(har_x0, har_cap);
      }
      emit(mech_out, out, [&](std::ostream& os) { write_config(os, config); });
    }
  } catch (const ParseError& e) {
    err << "intfn: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const OverflowError& e) {
    err << "intfn: overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const PreconditionError& e) {
    err << "intfn: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "intfn: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace intfn::cli
