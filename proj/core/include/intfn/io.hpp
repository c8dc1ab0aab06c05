#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "intfn/curves.hpp"
#include "intfn/machine.hpp"

namespace intfn {

inline constexpr std::string_view kTraceHeader =
    "k,step,i,j,RX,RY,X,Y,XX,XY,YX,YY,XXX,XXY,XYX,XYY,YXX,YXY,YYX,YYY";

void write_trace(std::ostream& out, const GenerationTrace& trace);
// Throws ParseError naming the offending line.
GenerationTrace read_trace(std::istream& in);

// KEY=VALUE lines. Keys: I0, J0, MODE (MONOTONE | SIGNED),
// STOP (COUNT | POSITIVE:<register>), CAP, and the 16 register names.
GeneratorConfig read_config(std::istream& in);
void write_config(std::ostream& out, const GeneratorConfig& config);
// Applies one KEY=VALUE assignment on top of an existing config.
void apply_config_assignment(GeneratorConfig& config, std::string_view assignment);

// Lines of "x,y" rationals; '#' starts a comment.
RealSampleSeries read_samples(std::istream& in);

}  // namespace intfn
