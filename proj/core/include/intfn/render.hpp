#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "intfn/integer_function.hpp"

namespace intfn {

struct Viewport {
  std::int64_t i_min = 0;
  std::int64_t i_max = 0;
  std::int64_t j_min = 0;
  std::int64_t j_max = 0;
  std::int64_t cell_px = 10;

  std::int64_t width() const { return i_max - i_min + 1; }
  std::int64_t height() const { return j_max - j_min + 1; }
};

// Throws PreconditionError if the bounds are inverted.
Viewport make_viewport(std::int64_t i_min, std::int64_t i_max, std::int64_t j_min,
                       std::int64_t j_max, std::int64_t cell_px = 10);
Viewport bounding_viewport(const IntegerFunction& f, std::int64_t cell_px = 10);

std::string render_ascii(const IntegerFunction& f, const Viewport& v);
std::string render_pbm(const IntegerFunction& f, const Viewport& v);
std::string render_svg(const IntegerFunction& f, const Viewport& v,
                       std::optional<std::string_view> scale_label = std::nullopt);

}  // namespace intfn
