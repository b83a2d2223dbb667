#pragma once

#include <optional>
#include <string>

#include "phasetrop/oracle.hpp"

namespace phasetrop {

struct RenderOptions {
  std::size_t resolution = 256;
  /// Third coordinate for rank-3 pictures.
  std::optional<Phase> slice;
  std::string title;
  unsigned threads = 0;
};

/// Rasterizes a phase-space predicate over [-π, π)² as an SVG. The output is a
/// pure function of the predicate and options.
std::string render_svg(const PhasePredicate& inside, std::size_t rank, const RenderOptions& options = {});

void write_text_file(const std::string& path, const std::string& text);

}  // namespace phasetrop
