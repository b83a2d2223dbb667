#include "phasetrop/svg.hpp"

#include <fstream>
#include <sstream>

#include "phasetrop/parallel.hpp"

namespace phasetrop {

namespace {

constexpr int kCanvas = 512;
constexpr int kMargin = 24;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PhasePredicate& inside, std::size_t rank, const RenderOptions& o) {
  if (rank != 2 && rank != 3) throw Error("rendering supports rank 2 or 3");
  if (rank == 3 && !o.slice) throw Error("rank-3 rendering needs a slice phase");
  const std::size_t n = o.resolution;
  if (n == 0) throw Error("resolution must be positive");

  // Row r runs top to bottom, so it samples the second coordinate from high to low.
  std::vector<std::vector<char>> cells(n, std::vector<char>(n, 0));
  GridOptions grid;
  parallel_for(n, o.threads, [&](std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) {
      PhaseVec theta = grid_point(2, n, c * n + (n - 1 - r), grid);
      if (rank == 3) theta.push_back(*o.slice);
      cells[r][c] = inside(theta) ? 1 : 0;
    }
  });

  const double cell = static_cast<double>(kCanvas) / static_cast<double>(n);
  std::ostringstream svg;
  svg.precision(6);
  const int full = kCanvas + 2 * kMargin;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full << "\" viewBox=\"0 0 "
      << full << ' ' << full << "\">\n";
  if (!o.title.empty()) svg << "<title>" << escape(o.title) << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << full << "\" height=\"" << full << "\" fill=\"white\"/>\n";
  svg << "<g fill=\"#3a6ea5\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t c = 0;
    while (c < n) {
      if (!cells[r][c]) {
        ++c;
        continue;
      }
      std::size_t end = c;
      while (end < n && cells[r][end]) ++end;
      svg << "<rect x=\"" << kMargin + cell * static_cast<double>(c) << "\" y=\""
          << kMargin + cell * static_cast<double>(r) << "\" width=\"" << cell * static_cast<double>(end - c)
          << "\" height=\"" << cell << "\"/>\n";
      c = end;
    }
  }
  svg << "</g>\n<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  for (int k = 0; k <= 2; ++k) {
    const double at = kMargin + kCanvas * k / 2.0;
    svg << "<line x1=\"" << at << "\" y1=\"" << kMargin << "\" x2=\"" << at << "\" y2=\"" << kMargin + kCanvas
        << "\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << at << "\" x2=\"" << kMargin + kCanvas << "\" y2=\"" << at
        << "\"/>\n";
  }
  svg << "</g>\n";
  const char* labels[] = {"-pi", "0", "pi"};
  svg << "<g font-family=\"sans-serif\" font-size=\"10\">\n";
  for (int k = 0; k <= 2; ++k) {
    const double at = kMargin + kCanvas * k / 2.0;
    svg << "<text x=\"" << at << "\" y=\"" << full - 6 << "\" text-anchor=\"middle\">" << labels[k] << "</text>\n";
    svg << "<text x=\"2\" y=\"" << full - at + 3 << "\">" << labels[k] << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace phasetrop
