#include "odembed/diagram.hpp"

#include <sstream>

#include "odembed/errors.hpp"

namespace odembed {

SpaceTimeDiagram::SpaceTimeDiagram(std::uint32_t alphabet, CellIndex lo, CellIndex hi,
                                   std::size_t steps, SymbolSet symbols)
    : alphabet_(alphabet), lo_(lo), hi_(hi), steps_(steps), symbols_(symbols) {
  if (lo > hi) fail_invalid("space-time diagram: empty column range");
  if (alphabet < 2) fail_invalid("space-time diagram: alphabet needs at least two symbols");
  cells_.assign(width() * steps, 0);
}

std::size_t SpaceTimeDiagram::offset(CellIndex i, std::size_t j) const {
  if (i < lo_ || i > hi_ || j >= steps_) {
    fail_invalid("space-time diagram: entry (" + std::to_string(i) + ", " +
                 std::to_string(j) + ") out of range");
  }
  return j * width() + static_cast<std::size_t>(i - lo_);
}

Digit SpaceTimeDiagram::at(CellIndex i, std::size_t j) const { return cells_[offset(i, j)]; }

void SpaceTimeDiagram::set(CellIndex i, std::size_t j, Digit value) {
  cells_[offset(i, j)] = value;
}

std::vector<Digit> SpaceTimeDiagram::row(std::size_t j) const {
  const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(offset(lo_, j));
  return {begin, begin + static_cast<std::ptrdiff_t>(width())};
}

std::vector<Digit> SpaceTimeDiagram::column(CellIndex i) const {
  std::vector<Digit> out(steps_);
  for (std::size_t j = 0; j < steps_; ++j) out[j] = at(i, j);
  return out;
}

void SpaceTimeDiagram::annotate_periods() {
  periods_.assign(width(), std::nullopt);
  for (CellIndex i = lo_; i <= hi_; ++i) {
    periods_[static_cast<std::size_t>(i - lo_)] = least_period(column(i));
  }
}

std::optional<PeriodDetection> SpaceTimeDiagram::column_period(CellIndex i) const {
  if (periods_.empty() || i < lo_ || i > hi_) return std::nullopt;
  return periods_[static_cast<std::size_t>(i - lo_)];
}

char digit_glyph(Digit d) {
  static constexpr char kGlyphs[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  if (d >= 36) fail_invalid("text rendering supports at most 36 symbols");
  return kGlyphs[d];
}

namespace {

char glider_glyph(Digit code) {
  static constexpr char kGlyphs[] = {'.', 'L', 'R', 'W'};
  if (code > 3) fail_invalid("glider symbol code out of range");
  return kGlyphs[code];
}

}  // namespace

std::string render_text(const SpaceTimeDiagram& diagram) {
  std::string out;
  out.reserve((diagram.width() + 1) * diagram.steps());
  for (std::size_t j = 0; j < diagram.steps(); ++j) {
    for (CellIndex i = diagram.lo(); i <= diagram.hi(); ++i) {
      const Digit d = diagram.at(i, j);
      out.push_back(diagram.symbols() == SymbolSet::Glider ? glider_glyph(d) : digit_glyph(d));
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_pgm(const SpaceTimeDiagram& diagram) {
  const std::uint32_t levels = diagram.symbols() == SymbolSet::Glider ? 4 : diagram.alphabet();
  std::ostringstream header;
  header << "P5\n" << diagram.width() << ' ' << diagram.steps() << "\n255\n";
  std::string out = header.str();
  out.reserve(out.size() + diagram.width() * diagram.steps());
  for (std::size_t j = 0; j < diagram.steps(); ++j) {
    for (CellIndex i = diagram.lo(); i <= diagram.hi(); ++i) {
      const Digit d = diagram.at(i, j);
      if (d >= levels) fail_invalid("PGM rendering: symbol outside alphabet");
      out.push_back(static_cast<char>(static_cast<unsigned char>(255u * d / (levels - 1))));
    }
  }
  return out;
}

std::string render_periods(const SpaceTimeDiagram& diagram) {
  std::ostringstream out;
  for (CellIndex i = diagram.lo(); i <= diagram.hi(); ++i) {
    const auto detected =
        diagram.annotated() ? diagram.column_period(i) : least_period(diagram.column(i));
    out << "column " << i;
    if (detected) {
      out << " transient=" << detected->transient << " period=" << detected->period << '\n';
    } else {
      out << " undetected\n";
    }
  }
  return out.str();
}

}  // namespace odembed
