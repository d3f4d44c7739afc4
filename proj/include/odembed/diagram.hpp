#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "odembed/periodicity.hpp"

namespace odembed {

using Digit = std::uint32_t;
using CellIndex = std::int64_t;

/// How symbols are drawn. Digits use one base-36 character per cell; the
/// glider alphabet codes 0..3 draw as `.`, `L`, `R`, `W`.
enum class SymbolSet { Digits, Glider };

/// Finite window of a forward orbit: entry (i, j) is cell i at time j, for
/// columns lo..hi (inclusive) and times 0..steps-1.
class SpaceTimeDiagram {
 public:
  SpaceTimeDiagram(std::uint32_t alphabet, CellIndex lo, CellIndex hi, std::size_t steps,
                   SymbolSet symbols = SymbolSet::Digits);

  std::uint32_t alphabet() const { return alphabet_; }
  SymbolSet symbols() const { return symbols_; }
  CellIndex lo() const { return lo_; }
  CellIndex hi() const { return hi_; }
  std::size_t width() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }
  std::size_t steps() const { return steps_; }

  Digit at(CellIndex i, std::size_t j) const;
  void set(CellIndex i, std::size_t j, Digit value);

  std::vector<Digit> row(std::size_t j) const;
  std::vector<Digit> column(CellIndex i) const;

  /// Runs least_period over every column and stores the results.
  void annotate_periods();
  /// Annotation for column i; nullopt when not yet annotated or not detected.
  std::optional<PeriodDetection> column_period(CellIndex i) const;
  bool annotated() const { return !periods_.empty(); }

  friend bool operator==(const SpaceTimeDiagram& a, const SpaceTimeDiagram& b) {
    return a.alphabet_ == b.alphabet_ && a.lo_ == b.lo_ && a.hi_ == b.hi_ &&
           a.steps_ == b.steps_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t offset(CellIndex i, std::size_t j) const;

  std::uint32_t alphabet_;
  CellIndex lo_;
  CellIndex hi_;
  std::size_t steps_;
  SymbolSet symbols_;
  std::vector<Digit> cells_;
  std::vector<std::optional<PeriodDetection>> periods_;
};

/// One character per cell, one line per time step, top line = time 0.
std::string render_text(const SpaceTimeDiagram& diagram);

/// Binary PGM (P5). Digit d maps to floor(255*d/(alphabet-1)); the glider
/// alphabet uses four gray levels.
std::string render_pgm(const SpaceTimeDiagram& diagram);

char digit_glyph(Digit d);

/// One line per column: `column <i> transient=<t> period=<p>`, or
/// `column <i> undetected`.
std::string render_periods(const SpaceTimeDiagram& diagram);

}  // namespace odembed
