#pragma once

// Gliders with reflecting walls: stationary walls W, one particle per gap,
// R moves right and L moves left, and a particle facing a wall turns around
// in place. A gap of width w is a cycle of 2w states.

#include <cstdint>
#include <span>
#include <vector>

#include "odembed/diagram.hpp"
#include "odembed/odometer.hpp"

namespace odembed {

/// Symbol codes as drawn by render_text / render_pgm with SymbolSet::Glider.
enum class Glyph : std::uint8_t { Empty = 0, Left = 1, Right = 2, Wall = 3 };

enum class Direction : std::uint8_t { Left, Right };

struct Particle {
  std::uint64_t position = 0;  // 0-based within its gap
  Direction direction = Direction::Right;

  friend bool operator==(const Particle&, const Particle&) = default;
};

/// Structured form: gap widths and one particle per gap. The symbol form is
/// W, gap 1, W, gap 2, ..., W.
class GliderConfig {
 public:
  GliderConfig(std::vector<std::uint64_t> widths, std::vector<Particle> particles);

  static GliderConfig from_symbols(std::span<const Glyph> symbols);
  /// Phase p in [0, 2w): R at position p for p < w, else L at 2w-1-p.
  static GliderConfig from_phases(std::vector<std::uint64_t> widths,
                                  const std::vector<std::uint64_t>& phases);

  std::size_t gaps() const { return widths_.size(); }
  const std::vector<std::uint64_t>& widths() const { return widths_; }
  const std::vector<Particle>& particles() const { return particles_; }

  std::uint64_t phase(std::size_t gap) const;
  std::vector<std::uint64_t> phases() const;
  std::vector<Glyph> symbols() const;

  friend bool operator==(const GliderConfig&, const GliderConfig&) = default;

 private:
  std::vector<std::uint64_t> widths_;
  std::vector<Particle> particles_;
};

/// Structured update: every gap phase advances by 1 mod 2w.
GliderConfig glider_step(const GliderConfig& cfg);

/// The same rule as a synchronous radius-1 update on the symbol array.
std::vector<Glyph> glider_step_symbols(std::span<const Glyph> symbols);

enum class SeedCase { Even, Odd };

struct GliderSeed {
  GliderConfig config;
  SeedCase kind;
  /// Profile terms in the order the gaps encode them (an even term first in
  /// the even case).
  std::vector<std::uint64_t> moduli;
};

/// Gap widths s_1...s_i / 2 after moving the first even term to the front, or
/// s_1...s_i when every term is odd; each particle is R at the left of its gap.
GliderSeed build_glider_seed(const Profile& profile, std::size_t gaps);

/// T in the even case, T^2 in the all-odd case.
GliderConfig effective_step(const GliderConfig& cfg, SeedCase kind);

/// Gap phases read as inverse-limit coordinates (halved in the odd case).
/// Throws Error(PropertyViolation) for configurations off the seed's orbit.
InverseLimitPoint decode_glider(const GliderConfig& cfg, SeedCase kind);
GliderConfig encode_glider(const InverseLimitPoint& ilp, SeedCase kind);

/// Symbol diagram under single steps; cells are 1-based with cell 1 = W.
SpaceTimeDiagram glider_spacetime(const GliderConfig& cfg, std::size_t steps);

}  // namespace odembed
