#include "odembed/glider_ca.hpp"

#include <algorithm>
#include <string>

#include "odembed/errors.hpp"
#include "odembed/number_theory.hpp"

namespace odembed {

GliderConfig::GliderConfig(std::vector<std::uint64_t> widths, std::vector<Particle> particles)
    : widths_(std::move(widths)), particles_(std::move(particles)) {
  if (widths_.size() != particles_.size()) fail_invalid("glider config: one particle per gap");
  for (std::size_t i = 0; i < widths_.size(); ++i) {
    if (widths_[i] == 0) fail_invalid("glider config: gap widths must be >= 1");
    if (particles_[i].position >= widths_[i]) {
      fail_invalid("glider config: particle outside gap " + std::to_string(i + 1));
    }
  }
}

GliderConfig GliderConfig::from_symbols(std::span<const Glyph> symbols) {
  if (symbols.empty() || symbols.front() != Glyph::Wall) {
    fail_invalid("glider symbols must begin with W");
  }
  if (symbols.back() != Glyph::Wall) fail_invalid("glider symbols must end with W");
  std::vector<std::uint64_t> widths;
  std::vector<Particle> particles;
  std::size_t start = 1;
  for (std::size_t i = 1; i < symbols.size(); ++i) {
    if (symbols[i] != Glyph::Wall) continue;
    const std::size_t width = i - start;
    if (width == 0) fail_invalid("glider symbols: empty gap between adjacent walls");
    std::size_t count = 0;
    Particle particle;
    for (std::size_t c = start; c < i; ++c) {
      if (symbols[c] == Glyph::Empty) continue;
      ++count;
      particle.position = c - start;
      particle.direction = symbols[c] == Glyph::Left ? Direction::Left : Direction::Right;
    }
    if (count != 1) {
      fail_invalid("glider symbols: gap " + std::to_string(widths.size() + 1) + " holds " +
                   std::to_string(count) + " particles, expected exactly one");
    }
    widths.push_back(width);
    particles.push_back(particle);
    start = i + 1;
  }
  return GliderConfig(std::move(widths), std::move(particles));
}

GliderConfig GliderConfig::from_phases(std::vector<std::uint64_t> widths,
                                       const std::vector<std::uint64_t>& phases) {
  if (widths.size() != phases.size()) fail_invalid("glider config: one phase per gap");
  std::vector<Particle> particles(widths.size());
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const std::uint64_t w = widths[i];
    if (w == 0) fail_invalid("glider config: gap widths must be >= 1");
    const std::uint64_t p = phases[i];
    if (p >= 2 * w) fail_invalid("glider config: phase out of range for gap " + std::to_string(i + 1));
    particles[i] = p < w ? Particle{p, Direction::Right} : Particle{2 * w - 1 - p, Direction::Left};
  }
  return GliderConfig(std::move(widths), std::move(particles));
}

std::uint64_t GliderConfig::phase(std::size_t gap) const {
  const Particle& p = particles_.at(gap);
  return p.direction == Direction::Right ? p.position : 2 * widths_[gap] - 1 - p.position;
}

std::vector<std::uint64_t> GliderConfig::phases() const {
  std::vector<std::uint64_t> out(gaps());
  for (std::size_t i = 0; i < gaps(); ++i) out[i] = phase(i);
  return out;
}

std::vector<Glyph> GliderConfig::symbols() const {
  std::vector<Glyph> out{Glyph::Wall};
  for (std::size_t i = 0; i < gaps(); ++i) {
    const std::size_t base = out.size();
    out.resize(base + widths_[i], Glyph::Empty);
    out[base + particles_[i].position] =
        particles_[i].direction == Direction::Right ? Glyph::Right : Glyph::Left;
    out.push_back(Glyph::Wall);
  }
  return out;
}

GliderConfig glider_step(const GliderConfig& cfg) {
  std::vector<std::uint64_t> phases = cfg.phases();
  for (std::size_t i = 0; i < phases.size(); ++i) phases[i] = (phases[i] + 1) % (2 * cfg.widths()[i]);
  return GliderConfig::from_phases(cfg.widths(), phases);
}

std::vector<Glyph> glider_step_symbols(std::span<const Glyph> symbols) {
  const std::size_t len = symbols.size();
  std::vector<Glyph> out(len, Glyph::Empty);
  auto cell = [&](std::size_t i, int offset) {
    const auto j = static_cast<std::ptrdiff_t>(i) + offset;
    if (j < 0 || static_cast<std::size_t>(j) >= len) return Glyph::Wall;
    return symbols[static_cast<std::size_t>(j)];
  };
  for (std::size_t i = 0; i < len; ++i) {
    const Glyph left = cell(i, -1);
    const Glyph right = cell(i, +1);
    switch (symbols[i]) {
      case Glyph::Wall:
        out[i] = Glyph::Wall;
        break;
      case Glyph::Right:
        // Moves into an empty right neighbour, or turns around against a wall.
        out[i] = right == Glyph::Wall ? Glyph::Left : Glyph::Empty;
        break;
      case Glyph::Left:
        out[i] = left == Glyph::Wall ? Glyph::Right : Glyph::Empty;
        break;
      case Glyph::Empty:
        if (left == Glyph::Right) {
          out[i] = Glyph::Right;
        } else if (right == Glyph::Left) {
          out[i] = Glyph::Left;
        }
        break;
    }
  }
  return out;
}

GliderSeed build_glider_seed(const Profile& profile, std::size_t gaps) {
  if (gaps == 0) fail_invalid("build_glider_seed: need at least one gap");
  std::vector<std::uint64_t> terms = profile.terms(gaps);
  const auto even = std::find_if(terms.begin(), terms.end(), [](std::uint64_t s) { return s % 2 == 0; });
  const SeedCase kind = even == terms.end() ? SeedCase::Odd : SeedCase::Even;
  if (even != terms.end()) std::rotate(terms.begin(), even, even + 1);

  std::vector<std::uint64_t> widths(gaps);
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < gaps; ++i) {
    product = checked_mul(product, terms[i]);
    widths[i] = kind == SeedCase::Even ? product / 2 : product;
  }
  std::vector<Particle> particles(gaps, Particle{0, Direction::Right});
  return GliderSeed{GliderConfig(std::move(widths), std::move(particles)), kind, std::move(terms)};
}

GliderConfig effective_step(const GliderConfig& cfg, SeedCase kind) {
  const GliderConfig once = glider_step(cfg);
  return kind == SeedCase::Even ? once : glider_step(once);
}

namespace {

// Partial products s_1...s_i recovered from the widths.
std::vector<std::uint64_t> seed_moduli(const std::vector<std::uint64_t>& widths, SeedCase kind) {
  std::vector<std::uint64_t> moduli(widths.size());
  std::uint64_t previous = 1;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const std::uint64_t product = kind == SeedCase::Even ? checked_mul(2, widths[i]) : widths[i];
    if (product % previous != 0 || product / previous < 2) {
      fail_invalid("gap widths do not come from a profile seed");
    }
    moduli[i] = product / previous;
    previous = product;
  }
  return moduli;
}

}  // namespace

InverseLimitPoint decode_glider(const GliderConfig& cfg, SeedCase kind) {
  std::vector<std::uint64_t> coords = cfg.phases();
  if (kind == SeedCase::Odd) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] % 2 != 0) {
        throw Error(ErrorKind::PropertyViolation,
                    "off-orbit configuration: odd phase in gap " + std::to_string(i + 1));
      }
      coords[i] /= 2;
    }
  }
  try {
    return InverseLimitPoint(seed_moduli(cfg.widths(), kind), std::move(coords));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidArgument) throw;
    throw Error(ErrorKind::PropertyViolation, std::string("off-orbit configuration: ") + e.what());
  }
}

GliderConfig encode_glider(const InverseLimitPoint& ilp, SeedCase kind) {
  const auto products = ilp.partial_products();
  std::vector<std::uint64_t> widths(ilp.depth());
  std::vector<std::uint64_t> phases(ilp.depth());
  for (std::size_t i = 0; i < ilp.depth(); ++i) {
    if (kind == SeedCase::Even) {
      if (products[i] % 2 != 0) fail_invalid("even-case encoding needs an even first modulus");
      widths[i] = products[i] / 2;
      phases[i] = ilp.coordinates()[i];
    } else {
      widths[i] = products[i];
      phases[i] = 2 * ilp.coordinates()[i];
    }
  }
  return GliderConfig::from_phases(std::move(widths), phases);
}

SpaceTimeDiagram glider_spacetime(const GliderConfig& cfg, std::size_t steps) {
  if (steps == 0) fail_invalid("glider_spacetime: steps must be >= 1");
  std::vector<Glyph> row = cfg.symbols();
  SpaceTimeDiagram diagram(4, 1, static_cast<CellIndex>(row.size()), steps, SymbolSet::Glider);
  for (std::size_t j = 0; j < steps; ++j) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      diagram.set(static_cast<CellIndex>(i + 1), j, static_cast<Digit>(row[i]));
    }
    row = glider_step_symbols(row);
  }
  diagram.annotate_periods();
  return diagram;
}

}  // namespace odembed
