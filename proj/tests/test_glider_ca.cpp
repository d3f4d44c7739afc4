#include <doctest.h>

#include <set>

#include "odembed/errors.hpp"
#include "odembed/glider_ca.hpp"
#include "oracles.hpp"

using namespace odembed;

namespace {

std::vector<Glyph> glyphs(const std::string& text) {
  std::vector<Glyph> out;
  for (const char c : text) {
    switch (c) {
      case 'W': out.push_back(Glyph::Wall); break;
      case 'L': out.push_back(Glyph::Left); break;
      case 'R': out.push_back(Glyph::Right); break;
      default: out.push_back(Glyph::Empty); break;
    }
  }
  return out;
}

std::vector<InverseLimitPoint> all_points(const std::vector<std::uint64_t>& moduli) {
  std::uint64_t order = 1;
  for (const auto s : moduli) order *= s;
  std::vector<InverseLimitPoint> out;
  for (std::uint64_t v = 0; v < order; ++v) {
    out.push_back(tilde_of(OdometerPoint::from_value(moduli, v)));
  }
  return out;
}

}  // namespace

TEST_CASE("symbol rule") {
  CHECK(glider_step_symbols(glyphs("WR..W")) == glyphs("W.R.W"));
  CHECK(glider_step_symbols(glyphs("W..RW")) == glyphs("W..LW"));
  CHECK(glider_step_symbols(glyphs("W.L.W")) == glyphs("WL..W"));
  CHECK(glider_step_symbols(glyphs("WL..W")) == glyphs("WR..W"));
  CHECK(glider_step_symbols(glyphs("WRWLW")) == glyphs("WLWRW"));
}

TEST_CASE("structured and symbol forms agree") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint64_t> widths;
    std::vector<std::uint64_t> phases;
    for (std::size_t g = 0; g < 1 + rng() % 4; ++g) {
      widths.push_back(1 + rng() % 7);
      phases.push_back(rng() % (2 * widths.back()));
    }
    auto cfg = GliderConfig::from_phases(widths, phases);
    CHECK(cfg.phases() == phases);
    auto sym = cfg.symbols();
    CHECK(GliderConfig::from_symbols(sym) == cfg);
    for (int t = 0; t < 30; ++t) {
      cfg = glider_step(cfg);
      sym = glider_step_symbols(sym);
      REQUIRE(cfg.symbols() == sym);
    }
  }
}

TEST_CASE("gap of width w has least period 2w") {
  for (std::uint64_t w = 1; w <= 12; ++w) {
    for (std::uint64_t phase = 0; phase < 2 * w; ++phase) {
      const auto start = GliderConfig::from_phases({w}, {phase}).symbols();
      const auto period = oracle::orbit_period(
          start, [](const std::vector<Glyph>& s) { return glider_step_symbols(s); }, 100);
      CHECK(period == 2 * w);
    }
  }
}

TEST_CASE("malformed symbol arrays") {
  CHECK_THROWS_AS(GliderConfig::from_symbols(glyphs("R..W")), Error);
  CHECK_THROWS_AS(GliderConfig::from_symbols(glyphs("W..W")), Error);
  CHECK_THROWS_AS(GliderConfig::from_symbols(glyphs("WRLW")), Error);
  CHECK_THROWS_AS(GliderConfig::from_symbols(glyphs("WRWW")), Error);
  CHECK_THROWS_AS(GliderConfig({2}, {Particle{2, Direction::Left}}), Error);
}

TEST_CASE("even seed round trip") {
  const auto seed = build_glider_seed(Profile::parse("|2,3,4"), 3);
  CHECK(seed.kind == SeedCase::Even);
  CHECK(seed.config.widths() == std::vector<std::uint64_t>{1, 3, 12});
  const auto points = all_points({2, 3, 4});
  REQUIRE(points.size() == 24);
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& w : points) {
    const auto cfg = encode_glider(w, SeedCase::Even);
    seen.insert(cfg.phases());
    CHECK(decode_glider(cfg, SeedCase::Even) == w);
    CHECK(decode_glider(effective_step(cfg, SeedCase::Even), SeedCase::Even) == plus_one(w));
  }
  CHECK(seen.size() == 24);
  CHECK(decode_glider(seed.config, SeedCase::Even) == points.front());
}

TEST_CASE("even seed moves the first even term to the front") {
  const auto seed = build_glider_seed(Profile::parse("3|4"), 2);
  CHECK(seed.moduli == std::vector<std::uint64_t>{4, 3});
  CHECK(seed.config.widths() == std::vector<std::uint64_t>{2, 6});
}

TEST_CASE("odd seed round trip") {
  const auto seed = build_glider_seed(Profile::parse("|3,5"), 2);
  CHECK(seed.kind == SeedCase::Odd);
  CHECK(seed.config.widths() == std::vector<std::uint64_t>{3, 15});
  const auto points = all_points({3, 5});
  REQUIRE(points.size() == 15);
  for (const auto& w : points) {
    const auto cfg = encode_glider(w, SeedCase::Odd);
    CHECK(decode_glider(cfg, SeedCase::Odd) == w);
    CHECK(decode_glider(effective_step(cfg, SeedCase::Odd), SeedCase::Odd) == plus_one(w));
  }
  // A single step lands on an odd phase, which is off the orbit of T^2.
  const auto off = glider_step(seed.config);
  try {
    decode_glider(off, SeedCase::Odd);
    FAIL("expected an off-orbit error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PropertyViolation);
  }
}

TEST_CASE("seed orbit visits exactly the encoded points") {
  const auto seed = build_glider_seed(Profile::parse("|2,3,4"), 3);
  auto cfg = seed.config;
  auto w = decode_glider(cfg, seed.kind);
  for (int t = 0; t < 48; ++t) {
    cfg = effective_step(cfg, seed.kind);
    w = plus_one(w);
    CHECK(encode_glider(w, seed.kind) == cfg);
  }
}

TEST_CASE("glider diagram") {
  const auto seed = build_glider_seed(Profile::parse("|2,3"), 2);
  const auto d = glider_spacetime(seed.config, 40);
  CHECK(render_text(d).substr(0, 7) == "WRWR..W");
  CHECK(d.column_period(1) == PeriodDetection{0, 1});
  CHECK(d.column_period(2) == PeriodDetection{0, 2});
  CHECK(d.column_period(4) == PeriodDetection{0, 6});
}
