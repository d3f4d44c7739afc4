#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "odembed/odembed.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitProperty = 2;
constexpr int kExitInternal = 3;

struct Failure {
  int code;
  std::string message;
};

int exit_code_of(odem_status status) {
  switch (status) {
    case ODEM_OK:
    case ODEM_NOT_FOUND:
      return kExitOk;
    case ODEM_INVALID_ARGUMENT:
    case ODEM_INFEASIBLE:
      return kExitValidation;
    case ODEM_PROPERTY_VIOLATION:
      return kExitProperty;
    case ODEM_INTERNAL_ERROR:
      return kExitInternal;
  }
  return kExitInternal;
}

// Throws a Failure naming `context` unless the call succeeded.
void check(odem_status status, const std::string& context) {
  if (status == ODEM_OK) return;
  throw Failure{exit_code_of(status), context + ": " + odem_last_error()};
}

struct FreeBuffer {
  void operator()(void* p) const { odem_free(p); }
};
using Buffer = std::unique_ptr<char, FreeBuffer>;

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using ProfilePtr = std::unique_ptr<odem_profile, Deleter<odem_profile, odem_profile_destroy>>;
using LinearPtr = std::unique_ptr<odem_linear, Deleter<odem_linear, odem_linear_destroy>>;
using DiagramPtr = std::unique_ptr<odem_diagram, Deleter<odem_diagram, odem_diagram_destroy>>;
using GliderPtr = std::unique_ptr<odem_glider, Deleter<odem_glider, odem_glider_destroy>>;
using EmbeddingPtr =
    std::unique_ptr<odem_embedding, Deleter<odem_embedding, odem_embedding_destroy>>;

struct Options {
  std::uint32_t modulus = 0;
  std::string profile;
  std::size_t depth = 0;
  std::size_t steps = 0;
  std::string window;
  std::string format = "text";
  std::string out;
  std::string seed_spec = "x-bar";
  std::string point;
  std::uint64_t plus = 1;
  std::string snapshot;
  std::uint64_t bound = UINT64_MAX;
};

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

Range parse_window(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s, std::int64_t& v) {
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && end == s.data() + s.size() && !s.empty();
  };
  Range r{0, 0};
  if (dots == std::string::npos ||
      !number(std::string_view(text).substr(0, dots), r.lo) ||
      !number(std::string_view(text).substr(dots + 2), r.hi)) {
    throw Failure{kExitValidation, "--window: expected lo..hi, got '" + text + "'"};
  }
  if (r.lo > r.hi) throw Failure{kExitValidation, "--window: lo must not exceed hi"};
  return r;
}

std::vector<std::uint32_t> parse_cells(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto item = rest.substr(0, comma);
    std::uint32_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty()) {
      throw Failure{kExitValidation, "--snapshot: '" + std::string(item) + "' is not a digit"};
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

odem_format parse_format(const std::string& text) {
  if (text == "text") return ODEM_FORMAT_TEXT;
  if (text == "pgm") return ODEM_FORMAT_PGM;
  throw Failure{kExitValidation, "--format: expected text or pgm, got '" + text + "'"};
}

void emit(const Options& opt, const char* bytes, std::size_t size) {
  if (opt.out.empty()) {
    std::fwrite(bytes, 1, size, stdout);
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  file.write(bytes, static_cast<std::streamsize>(size));
  if (!file) throw Failure{kExitValidation, "--out: cannot write '" + opt.out + "'"};
}

void emit(const Options& opt, const std::string& text) { emit(opt, text.data(), text.size()); }

ProfilePtr load_profile(const Options& opt) {
  odem_profile* raw = nullptr;
  check(odem_profile_parse(opt.profile.c_str(), &raw), "--profile");
  return ProfilePtr(raw);
}

LinearPtr load_linear(const Options& opt) {
  odem_linear* raw = nullptr;
  check(odem_linear_create(opt.modulus, opt.seed_spec.c_str(), &raw), "--seed-spec");
  return LinearPtr(raw);
}

void render(const Options& opt, const odem_diagram* diagram) {
  const odem_format format = parse_format(opt.format);
  char* bytes = nullptr;
  std::size_t size = 0;
  check(odem_diagram_render(diagram, format, &bytes, &size), "--format");
  Buffer owned(bytes);
  emit(opt, bytes, size);
}

DiagramPtr linear_diagram(const Options& opt) {
  const Range w = parse_window(opt.window);
  auto config = load_linear(opt);
  odem_diagram* raw = nullptr;
  check(odem_linear_spacetime(config.get(), w.lo, w.hi, opt.steps, &raw), "--window");
  return DiagramPtr(raw);
}

void simulate_linear(const Options& opt) {
  parse_format(opt.format);
  render(opt, linear_diagram(opt).get());
}

void simulate_glider(const Options& opt) {
  parse_format(opt.format);
  auto profile = load_profile(opt);
  odem_glider* glider = nullptr;
  check(odem_glider_seed(profile.get(), opt.depth, &glider), "--depth");
  GliderPtr owned(glider);
  odem_diagram* raw = nullptr;
  check(odem_glider_spacetime(glider, opt.steps, &raw), "--steps");
  render(opt, DiagramPtr(raw).get());
}

void analyze_periods(const Options& opt) {
  DiagramPtr diagram;
  if (!opt.profile.empty()) {
    auto profile = load_profile(opt);
    odem_diagram* raw = nullptr;
    check(odem_odometer_diagram(profile.get(), opt.depth, opt.steps, &raw), "--depth");
    diagram.reset(raw);
  } else {
    diagram = linear_diagram(opt);
  }
  char* text = nullptr;
  check(odem_diagram_periods(diagram.get(), &text), "analyze-periods");
  emit(opt, Buffer(text).get());
}

void embed(const Options& opt) {
  auto profile = load_profile(opt);
  odem_embedding* raw = nullptr;
  check(odem_embed(profile.get(), opt.depth, &raw), "--profile");
  EmbeddingPtr embedding(raw);
  char* text = nullptr;
  check(odem_embedding_describe(raw, &text), "embed");
  std::string out = Buffer(text).get();
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  check(odem_embedding_window(raw, &lo, &hi), "embed");
  if (!opt.point.empty()) {
    std::vector<std::uint32_t> cells(static_cast<std::size_t>(hi - lo + 1));
    check(odem_embedding_encode(raw, opt.point.c_str(), cells.data(), cells.size()), "--point");
    out += "ENCODE " + std::to_string(lo) + ".." + std::to_string(hi) + " ";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(cells[i]);
    }
    out += '\n';
  }
  if (!opt.snapshot.empty()) {
    const auto cells = parse_cells(opt.snapshot);
    const std::int64_t from = opt.window.empty() ? lo : parse_window(opt.window).lo;
    char* point = nullptr;
    const odem_status status =
        odem_embedding_decode(raw, from, cells.data(), cells.size(), &point);
    if (status != ODEM_OK) {
      emit(opt, out);
      check(status, "--snapshot");
    }
    out += "DECODE " + std::string(Buffer(point).get()) + "\n";
  }
  emit(opt, out);
}

void roundtrip(const Options& opt) {
  auto profile = load_profile(opt);
  odem_embedding* raw = nullptr;
  check(odem_embed(profile.get(), opt.depth, &raw), "--profile");
  EmbeddingPtr embedding(raw);
  std::size_t ok = 0;
  std::size_t failed = 0;
  char* text = nullptr;
  check(odem_embedding_roundtrip(raw, opt.bound, &ok, &failed, &text), "roundtrip");
  emit(opt, Buffer(text).get());
  if (failed > 0) throw Failure{kExitProperty, "roundtrip: " + std::to_string(failed) + " failures"};
}

void odometer_info(const Options& opt) {
  auto profile = load_profile(opt);
  char* text = nullptr;
  check(odem_odometer_report(profile.get(), opt.depth, &text), "--depth");
  std::string out = Buffer(text).get();
  if (!opt.point.empty()) {
    char* next = nullptr;
    check(odem_odometer_plus(profile.get(), opt.depth, opt.point.c_str(), opt.plus, &next),
          "--point");
    out += "plus " + std::to_string(opt.plus) + " " + Buffer(next).get() + "\n";
  }
  emit(opt, out);
}

void witness(const Options& opt) {
  auto profile = load_profile(opt);
  char* text = nullptr;
  const odem_status status =
      odem_witness(profile.get(), opt.modulus, opt.depth, nullptr, nullptr, &text);
  if (status != ODEM_NOT_FOUND) check(status, "--modulus");
  emit(opt, std::string(Buffer(text).get()) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Odometers, the linear cellular automata T_n, gliders with reflecting walls, "
               "and embeddings between them"};
  app.require_subcommand(1);
  Options opt;

  auto modulus = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--modulus", opt.modulus, "Cell alphabet size n")
                  ->check(CLI::Range(2u, 1u << 30));
    if (required) o->required();
    return o;
  };
  auto profile = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--profile", opt.profile, "Profile: prefix|cycle or primes");
    if (required) o->required();
    return o;
  };
  auto depth = [&](CLI::App* sub, const std::string& help) {
    return sub->add_option("--depth", opt.depth, help)->required()->check(CLI::PositiveNumber);
  };
  auto steps = [&](CLI::App* sub) {
    return sub->add_option("--steps", opt.steps, "Number of time steps")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto window = [&](CLI::App* sub) {
    return sub->add_option("--window", opt.window, "Cell range lo..hi")->allow_extra_args(false);
  };
  auto output = [&](CLI::App* sub, bool rendered) {
    if (rendered) {
      sub->add_option("--format", opt.format, "text or pgm")
          ->check(CLI::IsMember({"text", "pgm"}));
    }
    sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
  };

  auto* sim_linear = app.add_subcommand("simulate-linear", "Space-time diagram of T_n");
  modulus(sim_linear, true);
  sim_linear->add_option("--seed-spec", opt.seed_spec,
                         "x-bar, periodic:<m> or left|core|transient|period");
  window(sim_linear)->required();
  steps(sim_linear);
  output(sim_linear, true);

  auto* sim_glider = app.add_subcommand("simulate-glider", "Space-time diagram of a glider seed");
  profile(sim_glider, true);
  depth(sim_glider, "Number of gaps");
  steps(sim_glider);
  output(sim_glider, true);

  auto* analyze = app.add_subcommand("analyze-periods", "Least period of every column");
  auto* a_profile = profile(analyze, false);
  auto* a_modulus = modulus(analyze, false);
  auto* a_seed = analyze->add_option("--seed-spec", opt.seed_spec,
                                     "x-bar, periodic:<m> or left|core|transient|period");
  auto* a_window = window(analyze);
  auto* a_depth = analyze->add_option("--depth", opt.depth, "Odometer columns")
                      ->check(CLI::PositiveNumber);
  steps(analyze);
  output(analyze, false);
  a_profile->excludes(a_modulus)->excludes(a_seed)->excludes(a_window)->needs(a_depth);
  a_depth->needs(a_profile);

  auto* embed_cmd = app.add_subcommand("embed", "Embed the canonical form of an odometer");
  profile(embed_cmd, true);
  depth(embed_cmd, "Truncation depth");
  embed_cmd->add_option("--point", opt.point, "Canonical odometer digits to encode");
  auto* e_snapshot = embed_cmd->add_option("--snapshot", opt.snapshot,
                                           "Comma-separated cells to decode");
  window(embed_cmd)->needs(e_snapshot);
  output(embed_cmd, false);

  auto* rt = app.add_subcommand("roundtrip", "Check decode(encode(z)) and the conjugacy square");
  profile(rt, true);
  depth(rt, "Truncation depth");
  rt->add_option("--bound", opt.bound, "Check only the first N points")
      ->check(CLI::PositiveNumber);
  output(rt, false);

  auto* info = app.add_subcommand("odometer-info", "Terms, multiplicity and canonical form");
  profile(info, true);
  depth(info, "Number of terms");
  auto* i_point = info->add_option("--point", opt.point, "Digits to advance");
  info->add_option("--plus", opt.plus, "Amount to add to --point")->needs(i_point);
  output(info, false);

  auto* wit = app.add_subcommand("witness", "Prime certificate against embedding into T_n");
  profile(wit, true);
  modulus(wit, true);
  depth(wit, "Search depth");
  output(wit, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (analyze->parsed() && opt.profile.empty() && (opt.modulus == 0 || opt.window.empty())) {
      throw Failure{kExitValidation,
                    "analyze-periods: give --profile and --depth, or --modulus and --window"};
    }
    if (sim_linear->parsed()) simulate_linear(opt);
    if (sim_glider->parsed()) simulate_glider(opt);
    if (analyze->parsed()) analyze_periods(opt);
    if (embed_cmd->parsed()) embed(opt);
    if (rt->parsed()) roundtrip(opt);
    if (info->parsed()) odometer_info(opt);
    if (wit->parsed()) witness(opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kExitOk;
}
