#include "odembed/odembed.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "odembed/embedding.hpp"
#include "odembed/errors.hpp"
#include "odembed/glider_ca.hpp"
#include "odembed/linear_ca.hpp"
#include "odembed/odometer.hpp"

struct odem_profile {
  odembed::Profile value;
};

struct odem_linear {
  odembed::LinearConfig value;
};

struct odem_diagram {
  odembed::SpaceTimeDiagram value;
};

struct odem_glider {
  odembed::GliderSeed seed;
  odembed::GliderConfig current;
};

struct odem_embedding {
  odembed::EmbeddingHandle value;
};

namespace {

thread_local std::string last_error;

odem_status status_of(odembed::ErrorKind kind) {
  switch (kind) {
    case odembed::ErrorKind::InvalidArgument:
      return ODEM_INVALID_ARGUMENT;
    case odembed::ErrorKind::PropertyViolation:
      return ODEM_PROPERTY_VIOLATION;
    case odembed::ErrorKind::Infeasible:
      return ODEM_INFEASIBLE;
    case odembed::ErrorKind::Internal:
      return ODEM_INTERNAL_ERROR;
  }
  return ODEM_INTERNAL_ERROR;
}

odem_status fail(odem_status status, std::string what) {
  last_error = std::move(what);
  return status;
}

template <class F>
odem_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const odembed::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ODEM_INFEASIBLE, "out of memory");
  } catch (const std::exception& e) {
    return fail(ODEM_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(ODEM_INTERNAL_ERROR, "unknown exception");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) odembed::fail_invalid(std::string(name) + " must not be null");
}

char* copy_out(const std::string& s) {
  auto* buffer = static_cast<char*>(std::malloc(s.size() + 1));
  if (buffer == nullptr) throw std::bad_alloc();
  std::memcpy(buffer, s.data(), s.size());
  buffer[s.size()] = '\0';
  return buffer;
}

}  // namespace

extern "C" {

const char* odem_last_error(void) { return last_error.c_str(); }

const char* odem_status_name(odem_status status) {
  switch (status) {
    case ODEM_OK:
      return "ok";
    case ODEM_INVALID_ARGUMENT:
      return "invalid argument";
    case ODEM_PROPERTY_VIOLATION:
      return "property violation";
    case ODEM_INFEASIBLE:
      return "infeasible";
    case ODEM_NOT_FOUND:
      return "not found";
    case ODEM_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void odem_free(void* buffer) { std::free(buffer); }

// ---- profiles and odometers ---------------------------------------------------

odem_status odem_profile_parse(const char* text, odem_profile** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new odem_profile{odembed::Profile::parse(text)};
    return ODEM_OK;
  });
}

void odem_profile_destroy(odem_profile* profile) { delete profile; }

odem_status odem_profile_terms(const odem_profile* profile, size_t count, uint64_t* out_terms) {
  return guarded([&] {
    require(profile, "profile");
    if (count > 0) require(out_terms, "out_terms");
    const auto terms = profile->value.terms(count);
    std::copy(terms.begin(), terms.end(), out_terms);
    return ODEM_OK;
  });
}

odem_status odem_profile_finitary(const odem_profile* profile, int* out_finitary) {
  return guarded([&] {
    require(profile, "profile");
    require(out_finitary, "out_finitary");
    *out_finitary = profile->value.finitary() ? 1 : 0;
    return ODEM_OK;
  });
}

odem_status odem_canonical_form(const odem_profile* profile, uint64_t* out_m, uint64_t* out_n) {
  return guarded([&] {
    require(profile, "profile");
    require(out_m, "out_m");
    require(out_n, "out_n");
    const auto form = odembed::canonical_form(profile->value);
    *out_m = form.m;
    *out_n = form.n;
    return ODEM_OK;
  });
}

odem_status odem_odometer_report(const odem_profile* profile, size_t depth, char** out_text) {
  return guarded([&] {
    require(profile, "profile");
    require(out_text, "out_text");
    *out_text = copy_out(odembed::odometer_report(profile->value, depth));
    return ODEM_OK;
  });
}

odem_status odem_odometer_plus(const odem_profile* profile, size_t depth, const char* point,
                               uint64_t k, char** out_point) {
  return guarded([&] {
    require(profile, "profile");
    require(point, "point");
    require(out_point, "out_point");
    const auto z = odembed::parse_point(point, profile->value.terms(depth));
    *out_point = copy_out(odembed::plus(z, k).to_string());
    return ODEM_OK;
  });
}

odem_status odem_odometer_diagram(const odem_profile* profile, size_t depth, size_t steps,
                                  odem_diagram** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = new odem_diagram{odembed::odometer_spacetime(profile->value, depth, steps)};
    return ODEM_OK;
  });
}

// ---- linear CA ----------------------------------------------------------------

odem_status odem_linear_create(uint32_t modulus, const char* seed_spec, odem_linear** out) {
  return guarded([&] {
    require(seed_spec, "seed_spec");
    require(out, "out");
    *out = new odem_linear{odembed::parse_seed_spec(seed_spec, odembed::Modulus(modulus))};
    return ODEM_OK;
  });
}

void odem_linear_destroy(odem_linear* config) { delete config; }

odem_status odem_linear_step(odem_linear* config, uint64_t steps) {
  return guarded([&] {
    require(config, "config");
    for (uint64_t t = 0; t < steps; ++t) config->value = odembed::step(config->value);
    return ODEM_OK;
  });
}

odem_status odem_linear_cells(const odem_linear* config, int64_t lo, int64_t hi,
                              uint32_t* out_cells) {
  return guarded([&] {
    require(config, "config");
    require(out_cells, "out_cells");
    const auto cells = config->value.cells(lo, hi);
    std::copy(cells.begin(), cells.end(), out_cells);
    return ODEM_OK;
  });
}

odem_status odem_linear_right_period(const odem_linear* config, size_t* out_period) {
  return guarded([&] {
    require(config, "config");
    require(out_period, "out_period");
    *out_period = odembed::right_period(config->value);
    return ODEM_OK;
  });
}

odem_status odem_linear_spacetime(const odem_linear* config, int64_t lo, int64_t hi,
                                  size_t steps, odem_diagram** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = new odem_diagram{odembed::spacetime(config->value, lo, hi, steps)};
    return ODEM_OK;
  });
}

// ---- diagrams -----------------------------------------------------------------

void odem_diagram_destroy(odem_diagram* diagram) { delete diagram; }

odem_status odem_diagram_bounds(const odem_diagram* diagram, int64_t* out_lo, int64_t* out_hi,
                                size_t* out_steps) {
  return guarded([&] {
    require(diagram, "diagram");
    if (out_lo) *out_lo = diagram->value.lo();
    if (out_hi) *out_hi = diagram->value.hi();
    if (out_steps) *out_steps = diagram->value.steps();
    return ODEM_OK;
  });
}

odem_status odem_diagram_at(const odem_diagram* diagram, int64_t cell, size_t time,
                            uint32_t* out_value) {
  return guarded([&] {
    require(diagram, "diagram");
    require(out_value, "out_value");
    *out_value = diagram->value.at(cell, time);
    return ODEM_OK;
  });
}

odem_status odem_diagram_column_period(const odem_diagram* diagram, int64_t cell,
                                       size_t* out_transient, size_t* out_period) {
  return guarded([&] {
    require(diagram, "diagram");
    const auto& d = diagram->value;
    if (cell < d.lo() || cell > d.hi()) odembed::fail_invalid("column outside the diagram");
    const auto detected = d.annotated() ? d.column_period(cell) : odembed::least_period(d.column(cell));
    if (!detected) return fail(ODEM_NOT_FOUND, "no period confirmed in this window");
    if (out_transient) *out_transient = detected->transient;
    if (out_period) *out_period = detected->period;
    return ODEM_OK;
  });
}

odem_status odem_diagram_render(const odem_diagram* diagram, odem_format format,
                                char** out_bytes, size_t* out_size) {
  return guarded([&] {
    require(diagram, "diagram");
    require(out_bytes, "out_bytes");
    std::string bytes;
    switch (format) {
      case ODEM_FORMAT_TEXT:
        bytes = odembed::render_text(diagram->value);
        break;
      case ODEM_FORMAT_PGM:
        bytes = odembed::render_pgm(diagram->value);
        break;
      default:
        odembed::fail_invalid("unknown output format");
    }
    *out_bytes = copy_out(bytes);
    if (out_size) *out_size = bytes.size();
    return ODEM_OK;
  });
}

odem_status odem_diagram_periods(const odem_diagram* diagram, char** out_text) {
  return guarded([&] {
    require(diagram, "diagram");
    require(out_text, "out_text");
    *out_text = copy_out(odembed::render_periods(diagram->value));
    return ODEM_OK;
  });
}

// ---- gliders ------------------------------------------------------------------

odem_status odem_glider_seed(const odem_profile* profile, size_t gaps, odem_glider** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    auto seed = odembed::build_glider_seed(profile->value, gaps);
    auto current = seed.config;
    *out = new odem_glider{std::move(seed), std::move(current)};
    return ODEM_OK;
  });
}

void odem_glider_destroy(odem_glider* glider) { delete glider; }

odem_status odem_glider_step(odem_glider* glider, uint64_t steps) {
  return guarded([&] {
    require(glider, "glider");
    for (uint64_t t = 0; t < steps; ++t) glider->current = odembed::glider_step(glider->current);
    return ODEM_OK;
  });
}

odem_status odem_glider_spacetime(const odem_glider* glider, size_t steps, odem_diagram** out) {
  return guarded([&] {
    require(glider, "glider");
    require(out, "out");
    *out = new odem_diagram{odembed::glider_spacetime(glider->current, steps)};
    return ODEM_OK;
  });
}

odem_status odem_glider_decode(const odem_glider* glider, char** out_point) {
  return guarded([&] {
    require(glider, "glider");
    require(out_point, "out_point");
    const auto ilp = odembed::decode_glider(glider->current, glider->seed.kind);
    std::string text;
    for (const auto c : ilp.coordinates()) {
      if (!text.empty()) text.push_back(',');
      text += std::to_string(c);
    }
    *out_point = copy_out(text);
    return ODEM_OK;
  });
}

// ---- embeddings ---------------------------------------------------------------

odem_status odem_embed(const odem_profile* profile, size_t depth, odem_embedding** out) {
  return guarded([&] {
    require(profile, "profile");
    require(out, "out");
    *out = new odem_embedding{odembed::embed_odometer(profile->value, depth)};
    return ODEM_OK;
  });
}

void odem_embedding_destroy(odem_embedding* embedding) { delete embedding; }

odem_status odem_embedding_describe(const odem_embedding* embedding, char** out_text) {
  return guarded([&] {
    require(embedding, "embedding");
    require(out_text, "out_text");
    *out_text = copy_out(embedding->value.describe());
    return ODEM_OK;
  });
}

odem_status odem_embedding_order(const odem_embedding* embedding, uint64_t* out_order) {
  return guarded([&] {
    require(embedding, "embedding");
    require(out_order, "out_order");
    *out_order = embedding->value.order();
    return ODEM_OK;
  });
}

odem_status odem_embedding_window(const odem_embedding* embedding, int64_t* out_lo,
                                  int64_t* out_hi) {
  return guarded([&] {
    require(embedding, "embedding");
    const auto window = embedding->value.window();
    if (out_lo) *out_lo = window.lo;
    if (out_hi) *out_hi = window.hi;
    return ODEM_OK;
  });
}

odem_status odem_embedding_encode(const odem_embedding* embedding, const char* point,
                                  uint32_t* out_cells, size_t capacity) {
  return guarded([&] {
    require(embedding, "embedding");
    require(point, "point");
    require(out_cells, "out_cells");
    const auto z = odembed::parse_point(point, embedding->value.moduli());
    const auto window = embedding->value.encode(z);
    if (capacity < window.cells.size()) {
      odembed::fail_invalid("output buffer holds " + std::to_string(capacity) + " cells, need " +
                            std::to_string(window.cells.size()));
    }
    std::copy(window.cells.begin(), window.cells.end(), out_cells);
    return ODEM_OK;
  });
}

odem_status odem_embedding_decode(const odem_embedding* embedding, int64_t lo,
                                  const uint32_t* cells, size_t count, char** out_point) {
  return guarded([&] {
    require(embedding, "embedding");
    require(cells, "cells");
    require(out_point, "out_point");
    const auto n = static_cast<uint32_t>(embedding->value.form().n);
    const odembed::LinearWindow snapshot{n, lo, std::vector<odembed::Digit>(cells, cells + count)};
    *out_point = copy_out(embedding->value.decode(snapshot).to_string());
    return ODEM_OK;
  });
}

odem_status odem_embedding_roundtrip(const odem_embedding* embedding, uint64_t bound,
                                     size_t* out_ok, size_t* out_fail, char** out_report) {
  return guarded([&] {
    require(embedding, "embedding");
    const auto report = odembed::verify_roundtrip(embedding->value, bound);
    if (out_ok) *out_ok = report.ok;
    if (out_fail) *out_fail = report.fail;
    if (out_report) {
      std::string text = report.to_string() + "\n";
      for (const auto& line : report.failures) text += line + "\n";
      *out_report = copy_out(text);
    }
    return ODEM_OK;
  });
}

odem_status odem_witness(const odem_profile* profile, uint32_t modulus, size_t depth,
                         uint64_t* out_prime, size_t* out_k, char** out_text) {
  return guarded([&] {
    require(profile, "profile");
    const auto witness = odembed::nonfinitary_witness(profile->value, modulus, depth);
    if (!witness) {
      if (out_text) *out_text = copy_out(odembed::no_witness_message(depth));
      return fail(ODEM_NOT_FOUND, odembed::no_witness_message(depth));
    }
    if (out_prime) *out_prime = witness->prime;
    if (out_k) *out_k = witness->k;
    if (out_text) *out_text = copy_out(witness->to_string());
    return ODEM_OK;
  });
}

}  // extern "C"
