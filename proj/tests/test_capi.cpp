#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "odembed/odembed.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  odem_free(s);
  return out;
}

}  // namespace

TEST_CASE("profiles through the C interface") {
  odem_profile* p = nullptr;
  REQUIRE(odem_profile_parse("5|6", &p) == ODEM_OK);
  uint64_t terms[3] = {};
  CHECK(odem_profile_terms(p, 3, terms) == ODEM_OK);
  CHECK(terms[0] == 5);
  CHECK(terms[2] == 6);
  uint64_t m = 0;
  uint64_t n = 0;
  CHECK(odem_canonical_form(p, &m, &n) == ODEM_OK);
  CHECK(m == 5);
  CHECK(n == 6);
  char* next = nullptr;
  CHECK(odem_odometer_plus(p, 2, "4,5", 1, &next) == ODEM_OK);
  CHECK(take(next) == "0,0");
  odem_profile_destroy(p);

  odem_profile* bad = nullptr;
  CHECK(odem_profile_parse("6", &bad) == ODEM_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(odem_last_error()).find("malformed profile") != std::string::npos);
  CHECK(odem_profile_parse(nullptr, &bad) == ODEM_INVALID_ARGUMENT);
}

TEST_CASE("linear configurations and diagrams") {
  odem_linear* x = nullptr;
  REQUIRE(odem_linear_create(2, "x-bar", &x) == ODEM_OK);
  odem_diagram* d = nullptr;
  REQUIRE(odem_linear_spacetime(x, -4, 0, 16, &d) == ODEM_OK);
  char* text = nullptr;
  size_t size = 0;
  CHECK(odem_diagram_render(d, ODEM_FORMAT_TEXT, &text, &size) == ODEM_OK);
  const std::string rendered = take(text);
  CHECK(rendered.size() == size);
  CHECK(rendered.substr(0, 12) == "00001\n00011\n");
  size_t transient = 99;
  size_t period = 0;
  CHECK(odem_diagram_column_period(d, -2, &transient, &period) == ODEM_OK);
  CHECK(transient == 0);
  CHECK(period == 4);
  odem_diagram* brief = nullptr;
  REQUIRE(odem_linear_spacetime(x, -1, 0, 3, &brief) == ODEM_OK);
  CHECK(odem_diagram_column_period(brief, -1, &transient, &period) == ODEM_NOT_FOUND);
  odem_diagram_destroy(brief);
  CHECK(odem_diagram_column_period(d, 5, &transient, &period) == ODEM_INVALID_ARGUMENT);
  char* pgm = nullptr;
  CHECK(odem_diagram_render(d, ODEM_FORMAT_PGM, &pgm, &size) == ODEM_OK);
  CHECK(std::memcmp(pgm, "P5\n5 16\n255\n", 12) == 0);
  CHECK(size == 12 + 80);
  odem_free(pgm);
  odem_diagram_destroy(d);

  CHECK(odem_linear_step(x, 3) == ODEM_OK);
  uint32_t cells[4] = {};
  CHECK(odem_linear_cells(x, -3, 0, cells) == ODEM_OK);
  CHECK(cells[0] == 1);
  CHECK(cells[1] == 1);
  CHECK(cells[2] == 1);
  CHECK(cells[3] == 1);
  odem_linear_destroy(x);

  odem_linear* tail = nullptr;
  REQUIRE(odem_linear_create(3, "periodic:2", &tail) == ODEM_OK);
  CHECK(odem_linear_right_period(tail, &period) == ODEM_OK);
  CHECK(period == 2);
  odem_linear_destroy(tail);

  CHECK(odem_linear_create(1, "x-bar", &tail) == ODEM_INVALID_ARGUMENT);
  CHECK(odem_linear_create(2, "nope", &tail) == ODEM_INVALID_ARGUMENT);
}

TEST_CASE("gliders") {
  odem_profile* p = nullptr;
  REQUIRE(odem_profile_parse("|3,5", &p) == ODEM_OK);
  odem_glider* g = nullptr;
  REQUIRE(odem_glider_seed(p, 2, &g) == ODEM_OK);
  CHECK(odem_glider_step(g, 4) == ODEM_OK);
  char* point = nullptr;
  CHECK(odem_glider_decode(g, &point) == ODEM_OK);
  CHECK(take(point) == "2,2");
  CHECK(odem_glider_step(g, 1) == ODEM_OK);
  CHECK(odem_glider_decode(g, &point) == ODEM_PROPERTY_VIOLATION);
  odem_glider_destroy(g);
  odem_profile_destroy(p);
}

TEST_CASE("embeddings") {
  odem_profile* p = nullptr;
  REQUIRE(odem_profile_parse("|6", &p) == ODEM_OK);
  odem_embedding* e = nullptr;
  REQUIRE(odem_embed(p, 3, &e) == ODEM_OK);
  uint64_t order = 0;
  CHECK(odem_embedding_order(e, &order) == ODEM_OK);
  CHECK(order == 216);
  int64_t lo = 0;
  int64_t hi = 0;
  CHECK(odem_embedding_window(e, &lo, &hi) == ODEM_OK);
  std::vector<uint32_t> cells(static_cast<size_t>(hi - lo + 1));
  CHECK(odem_embedding_encode(e, "1,2,3", cells.data(), cells.size()) == ODEM_OK);
  char* point = nullptr;
  CHECK(odem_embedding_decode(e, lo, cells.data(), cells.size(), &point) == ODEM_OK);
  CHECK(take(point) == "1,2,3");
  CHECK(odem_embedding_encode(e, "1,2,3", cells.data(), 2) == ODEM_INVALID_ARGUMENT);
  cells[1] = (cells[1] + 1) % 6;
  CHECK(odem_embedding_decode(e, lo, cells.data(), cells.size(), &point) ==
        ODEM_PROPERTY_VIOLATION);
  size_t ok = 0;
  size_t fail = 1;
  char* report = nullptr;
  CHECK(odem_embedding_roundtrip(e, 1000, &ok, &fail, &report) == ODEM_OK);
  CHECK(ok == 216);
  CHECK(fail == 0);
  CHECK(take(report) == "ROUNDTRIP ok=216 fail=0\n");
  odem_embedding_destroy(e);
  odem_profile_destroy(p);

  odem_profile* primes = nullptr;
  REQUIRE(odem_profile_parse("primes", &primes) == ODEM_OK);
  CHECK(odem_embed(primes, 3, &e) == ODEM_INVALID_ARGUMENT);
  uint64_t prime = 0;
  size_t k = 0;
  char* text = nullptr;
  CHECK(odem_witness(primes, 6, 8, &prime, &k, &text) == ODEM_OK);
  CHECK(prime == 5);
  CHECK(k == 3);
  CHECK(take(text) == "WITNESS p=5 k=3");
  CHECK(odem_witness(primes, 6, 2, &prime, &k, &text) == ODEM_NOT_FOUND);
  CHECK(take(text) == "NO WITNESS depth=2");
  odem_profile_destroy(primes);
}

TEST_CASE("last error is per thread") {
  odem_profile* p = nullptr;
  CHECK(odem_profile_parse("bad", &p) == ODEM_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] {
    odem_profile* q = nullptr;
    odem_profile_parse("|2", &q);
    other = odem_last_error();
    odem_profile_destroy(q);
  });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(odem_last_error()).empty());
  CHECK(std::string(odem_status_name(ODEM_NOT_FOUND)) == "not found");
}
