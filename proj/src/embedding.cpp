#include "odembed/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "odembed/errors.hpp"
#include "odembed/number_theory.hpp"

namespace odembed {

// ---- prime components ------------------------------------------------------------

std::vector<std::uint64_t> PrimeComponentSeed::moduli(std::size_t depth) const {
  std::vector<std::uint64_t> out(depth, p);
  if (m > 1 && depth > 0) out[0] = m;
  return out;
}

std::uint64_t PrimeComponentSeed::order(std::size_t depth) const {
  std::uint64_t out = 1;
  for (const auto s : moduli(depth)) out = checked_mul(out, s);
  return out;
}

std::uint64_t PrimeComponentSeed::steps_of(const OdometerPoint& z) const {
  if (z.moduli() != moduli(z.depth())) {
    fail_invalid("point moduli do not match the Z(" + std::to_string(m) + ", " +
                 std::to_string(p) + ", ...) component");
  }
  return z.value();
}

OdometerPoint PrimeComponentSeed::point_at(std::uint64_t steps, std::size_t depth) const {
  return OdometerPoint::from_value(moduli(depth), steps % order(depth));
}

PrimeComponentSeed build_prime_seed(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) fail_invalid("build_prime_seed: " + std::to_string(p) + " is not prime");
  if (m == 0) fail_invalid("build_prime_seed: m must be >= 1");
  if (m % p == 0) {
    fail_invalid("build_prime_seed: p = " + std::to_string(p) + " divides m = " + std::to_string(m));
  }
  const Modulus n(static_cast<std::uint32_t>(p));
  if (m == 1) return PrimeComponentSeed{p, m, LinearConfig::impulse(n)};
  return PrimeComponentSeed{p, m, with_growing_left(tail_config(periodic_right_tail(m, n), n))};
}

CellRange decode_window(const PrimeComponentSeed& seed, std::size_t depth) {
  const std::uint64_t order = seed.order(depth);
  const LinearConfig& cfg = seed.config;
  ColumnBlock column = right_edge_column(cfg);
  if (order % column.period() != 0) fail_internal("seed right edge period does not divide the order");
  CellIndex lo = cfg.core_lo();
  std::size_t period = column.period();
  for (std::size_t d = 1; d <= kMaxLeftCells; ++d) {
    const CellIndex index = cfg.core_lo() - static_cast<CellIndex>(d);
    column = column_period_propagate(column.block, cfg.at(index), cfg.modulus());
    if (order % column.period() != 0) break;
    lo = index;
    period = column.period();
  }
  if (period != order) {
    fail_internal("no column of the seed has least period " + std::to_string(order));
  }
  const CellIndex tail_end = cfg.tail_start() + static_cast<CellIndex>(cfg.period().size()) - 1;
  const CellIndex hi = std::max(cfg.core_lo() + static_cast<CellIndex>(seed.m) + 1, tail_end);
  return CellRange{lo, hi};
}

LinearWindow encode_prime(const PrimeComponentSeed& seed, const OdometerPoint& z,
                          CellRange window) {
  return evolve_window(seed.config, window.lo, window.hi, seed.steps_of(z));
}

OdometerPoint decode_prime(const PrimeComponentSeed& seed, const LinearWindow& snapshot,
                           std::size_t depth) {
  if (snapshot.modulus != seed.p) fail_invalid("decode_prime: snapshot modulus does not match p");
  const CellRange range = decode_window(seed, depth);
  const LinearWindow target = snapshot.sub(range.lo, range.hi);
  const std::uint64_t order = seed.order(depth);
  const Modulus n = seed.config.modulus();

  std::vector<Digit> cur =
      seed.config.cells(range.lo, range.hi + static_cast<CellIndex>(order) - 1);
  const std::size_t width = target.cells.size();
  std::vector<std::uint64_t> matches;
  for (std::uint64_t t = 0; t < order; ++t) {
    if (std::equal(target.cells.begin(), target.cells.end(), cur.begin())) matches.push_back(t);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) cur[i] = n.add(cur[i], cur[i + 1]);
    if (cur.size() > width) cur.pop_back();
  }
  if (matches.empty()) {
    throw Error(ErrorKind::PropertyViolation, "off-orbit snapshot: no T^N(seed) matches on [" +
                                                  std::to_string(range.lo) + ", " +
                                                  std::to_string(range.hi) + "]");
  }
  if (matches.size() > 1) {
    fail_internal("decode window too small: " + std::to_string(matches.size()) +
                  " orbit points match");
  }
  return seed.point_at(matches.front(), depth);
}

// ---- cellwise Chinese remainder ---------------------------------------------------

namespace {

void require_coprime_moduli(std::uint32_t m, std::uint32_t n) {
  if (m < 2 || n < 2) fail_invalid("CRT moduli must be at least 2");
  if (std::gcd(m, n) != 1) {
    fail_invalid("CRT moduli " + std::to_string(m) + " and " + std::to_string(n) +
                 " are not coprime");
  }
}

std::vector<Digit> reduce(const std::vector<Digit>& digits, std::uint32_t m) {
  std::vector<Digit> out(digits.size());
  std::transform(digits.begin(), digits.end(), out.begin(), [m](Digit d) { return d % m; });
  return out;
}

Digit combine(Digit a, std::uint32_t m, Digit b, std::uint32_t n) {
  return static_cast<Digit>(crt_combine(a, m, b, n));
}

class ResidueLeft final : public LeftGenerator {
 public:
  ResidueLeft(std::shared_ptr<const LeftGenerator> base, std::uint32_t m)
      : base_(std::move(base)), m_(m) {}
  CellIndex boundary() const override { return base_->boundary(); }
  Digit at(CellIndex i) const override { return base_->at(i) % m_; }

 private:
  std::shared_ptr<const LeftGenerator> base_;
  std::uint32_t m_;
};

class JoinedLeft final : public LeftGenerator {
 public:
  JoinedLeft(LinearConfig a, LinearConfig b, CellIndex boundary)
      : a_(std::move(a)), b_(std::move(b)), boundary_(boundary) {}
  CellIndex boundary() const override { return boundary_; }
  Digit at(CellIndex i) const override {
    return combine(a_.at(i), a_.modulus().value(), b_.at(i), b_.modulus().value());
  }

 private:
  LinearConfig a_;
  LinearConfig b_;
  CellIndex boundary_;
};

}  // namespace

WindowPair crt_window_split(const LinearWindow& w, std::uint32_t m, std::uint32_t n) {
  require_coprime_moduli(m, n);
  if (w.modulus != m * n) fail_invalid("crt_window_split: window modulus is not m*n");
  return {LinearWindow{m, w.lo, reduce(w.cells, m)}, LinearWindow{n, w.lo, reduce(w.cells, n)}};
}

LinearWindow crt_window_join(const LinearWindow& a, const LinearWindow& b) {
  require_coprime_moduli(a.modulus, b.modulus);
  if (a.lo != b.lo || a.cells.size() != b.cells.size()) {
    fail_invalid("crt_window_join: windows cover different cells");
  }
  LinearWindow out{a.modulus * b.modulus, a.lo, std::vector<Digit>(a.cells.size())};
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    out.cells[i] = combine(a.cells[i], a.modulus, b.cells[i], b.modulus);
  }
  return out;
}

ConfigPair crt_config_split(const LinearConfig& cfg, std::uint32_t m, std::uint32_t n) {
  require_coprime_moduli(m, n);
  if (cfg.modulus().value() != m * n) fail_invalid("crt_config_split: modulus is not m*n");
  auto part = [&](std::uint32_t q) {
    LeftSide left = ConstantFill{};
    if (const auto* fill = std::get_if<ConstantFill>(&cfg.left())) {
      left = ConstantFill{fill->digit % q};
    } else {
      left = LazyLeft{std::make_shared<const ResidueLeft>(std::get<LazyLeft>(cfg.left()).generator, q)};
    }
    return LinearConfig(Modulus(q), std::move(left), cfg.core_lo(), reduce(cfg.core(), q),
                        reduce(cfg.transient(), q), reduce(cfg.period(), q));
  };
  return {part(m), part(n)};
}

LinearConfig crt_config_join(const LinearConfig& a, const LinearConfig& b) {
  const std::uint32_t m = a.modulus().value();
  const std::uint32_t n = b.modulus().value();
  require_coprime_moduli(m, n);
  const CellIndex core_lo = std::min(a.core_lo(), b.core_lo());
  const CellIndex tail_start = std::max(a.tail_start(), b.tail_start());
  const std::size_t period = std::lcm(a.period().size(), b.period().size());

  std::vector<Digit> core;
  for (CellIndex i = core_lo; i < tail_start; ++i) core.push_back(combine(a.at(i), m, b.at(i), n));
  std::vector<Digit> cycle;
  for (std::size_t j = 0; j < period; ++j) {
    const CellIndex i = tail_start + static_cast<CellIndex>(j);
    cycle.push_back(combine(a.at(i), m, b.at(i), n));
  }
  LeftSide left = ConstantFill{};
  const auto* fa = std::get_if<ConstantFill>(&a.left());
  const auto* fb = std::get_if<ConstantFill>(&b.left());
  if (fa && fb) {
    left = ConstantFill{combine(fa->digit, m, fb->digit, n)};
  } else {
    left = LazyLeft{std::make_shared<const JoinedLeft>(a, b, core_lo)};
  }
  return LinearConfig(Modulus(m * n), std::move(left), core_lo, std::move(core), {},
                      std::move(cycle));
}

// ---- assembled embedding ----------------------------------------------------------

EmbeddingHandle::EmbeddingHandle(Profile source, CanonicalForm form, std::size_t depth)
    : source_(std::move(source)), form_(form), depth_(depth) {}

std::uint64_t EmbeddingHandle::order() const {
  std::uint64_t out = 1;
  for (const auto s : moduli()) out = checked_mul(out, s);
  return out;
}

EmbeddingHandle embed_odometer(const Profile& profile, std::size_t depth) {
  if (depth == 0) fail_invalid("embed_odometer: depth must be >= 1");
  if (!profile.finitary()) {
    fail_invalid("profile '" + profile.to_string() +
                 "' is not finitary and embeds in no T_n: the primes dividing column "
                 "periods of a T_n space-time diagram form a finite set, while the "
                 "column periods s_1...s_k of this odometer involve infinitely many primes");
  }
  const CanonicalForm form = canonical_form(profile);
  EmbeddingHandle handle(profile, form, depth);
  const auto primes = distinct_primes(form.n);
  for (std::size_t j = 0; j < primes.size(); ++j) {
    const std::uint64_t m = j == 0 ? form.m : 1;
    const std::size_t component_depth = (j == 0 || form.m == 1) ? depth : depth - 1;
    PrimeComponentSeed seed = build_prime_seed(primes[j], m);
    const CellRange window = decode_window(seed, component_depth);
    handle.components_.push_back({std::move(seed), component_depth, window});
  }
  CellRange window = handle.components_.front().window;
  for (const auto& c : handle.components_) {
    window.lo = std::min(window.lo, c.window.lo);
    window.hi = std::max(window.hi, c.window.hi);
  }
  window.hi += 1;
  handle.window_ = window;
  return handle;
}

std::vector<OdometerPoint> EmbeddingHandle::split(const OdometerPoint& z) const {
  if (z.moduli() != moduli()) fail_invalid("point is not in the canonical odometer at this depth");
  const std::size_t r = components_.size();
  std::vector<OdometerPoint> parts;
  if (r == 1) return {z};
  std::uint64_t rest = form_.n;
  OdometerPoint remainder = z;
  std::size_t j = 0;
  if (form_.m > 1) {
    const std::uint64_t q = components_[0].seed.p;
    rest /= q;
    auto pair = seeded_split_point(z, form_.m, q, rest);
    parts.push_back(std::move(pair.first));
    remainder = std::move(pair.second);
    j = 1;
  }
  for (; j + 1 < r; ++j) {
    const std::uint64_t q = components_[j].seed.p;
    rest /= q;
    auto pair = crt_split_point(remainder, q, rest);
    parts.push_back(std::move(pair.first));
    remainder = std::move(pair.second);
  }
  parts.push_back(std::move(remainder));
  return parts;
}

OdometerPoint EmbeddingHandle::join(const std::vector<OdometerPoint>& parts) const {
  const std::size_t r = components_.size();
  if (parts.size() != r) fail_invalid("join: wrong number of component points");
  if (r == 1) return parts.front();
  OdometerPoint acc = parts.back();
  const std::size_t first_crt = form_.m > 1 ? 1 : 0;
  for (std::size_t j = r - 1; j-- > first_crt;) acc = crt_join_point(parts[j], acc);
  if (form_.m > 1) acc = seeded_join_point(parts.front(), acc);
  return acc;
}

LinearWindow EmbeddingHandle::encode(const OdometerPoint& z) const {
  const auto parts = split(z);
  LinearWindow acc = encode_prime(components_.front().seed, parts.front(), window_);
  for (std::size_t j = 1; j < components_.size(); ++j) {
    acc = crt_window_join(acc, encode_prime(components_[j].seed, parts[j], window_));
  }
  return acc;
}

OdometerPoint EmbeddingHandle::decode(const LinearWindow& snapshot) const {
  if (snapshot.modulus != form_.n) fail_invalid("snapshot modulus does not match n");
  std::vector<OdometerPoint> parts;
  for (const auto& c : components_) {
    const auto q = static_cast<std::uint32_t>(c.seed.p);
    const LinearWindow residue{q, snapshot.lo, reduce(snapshot.cells, q)};
    parts.push_back(decode_prime(c.seed, residue, c.depth));
  }
  return join(parts);
}

std::string EmbeddingHandle::describe() const {
  std::ostringstream out;
  out << "CANONICAL m=" << form_.m << " n=" << form_.n << '\n';
  for (const auto& c : components_) {
    out << "COMPONENT p=" << c.seed.p << " m=" << c.seed.m << " depth=" << c.depth
        << " order=" << c.seed.order(c.depth) << " window=" << c.window.lo << ".." << c.window.hi
        << '\n';
  }
  out << "WINDOW " << window_.lo << ".." << window_.hi << '\n';
  return out.str();
}

// ---- verification ------------------------------------------------------------------

std::string RoundtripReport::to_string() const {
  return "ROUNDTRIP ok=" + std::to_string(ok) + " fail=" + std::to_string(fail);
}

namespace {

void check_point(const EmbeddingHandle& handle, const OdometerPoint& z, RoundtripReport& report) {
  constexpr std::size_t kMaxDiagnostics = 16;
  std::string problem;
  try {
    const LinearWindow encoded = handle.encode(z);
    if (handle.decode(encoded) != z) {
      problem = "decode(encode(z)) != z";
    } else if (handle.decode(step_window(encoded)) != plus(z, 1)) {
      problem = "decode(T(encode(z))) != z + 1";
    }
  } catch (const Error& e) {
    problem = e.what();
  }
  if (problem.empty()) {
    ++report.ok;
    return;
  }
  ++report.fail;
  if (report.failures.size() < kMaxDiagnostics) {
    report.failures.push_back("z=" + z.to_string() + ": " + problem);
  }
}

}  // namespace

RoundtripReport verify_roundtrip(const EmbeddingHandle& handle, std::uint64_t bound) {
  RoundtripReport report;
  const std::uint64_t count = std::min(bound, handle.order());
  const auto moduli = handle.moduli();
  for (std::uint64_t v = 0; v < count; ++v) {
    check_point(handle, OdometerPoint::from_value(moduli, v), report);
  }
  return report;
}

RoundtripReport verify_random(const EmbeddingHandle& handle, std::size_t count,
                              std::uint64_t seed) {
  RoundtripReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, handle.order() - 1);
  const auto moduli = handle.moduli();
  for (std::size_t i = 0; i < count; ++i) {
    check_point(handle, OdometerPoint::from_value(moduli, pick(rng)), report);
  }
  return report;
}

// ---- non-embeddability ----------------------------------------------------------

PrimeSupport column_prime_support(const SpaceTimeDiagram& diagram) {
  PrimeSupport out;
  for (CellIndex i = diagram.lo(); i <= diagram.hi(); ++i) {
    const auto detected =
        diagram.annotated() ? diagram.column_period(i) : least_period(diagram.column(i));
    if (!detected) {
      out.undetected.push_back(i);
      continue;
    }
    for (const auto p : distinct_primes(detected->period)) out.primes.insert(p);
  }
  return out;
}

bool within_column_period_bound(const SpaceTimeDiagram& diagram, std::uint32_t n) {
  std::optional<std::size_t> smallest;
  for (CellIndex i = diagram.lo(); i <= diagram.hi(); ++i) {
    const auto detected =
        diagram.annotated() ? diagram.column_period(i) : least_period(diagram.column(i));
    if (detected && (!smallest || detected->period < *smallest)) smallest = detected->period;
  }
  if (!smallest) return true;
  const std::uint64_t bound = checked_mul(n, *smallest);
  const PrimeSupport support = column_prime_support(diagram);
  return std::all_of(support.primes.begin(), support.primes.end(),
                     [bound](std::uint64_t p) { return bound % p == 0; });
}

std::string Witness::to_string() const {
  return "WITNESS p=" + std::to_string(prime) + " k=" + std::to_string(k);
}

std::optional<Witness> nonfinitary_witness(const Profile& profile, std::uint32_t n,
                                           std::size_t depth,
                                           const std::set<std::uint64_t>& allowed) {
  if (n < 2) fail_invalid("nonfinitary_witness: modulus must be at least 2");
  for (std::size_t k = 1; k <= depth; ++k) {
    for (const auto p : distinct_primes(profile.term(k))) {
      if (n % p != 0 && !allowed.contains(p)) return Witness{p, k};
    }
  }
  return std::nullopt;
}

std::string no_witness_message(std::size_t depth) {
  return "NO WITNESS depth=" + std::to_string(depth);
}

}  // namespace odembed
