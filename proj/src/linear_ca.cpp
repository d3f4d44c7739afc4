#include "odembed/linear_ca.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>

#include "odembed/errors.hpp"
#include "odembed/number_theory.hpp"

namespace odembed {

Modulus::Modulus(std::uint32_t n) : n_(n) {
  if (n < 2) fail_invalid("modulus must be at least 2, got " + std::to_string(n));
}

// ---- LinearConfig ------------------------------------------------------------

namespace {

void require_digits(const std::vector<Digit>& digits, Modulus n, const char* what) {
  for (const Digit d : digits) {
    if (d >= n.value()) {
      fail_invalid(std::string(what) + " digit " + std::to_string(d) + " is not below modulus " +
                   std::to_string(n.value()));
    }
  }
}

}  // namespace

LinearConfig::LinearConfig(Modulus n, LeftSide left, CellIndex core_lo, std::vector<Digit> core,
                           std::vector<Digit> transient, std::vector<Digit> period)
    : n_(n),
      left_(std::move(left)),
      core_lo_(core_lo),
      core_(std::move(core)),
      transient_(std::move(transient)),
      period_(std::move(period)) {
  if (period_.empty()) fail_invalid("right tail needs a nonempty periodic word");
  require_digits(core_, n_, "core");
  require_digits(transient_, n_, "transient");
  require_digits(period_, n_, "periodic");
  if (const auto* fill = std::get_if<ConstantFill>(&left_)) {
    if (fill->digit >= n_.value()) fail_invalid("left fill digit is not below the modulus");
  } else {
    const auto& lazy = std::get<LazyLeft>(left_);
    if (!lazy.generator) fail_invalid("lazy left side needs a generator");
    if (lazy.generator->boundary() != core_lo_) {
      fail_invalid("lazy left generator boundary does not match core_lo");
    }
  }
}

LinearConfig LinearConfig::impulse(Modulus n) {
  return LinearConfig(n, ConstantFill{0}, 0, {1}, {}, {0});
}

LinearConfig LinearConfig::zero(Modulus n) { return LinearConfig(n, ConstantFill{0}, 0, {}, {}, {0}); }

CellIndex LinearConfig::tail_start() const {
  return core_lo_ + static_cast<CellIndex>(core_.size() + transient_.size());
}

Digit LinearConfig::at(CellIndex i) const {
  if (i < core_lo_) {
    if (const auto* fill = std::get_if<ConstantFill>(&left_)) return fill->digit;
    const Digit d = std::get<LazyLeft>(left_).generator->at(i);
    if (d >= n_.value()) fail_internal("left generator produced an out-of-range digit");
    return d;
  }
  auto offset = static_cast<std::size_t>(i - core_lo_);
  if (offset < core_.size()) return core_[offset];
  offset -= core_.size();
  if (offset < transient_.size()) return transient_[offset];
  offset -= transient_.size();
  return period_[offset % period_.size()];
}

std::vector<Digit> LinearConfig::cells(CellIndex lo, CellIndex hi) const {
  if (lo > hi) fail_invalid("empty cell range");
  std::vector<Digit> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (CellIndex i = lo; i <= hi; ++i) out.push_back(at(i));
  return out;
}

// ---- step ----------------------------------------------------------------------

namespace {

// Left side of T^t(origin) for a lazily extended origin:
// cell i = sum_k C(t, k) origin_{i+k}.
class SteppedLeft final : public LeftGenerator {
 public:
  SteppedLeft(std::shared_ptr<const LinearConfig> origin, std::vector<Digit> pascal_row)
      : origin_(std::move(origin)), row_(std::move(pascal_row)) {}

  static std::shared_ptr<const SteppedLeft> first(const LinearConfig& origin) {
    const Modulus n = origin.modulus();
    return std::make_shared<const SteppedLeft>(std::make_shared<const LinearConfig>(origin),
                                               std::vector<Digit>{1u % n.value(), 1u % n.value()});
  }

  std::shared_ptr<const SteppedLeft> next() const {
    const Modulus n = origin_->modulus();
    std::vector<Digit> row(row_.size() + 1);
    row.front() = row_.front();
    row.back() = row_.back();
    for (std::size_t k = 1; k < row_.size(); ++k) row[k] = n.add(row_[k - 1], row_[k]);
    return std::make_shared<const SteppedLeft>(origin_, std::move(row));
  }

  CellIndex boundary() const override { return origin_->core_lo(); }

  Digit at(CellIndex i) const override {
    const Modulus n = origin_->modulus();
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < row_.size(); ++k) {
      if (row_[k] == 0) continue;
      acc += n.mul(row_[k], origin_->at(i + static_cast<CellIndex>(k)));
    }
    return static_cast<Digit>(acc % n.value());
  }

 private:
  std::shared_ptr<const LinearConfig> origin_;
  std::vector<Digit> row_;
};

struct RightPart {
  std::vector<Digit> word;  // core followed by transient
  std::vector<Digit> period;
};

// One application of the one-sided map to word + period^inf.
RightPart step_right(const RightPart& part, Modulus n) {
  RightPart out{part.word, part.period};
  const std::size_t len = part.word.size();
  const std::size_t l = part.period.size();
  for (std::size_t i = 0; i < len; ++i) {
    out.word[i] = n.add(part.word[i], i + 1 < len ? part.word[i + 1] : part.period[0]);
  }
  for (std::size_t j = 0; j < l; ++j) out.period[j] = n.add(part.period[j], part.period[(j + 1) % l]);
  return out;
}

}  // namespace

LinearConfig step(const LinearConfig& cfg) {
  const Modulus n = cfg.modulus();
  RightPart part;
  part.word = cfg.core();
  part.word.insert(part.word.end(), cfg.transient().begin(), cfg.transient().end());
  part.period = cfg.period();
  const Digit first_right = part.word.empty() ? part.period.front() : part.word.front();
  RightPart next = step_right(part, n);

  const auto core_len = static_cast<std::ptrdiff_t>(cfg.core().size());
  std::vector<Digit> core(next.word.begin(), next.word.begin() + core_len);
  std::vector<Digit> transient(next.word.begin() + core_len, next.word.end());
  std::vector<Digit> period = std::move(next.period);

  // A transient digit that matches the periodic word's last digit is really
  // the start of the periodic part.
  while (!transient.empty() && transient.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    transient.pop_back();
  }

  if (const auto* fill = std::get_if<ConstantFill>(&cfg.left())) {
    const Digit new_fill = n.add(fill->digit, fill->digit);
    CellIndex core_lo = cfg.core_lo() - 1;
    core.insert(core.begin(), n.add(fill->digit, first_right));
    std::size_t drop = 0;
    while (drop < core.size() && core[drop] == new_fill) ++drop;
    core.erase(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(drop));
    core_lo += static_cast<CellIndex>(drop);
    return LinearConfig(n, ConstantFill{new_fill}, core_lo, std::move(core), std::move(transient),
                        std::move(period));
  }

  const auto& generator = std::get<LazyLeft>(cfg.left()).generator;
  std::shared_ptr<const LeftGenerator> left;
  if (const auto* stepped = dynamic_cast<const SteppedLeft*>(generator.get())) {
    left = stepped->next();
  } else {
    left = SteppedLeft::first(cfg);
  }
  return LinearConfig(n, LazyLeft{std::move(left)}, cfg.core_lo(), std::move(core),
                      std::move(transient), std::move(period));
}

// ---- windows and diagrams -------------------------------------------------------

Digit LinearWindow::at(CellIndex i) const {
  if (i < lo || i > hi()) fail_invalid("cell " + std::to_string(i) + " outside window");
  return cells[static_cast<std::size_t>(i - lo)];
}

LinearWindow LinearWindow::sub(CellIndex from, CellIndex to) const {
  if (from < lo || to > hi() || from > to) {
    fail_invalid("window [" + std::to_string(lo) + ", " + std::to_string(hi()) +
                 "] does not cover [" + std::to_string(from) + ", " + std::to_string(to) + "]");
  }
  const auto begin = cells.begin() + (from - lo);
  return LinearWindow{modulus, from, std::vector<Digit>(begin, begin + (to - from + 1))};
}

std::string LinearWindow::to_string() const {
  std::string out;
  out.reserve(cells.size());
  for (const Digit d : cells) out.push_back(digit_glyph(d));
  return out;
}

LinearWindow window_of(const LinearConfig& cfg, CellIndex lo, CellIndex hi) {
  return LinearWindow{cfg.modulus().value(), lo, cfg.cells(lo, hi)};
}

LinearWindow step_window(const LinearWindow& w) {
  if (w.cells.size() < 2) fail_invalid("step_window: window needs at least two cells");
  const Modulus n(w.modulus);
  LinearWindow out{w.modulus, w.lo, std::vector<Digit>(w.cells.size() - 1)};
  for (std::size_t i = 0; i + 1 < w.cells.size(); ++i) out.cells[i] = n.add(w.cells[i], w.cells[i + 1]);
  return out;
}

LinearWindow evolve_window(const LinearConfig& cfg, CellIndex lo, CellIndex hi,
                           std::uint64_t steps) {
  const Modulus n = cfg.modulus();
  std::vector<Digit> cur = cfg.cells(lo, hi + static_cast<CellIndex>(steps));
  for (std::uint64_t t = 0; t < steps; ++t) {
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) cur[i] = n.add(cur[i], cur[i + 1]);
    cur.pop_back();
  }
  return LinearWindow{n.value(), lo, std::move(cur)};
}

SpaceTimeDiagram spacetime(const LinearConfig& cfg, CellIndex lo, CellIndex hi,
                           std::size_t steps) {
  if (steps == 0) fail_invalid("spacetime: steps must be >= 1");
  if (lo > hi) fail_invalid("spacetime: empty column range");
  const Modulus n = cfg.modulus();
  SpaceTimeDiagram diagram(n.value(), lo, hi, steps);
  std::vector<Digit> cur = cfg.cells(lo, hi + static_cast<CellIndex>(steps) - 1);
  const std::size_t width = diagram.width();
  for (std::size_t j = 0; j < steps; ++j) {
    for (std::size_t i = 0; i < width; ++i) diagram.set(lo + static_cast<CellIndex>(i), j, cur[i]);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) cur[i] = n.add(cur[i], cur[i + 1]);
    if (cur.size() > width) cur.pop_back();
  }
  diagram.annotate_periods();
  return diagram;
}

Digit binomial_column_oracle(std::uint32_t n, std::uint64_t i, std::uint64_t j) {
  return static_cast<Digit>(binomial_mod(j, i, n));
}

// ---- column periods -------------------------------------------------------------

ColumnBlock column_period_propagate(std::span<const Digit> block, Digit left_digit, Modulus n) {
  if (block.empty()) fail_invalid("column_period_propagate: empty block");
  if (left_digit >= n.value()) fail_invalid("column_period_propagate: digit out of range");
  const std::size_t m = cyclic_period(block);
  std::uint64_t sigma = 0;
  for (std::size_t j = 0; j < m; ++j) sigma += block[j];
  sigma %= n.value();
  const std::uint64_t order = n.value() / std::gcd<std::uint64_t>(n.value(), sigma);
  ColumnBlock out;
  out.block.resize(m * order);
  Digit acc = left_digit;
  for (std::size_t j = 0; j < out.block.size(); ++j) {
    out.block[j] = acc;
    acc = n.add(acc, block[j % m]);
  }
  return out;
}

ColumnBlock right_edge_column(const LinearConfig& cfg) {
  constexpr std::size_t kMaxOrbit = std::size_t{1} << 20;
  const Modulus n = cfg.modulus();
  RightPart state;
  state.word = cfg.core();
  state.word.insert(state.word.end(), cfg.transient().begin(), cfg.transient().end());
  state.period = cfg.period();

  auto key = [](const RightPart& s) {
    std::vector<Digit> k = s.word;
    k.insert(k.end(), s.period.begin(), s.period.end());
    return k;
  };
  std::map<std::vector<Digit>, std::size_t> seen;
  ColumnBlock out;
  for (std::size_t t = 0;; ++t) {
    auto [it, inserted] = seen.emplace(key(state), t);
    if (!inserted) {
      const std::size_t tau = it->second;
      const std::size_t period = t - tau;
      for (std::size_t j = 0; j < tau; ++j) {
        if (out.block[j] != out.block[j + period]) {
          fail_invalid("column " + std::to_string(cfg.core_lo()) +
                       " is eventually but not purely periodic (transient " +
                       std::to_string(tau) + ")");
        }
      }
      out.block.resize(period);
      out.block.resize(cyclic_period(std::span<const Digit>(out.block)));
      return out;
    }
    if (t >= kMaxOrbit) throw Error(ErrorKind::Infeasible, "right tail orbit too long to analyze");
    out.block.push_back(state.word.empty() ? state.period.front() : state.word.front());
    state = step_right(state, n);
  }
}

ColumnPeriodProfile period_ladder(const LinearConfig& cfg, std::size_t depth) {
  ColumnPeriodProfile out;
  ColumnBlock column = right_edge_column(cfg);
  out.columns.push_back({cfg.core_lo(), column.period(), column.block});
  for (std::size_t d = 1; d <= depth; ++d) {
    const CellIndex index = cfg.core_lo() - static_cast<CellIndex>(d);
    column = column_period_propagate(column.block, cfg.at(index), cfg.modulus());
    out.columns.push_back({index, column.period(), column.block});
  }
  return out;
}

// ---- one-sided conjugacy --------------------------------------------------------

std::vector<Digit> trace_forward(std::span<const Digit> x, Modulus n) {
  std::vector<Digit> work(x.begin(), x.end());
  std::vector<Digit> y(work.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    y[j] = work[0] % n.value();
    const std::size_t live = work.size() - j;
    for (std::size_t i = 0; i + 1 < live; ++i) work[i] = n.add(work[i] % n.value(), work[i + 1] % n.value());
  }
  return y;
}

std::vector<Digit> trace_inverse(std::span<const Digit> y, Modulus n) {
  std::vector<Digit> work(y.begin(), y.end());
  std::vector<Digit> x(work.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = work[0] % n.value();
    const std::size_t live = work.size() - i;
    for (std::size_t j = 0; j + 1 < live; ++j) work[j] = n.sub(work[j + 1] % n.value(), work[j] % n.value());
  }
  return x;
}

std::vector<Digit> RightTail::stream(std::size_t length) const {
  std::vector<Digit> out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(i < transient.size() ? transient[i]
                                       : period[(i - transient.size()) % period.size()]);
  }
  return out;
}

RightTail right_tail_from_column(std::span<const Digit> temporal_block, Modulus n) {
  if (temporal_block.empty()) fail_invalid("right_tail_from_column: empty block");
  const std::size_t m = cyclic_period(temporal_block);
  const std::vector<Digit> y(temporal_block.begin(), temporal_block.begin() + static_cast<std::ptrdiff_t>(m));
  const std::vector<Digit> head = trace_inverse(y, n);

  RightTail tail;
  if (m == 1) {
    tail.transient = {head[0]};
    tail.period = {0};
  } else {
    // T_R^m x = x means sum_{k=1..m} C(m,k) x_{i+k} = 0, a recurrence of order
    // m-1 on x_1, x_2, ...; its state cycle gives the spatial period.
    std::vector<Digit> coeff(m);
    for (std::size_t k = 1; k < m; ++k) coeff[k] = static_cast<Digit>(binomial_mod(m, k, n.value()));
    std::vector<Digit> x = head;
    std::map<std::vector<Digit>, std::size_t> seen;
    constexpr std::size_t kMaxStates = std::size_t{1} << 22;
    for (std::size_t i = 0;; ++i) {
      std::vector<Digit> state(x.begin() + static_cast<std::ptrdiff_t>(i + 1),
                               x.begin() + static_cast<std::ptrdiff_t>(i + m));
      auto [it, inserted] = seen.emplace(std::move(state), i);
      if (!inserted) {
        const std::size_t r = it->second;
        tail.transient.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(r + 1));
        tail.period.assign(x.begin() + static_cast<std::ptrdiff_t>(r + 1),
                           x.begin() + static_cast<std::ptrdiff_t>(i + 1));
        break;
      }
      if (i >= kMaxStates) throw Error(ErrorKind::Infeasible, "periodic right tail too long");
      std::uint64_t acc = 0;
      for (std::size_t k = 1; k < m; ++k) acc += n.mul(coeff[k], x[i + k]);
      x.push_back(n.sub(0, static_cast<Digit>(acc % n.value())));
    }
  }
  // The spatial description must reproduce the temporal word.
  const auto check = trace_forward(tail.stream(2 * m), n);
  for (std::size_t j = 0; j < check.size(); ++j) {
    if (check[j] != y[j % m]) fail_internal("right_tail_from_column: tail does not reproduce its column");
  }
  return tail;
}

RightTail periodic_right_tail(std::size_t m, Modulus n) {
  if (m == 0) fail_invalid("periodic_right_tail: period must be >= 1");
  std::vector<Digit> word(m, 0);
  word.back() = 1;
  return right_tail_from_column(word, n);
}

LinearConfig tail_config(const RightTail& tail, Modulus n) {
  return LinearConfig(n, ConstantFill{0}, 0, {}, tail.transient, tail.period);
}

std::size_t right_period(const LinearConfig& cfg) { return right_edge_column(cfg).period(); }

// ---- left extensions ------------------------------------------------------------

namespace {

struct Round {
  std::vector<Digit> digits;  // nearest cell first
  std::vector<Digit> block;   // leftmost column after the round
};

std::optional<Round> extension_round(const std::vector<Digit>& block, Modulus n) {
  const std::size_t period = block.size();
  const std::uint32_t q = n.value();

  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<Digit> word(len, 0);
    while (true) {
      std::vector<Digit> b = block;
      for (const Digit d : word) b = column_period_propagate(b, d, n).block;
      if (b.size() > period) return Round{word, std::move(b)};
      std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(len) - 1;
      while (pos >= 0 && ++word[static_cast<std::size_t>(pos)] == q) {
        word[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  // A digit placed here only reaches the block sum of a column far enough to
  // the left, so longer words are searched as one digit followed by zeros.
  const std::size_t cap = 2 * period + 3;
  std::optional<Round> best;
  for (Digit v = 0; v < q; ++v) {
    std::vector<Digit> word{v};
    std::vector<Digit> b = column_period_propagate(block, v, n).block;
    while (b.size() == period && word.size() < cap &&
           (!best || word.size() < best->digits.size())) {
      b = column_period_propagate(b, 0, n).block;
      word.push_back(0);
    }
    if (b.size() > period && (!best || word.size() < best->digits.size())) {
      best = Round{std::move(word), std::move(b)};
    }
  }
  return best;
}

class GrowingLeft final : public LeftGenerator {
 public:
  GrowingLeft(CellIndex boundary, std::vector<Digit> edge_block, Modulus n)
      : boundary_(boundary), n_(n), block_(std::move(edge_block)) {}

  CellIndex boundary() const override { return boundary_; }

  Digit at(CellIndex i) const override {
    if (i >= boundary_) fail_internal("left generator queried at a non-left cell");
    const auto index = static_cast<std::size_t>(boundary_ - 1 - i);
    std::lock_guard lock(mutex_);
    while (digits_.size() <= index) {
      if (digits_.size() >= kMaxLeftCells) {
        throw Error(ErrorKind::Infeasible, "left extension cannot be materialized to cell " +
                                               std::to_string(i) + " (limit " +
                                               std::to_string(kMaxLeftCells) + " cells)");
      }
      auto round = extension_round(block_, n_);
      if (!round) fail_internal("no left extension increases the column period");
      digits_.insert(digits_.end(), round->digits.begin(), round->digits.end());
      block_ = std::move(round->block);
    }
    return digits_[index];
  }

  std::vector<Digit> materialized() const override {
    std::lock_guard lock(mutex_);
    return {digits_.rbegin(), digits_.rend()};
  }

 private:
  CellIndex boundary_;
  Modulus n_;
  mutable std::mutex mutex_;
  mutable std::vector<Digit> block_;
  mutable std::vector<Digit> digits_;
};

}  // namespace

LinearConfig extend_left_until_period(const LinearConfig& cfg, std::size_t target) {
  const Modulus n = cfg.modulus();
  std::vector<Digit> block = right_edge_column(cfg).block;
  std::vector<Digit> digits;
  while (block.size() < target) {
    auto round = extension_round(block, n);
    if (!round) {
      fail_internal("no left extension increases the column period beyond " +
                    std::to_string(block.size()));
    }
    digits.insert(digits.end(), round->digits.begin(), round->digits.end());
    block = std::move(round->block);
    if (digits.size() > kMaxLeftCells) {
      throw Error(ErrorKind::Infeasible, "left extension for period " + std::to_string(target) +
                                             " exceeds " + std::to_string(kMaxLeftCells) +
                                             " cells");
    }
  }
  std::vector<Digit> core(digits.rbegin(), digits.rend());
  core.insert(core.end(), cfg.core().begin(), cfg.core().end());
  return LinearConfig(n, ConstantFill{0}, cfg.core_lo() - static_cast<CellIndex>(digits.size()),
                      std::move(core), cfg.transient(), cfg.period());
}

LinearConfig with_growing_left(const LinearConfig& right_part) {
  const Modulus n = right_part.modulus();
  auto generator = std::make_shared<const GrowingLeft>(right_part.core_lo(),
                                                       right_edge_column(right_part).block, n);
  return LinearConfig(n, LazyLeft{std::move(generator)}, right_part.core_lo(), right_part.core(),
                      right_part.transient(), right_part.period());
}

// ---- seed specs ------------------------------------------------------------------

namespace {

std::vector<Digit> parse_digit_word(std::string_view word, Modulus n, const char* what) {
  std::vector<Digit> out;
  for (const char c : word) {
    Digit d = 0;
    if (c >= '0' && c <= '9') {
      d = static_cast<Digit>(c - '0');
    } else if (c >= 'a' && c <= 'z') {
      d = static_cast<Digit>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'Z') {
      d = static_cast<Digit>(c - 'A' + 10);
    } else {
      fail_invalid(std::string("seed spec ") + what + ": '" + std::string(1, c) +
                   "' is not a base-36 digit");
    }
    if (d >= n.value()) {
      fail_invalid(std::string("seed spec ") + what + ": digit " + std::to_string(d) +
                   " is not below modulus " + std::to_string(n.value()));
    }
    out.push_back(d);
  }
  return out;
}

}  // namespace

LinearConfig parse_seed_spec(std::string_view spec, Modulus n) {
  if (spec == "x-bar") return LinearConfig::impulse(n);
  constexpr std::string_view kPeriodic = "periodic:";
  if (spec.starts_with(kPeriodic)) {
    const std::string_view digits = spec.substr(kPeriodic.size());
    std::size_t m = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || end != digits.data() + digits.size() || m == 0) {
      fail_invalid("seed spec '" + std::string(spec) + "': periodic:<m> needs a positive integer");
    }
    return with_growing_left(tail_config(periodic_right_tail(m, n), n));
  }
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = spec.find('|', start);
    parts.push_back(spec.substr(start, bar == std::string_view::npos ? bar : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (parts.size() != 4) {
    fail_invalid("seed spec '" + std::string(spec) +
                 "': expected x-bar, periodic:<m> or left|core|transient|period");
  }
  const auto left = parse_digit_word(parts[0], n, "left");
  if (left.size() != 1) fail_invalid("seed spec left fill must be exactly one digit");
  auto period = parse_digit_word(parts[3], n, "period");
  if (period.empty()) fail_invalid("seed spec period word must be nonempty");
  return LinearConfig(n, ConstantFill{left.front()}, 0, parse_digit_word(parts[1], n, "core"),
                      parse_digit_word(parts[2], n, "transient"), std::move(period));
}

}  // namespace odembed
