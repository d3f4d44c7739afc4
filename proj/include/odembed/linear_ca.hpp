#pragma once

// The additive cellular automaton T_n: x_i -> x_i + x_{i+1} (mod n).
//
// Configurations are described finitely: a left side (constant fill or a
// lazily extended block), a core word starting at core_lo, and an eventually
// periodic right tail (transient word, then a periodic word repeated). The
// rule has no memory to the left, so cell i at time t depends only on initial
// cells i..i+t and everything here is exact.

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "odembed/diagram.hpp"

namespace odembed {

class Modulus {
 public:
  explicit Modulus(std::uint32_t n);

  std::uint32_t value() const { return n_; }
  Digit add(Digit a, Digit b) const { return (a + b) % n_; }
  Digit sub(Digit a, Digit b) const { return (a + n_ - b) % n_; }
  Digit mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<Digit>((a % n_) * (b % n_) % n_);
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint32_t n_;
};

/// Source of cells strictly left of boundary(). Implementations may
/// materialize lazily; repeated queries must return the same digit.
class LeftGenerator {
 public:
  virtual ~LeftGenerator() = default;
  virtual CellIndex boundary() const = 0;
  /// Throws Error(Infeasible) when the cell cannot be produced.
  virtual Digit at(CellIndex i) const = 0;
  /// The block materialized so far, left to right, ending at boundary()-1.
  virtual std::vector<Digit> materialized() const { return {}; }
};

struct ConstantFill {
  Digit digit = 0;
};

struct LazyLeft {
  std::shared_ptr<const LeftGenerator> generator;
};

using LeftSide = std::variant<ConstantFill, LazyLeft>;

class LinearConfig {
 public:
  LinearConfig(Modulus n, LeftSide left, CellIndex core_lo, std::vector<Digit> core,
               std::vector<Digit> transient, std::vector<Digit> period);

  /// ...000.1000..., a single 1 at cell 0.
  static LinearConfig impulse(Modulus n);
  static LinearConfig zero(Modulus n);

  Modulus modulus() const { return n_; }
  const LeftSide& left() const { return left_; }
  bool constant_left() const { return std::holds_alternative<ConstantFill>(left_); }
  CellIndex core_lo() const { return core_lo_; }
  /// First cell of the periodic word.
  CellIndex tail_start() const;
  const std::vector<Digit>& core() const { return core_; }
  const std::vector<Digit>& transient() const { return transient_; }
  const std::vector<Digit>& period() const { return period_; }

  Digit at(CellIndex i) const;
  /// Cells lo..hi inclusive.
  std::vector<Digit> cells(CellIndex lo, CellIndex hi) const;

 private:
  Modulus n_;
  LeftSide left_;
  CellIndex core_lo_;
  std::vector<Digit> core_;
  std::vector<Digit> transient_;
  std::vector<Digit> period_;
};

/// Exact image under T_n. The right tail keeps its period length and its
/// transient never grows; a constant fill c becomes 2c.
LinearConfig step(const LinearConfig& cfg);

/// Finite run of cells lo..lo+size-1.
struct LinearWindow {
  std::uint32_t modulus = 2;
  CellIndex lo = 0;
  std::vector<Digit> cells;

  CellIndex hi() const { return lo + static_cast<CellIndex>(cells.size()) - 1; }
  Digit at(CellIndex i) const;
  LinearWindow sub(CellIndex from, CellIndex to) const;
  std::string to_string() const;

  friend bool operator==(const LinearWindow&, const LinearWindow&) = default;
};

LinearWindow window_of(const LinearConfig& cfg, CellIndex lo, CellIndex hi);
/// One T_n step on a finite window; the rightmost cell is lost.
LinearWindow step_window(const LinearWindow& w);
/// Cells lo..hi of T^steps(cfg).
LinearWindow evolve_window(const LinearConfig& cfg, CellIndex lo, CellIndex hi,
                           std::uint64_t steps);

/// Columns lo..hi, times 0..steps-1, with per-column least periods annotated.
SpaceTimeDiagram spacetime(const LinearConfig& cfg, CellIndex lo, CellIndex hi,
                           std::size_t steps);

/// [T^j(impulse)]_{-i} = C(j, i) mod n, from the prime-exponent formula.
Digit binomial_column_oracle(std::uint32_t n, std::uint64_t i, std::uint64_t j);

/// One least period of a purely periodic column.
struct ColumnBlock {
  std::vector<Digit> block;
  std::size_t period() const { return block.size(); }
};

/// Given one period of column i and the initial digit of column i-1, returns
/// one least period of column i-1. With sigma the block sum, the period grows
/// by the additive order n / gcd(n, sigma).
ColumnBlock column_period_propagate(std::span<const Digit> block, Digit left_digit, Modulus n);

/// Column core_lo of cfg, found by iterating the one-sided map on
/// cells [core_lo, inf). Throws if that column is not purely periodic.
ColumnBlock right_edge_column(const LinearConfig& cfg);

struct ColumnEntry {
  CellIndex column = 0;
  std::size_t period = 0;
  std::vector<Digit> block;
};

struct ColumnPeriodProfile {
  std::vector<ColumnEntry> columns;  // right edge first, then leftward
};

/// Exact least periods of columns core_lo, core_lo-1, ..., core_lo-depth.
ColumnPeriodProfile period_ladder(const LinearConfig& cfg, std::size_t depth);

/// y_j = [T_R^j(x)]_0 = sum_k C(j,k) x_k. Conjugates T_R to the left shift.
std::vector<Digit> trace_forward(std::span<const Digit> x, Modulus n);
/// x_i = sum_k (-1)^(i-k) C(i,k) y_k.
std::vector<Digit> trace_inverse(std::span<const Digit> y, Modulus n);

/// Spatially eventually periodic one-sided word starting at cell 0.
struct RightTail {
  std::vector<Digit> transient;
  std::vector<Digit> period;

  std::vector<Digit> stream(std::size_t length) const;
};

/// The one-sided point whose column 0 repeats `temporal_block` forever. Its
/// least T_R-period is the least cyclic period of the block.
RightTail right_tail_from_column(std::span<const Digit> temporal_block, Modulus n);
/// right_tail_from_column of the word 0^(m-1) 1.
RightTail periodic_right_tail(std::size_t m, Modulus n);
/// Tail placed at cells [0, inf) with zero fill on the left.
LinearConfig tail_config(const RightTail& tail, Modulus n);

/// Least T_R-period of cells [core_lo, inf).
std::size_t right_period(const LinearConfig& cfg);

/// Prepends digits left of core_lo until the leftmost column has least period
/// >= target. Each round first tries every word of length <= 3, then words
/// with a single nonzero digit followed by zeros; the shortest word that
/// strictly increases the period wins. Cells beyond the extension are 0.
LinearConfig extend_left_until_period(const LinearConfig& cfg, std::size_t target);

/// Same rounds as extend_left_until_period, run on demand: the left side of
/// the result is lazily materialized and its column periods are unbounded.
LinearConfig with_growing_left(const LinearConfig& right_part);

/// `x-bar` (the impulse), `periodic:<m>` (a tail of least T_R-period m with a
/// growing left side), or `left|core|transient|period` with one base-36
/// character per digit; the core starts at cell 0.
LinearConfig parse_seed_spec(std::string_view spec, Modulus n);

/// Largest left extension a lazy generator will materialize.
inline constexpr std::size_t kMaxLeftCells = 4096;

}  // namespace odembed
