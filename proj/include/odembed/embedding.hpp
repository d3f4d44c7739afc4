#pragma once

// Embedding finitary odometers into T_n.
//
// A canonical form (Z(m, n, n, ...), +1) with n = q_1 ... q_r splits into
// Z(m, q_1, q_1, ...) x Z(q_2) x ... x Z(q_r). Each factor lives on the
// forward orbit of a seed in T_{q_j}, and the cellwise Chinese remainder map
// glues the factor configurations into one configuration over Z_n.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "odembed/linear_ca.hpp"
#include "odembed/odometer.hpp"

namespace odembed {

struct CellRange {
  CellIndex lo = 0;
  CellIndex hi = 0;

  friend bool operator==(const CellRange&, const CellRange&) = default;
};

/// Seed for Z(m, p, p, ...) in T_p: the impulse when m = 1, otherwise a right
/// tail of least T_R-period m with a lazily grown left side whose column
/// periods are unbounded.
struct PrimeComponentSeed {
  std::uint64_t p = 2;
  std::uint64_t m = 1;
  LinearConfig config;

  /// (m, p, p, ...) for m > 1, (p, p, ...) for m = 1.
  std::vector<std::uint64_t> moduli(std::size_t depth) const;
  std::uint64_t order(std::size_t depth) const;
  /// Number of T steps from the seed that represents z (its mixed-radix value).
  std::uint64_t steps_of(const OdometerPoint& z) const;
  OdometerPoint point_at(std::uint64_t steps, std::size_t depth) const;
};

PrimeComponentSeed build_prime_seed(std::uint64_t p, std::uint64_t m);

/// Cells that determine T^N(seed) for N mod order(depth): from the leftmost
/// column whose least period divides the order, to the end of one right-tail
/// description.
CellRange decode_window(const PrimeComponentSeed& seed, std::size_t depth);

/// Cells of T^N(seed) over `window`, N = steps_of(z).
LinearWindow encode_prime(const PrimeComponentSeed& seed, const OdometerPoint& z,
                          CellRange window);

/// Brute-force orbit matching on decode_window(seed, depth). Throws
/// Error(PropertyViolation) when nothing on the orbit matches.
OdometerPoint decode_prime(const PrimeComponentSeed& seed, const LinearWindow& snapshot,
                           std::size_t depth);

struct WindowPair {
  LinearWindow first;
  LinearWindow second;
};

struct ConfigPair {
  LinearConfig first;
  LinearConfig second;
};

/// Cellwise Z_{mn} -> Z_m x Z_n.
WindowPair crt_window_split(const LinearWindow& w, std::uint32_t m, std::uint32_t n);
LinearWindow crt_window_join(const LinearWindow& a, const LinearWindow& b);
ConfigPair crt_config_split(const LinearConfig& cfg, std::uint32_t m, std::uint32_t n);
LinearConfig crt_config_join(const LinearConfig& a, const LinearConfig& b);

class EmbeddingHandle {
 public:
  struct Component {
    PrimeComponentSeed seed;
    std::size_t depth = 0;
    CellRange window;
  };

  const Profile& source() const { return source_; }
  const CanonicalForm& form() const { return form_; }
  std::size_t depth() const { return depth_; }
  const std::vector<Component>& components() const { return components_; }
  /// Window produced by encode(); one cell wider on the right than any
  /// component needs, so a stepped encoding still decodes.
  CellRange window() const { return window_; }

  /// Moduli of the canonical odometer at this depth.
  std::vector<std::uint64_t> moduli() const { return canonical_moduli(form_, depth_); }
  std::uint64_t order() const;

  std::vector<OdometerPoint> split(const OdometerPoint& z) const;
  OdometerPoint join(const std::vector<OdometerPoint>& parts) const;

  LinearWindow encode(const OdometerPoint& z) const;
  OdometerPoint decode(const LinearWindow& snapshot) const;

  std::string describe() const;

 private:
  friend EmbeddingHandle embed_odometer(const Profile& profile, std::size_t depth);
  EmbeddingHandle(Profile source, CanonicalForm form, std::size_t depth);

  Profile source_;
  CanonicalForm form_;
  std::size_t depth_;
  std::vector<Component> components_;
  CellRange window_;
};

/// Builds the embedding of the canonical form of `profile` at truncation
/// depth `depth`. Non-finitary profiles are rejected.
EmbeddingHandle embed_odometer(const Profile& profile, std::size_t depth);

struct RoundtripReport {
  std::size_t ok = 0;
  std::size_t fail = 0;
  std::vector<std::string> failures;  // first few diagnostics

  /// `ROUNDTRIP ok=<count> fail=<count>`
  std::string to_string() const;
};

/// For the first min(bound, order) points z: decode(encode(z)) == z and
/// decode(T(encode(z))) == z + 1.
RoundtripReport verify_roundtrip(const EmbeddingHandle& handle, std::uint64_t bound);
/// Same checks on `count` uniformly drawn points.
RoundtripReport verify_random(const EmbeddingHandle& handle, std::size_t count,
                              std::uint64_t seed);

struct PrimeSupport {
  std::set<std::uint64_t> primes;
  std::vector<CellIndex> undetected;  // columns without a detected period
};

/// Primes dividing the detected column least periods.
PrimeSupport column_prime_support(const SpaceTimeDiagram& diagram);

/// Every detected column period has its primes among those of
/// n * (smallest detected column period). In a T_n diagram the smallest
/// period sits at the right edge of the window.
bool within_column_period_bound(const SpaceTimeDiagram& diagram, std::uint32_t n);

struct Witness {
  std::uint64_t prime = 0;
  std::size_t k = 0;

  /// `WITNESS p=<prime> k=<index>`
  std::string to_string() const;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// First k <= depth and prime p | s_k (ascending) with p not dividing n and
/// not in `allowed`: the column of period s_1...s_k in the odometer diagram
/// then carries a prime outside the finite set available to T_n diagrams
/// whose rightmost column period has primes `allowed`.
std::optional<Witness> nonfinitary_witness(const Profile& profile, std::uint32_t n,
                                           std::size_t depth,
                                           const std::set<std::uint64_t>& allowed = {});

std::string no_witness_message(std::size_t depth);

}  // namespace odembed
