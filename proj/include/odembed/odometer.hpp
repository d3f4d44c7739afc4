#pragma once

// Odometers (adding machines) on Z(S) = prod Z/s_k, in the carrying digit
// representation and the inverse-limit representation, plus the
// multiplicity-function invariant and coprime product splittings.
//
// Every value here is a finite truncation; depth is always explicit.
// Digits are least-significant first and +1 acts on the first digit.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "odembed/diagram.hpp"

namespace odembed {

/// The sequence S = (s_1, s_2, ...), each term >= 2.
///
/// EventuallyPeriodic profiles are `prefix` followed by `cycle` repeated
/// forever, which makes the multiplicity function exactly computable.
/// Declared profiles carry a generator and an explicit flag for infinite prime
/// support, since that property cannot be read off finitely many terms.
class Profile {
 public:
  enum class Kind { EventuallyPeriodic, Declared };
  using Generator = std::function<std::uint64_t(std::size_t)>;  // 1-based index

  static Profile eventually_periodic(std::vector<std::uint64_t> prefix,
                                     std::vector<std::uint64_t> cycle);
  static Profile declared(std::string name, Generator generator,
                          bool infinite_prime_support);
  /// S = (2, 3, 5, 7, 11, ...), the standard non-finitary example.
  static Profile primes();

  /// Parses `prefix|cycle` (comma-separated integers, prefix may be empty) or
  /// the name `primes`.
  static Profile parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<std::uint64_t>& prefix() const { return prefix_; }
  const std::vector<std::uint64_t>& cycle() const { return cycle_; }
  bool infinite_prime_support() const { return infinite_prime_support_; }
  /// Finitely many primes divide the terms.
  bool finitary() const { return !infinite_prime_support_; }

  /// s_k, 1-based.
  std::uint64_t term(std::size_t k) const;
  /// s_1..s_count.
  std::vector<std::uint64_t> terms(std::size_t count) const;

  /// The serialized form accepted by parse().
  std::string to_string() const;

 private:
  Profile() = default;

  Kind kind_ = Kind::EventuallyPeriodic;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> cycle_;
  std::string name_;
  std::shared_ptr<const Generator> generator_;
  bool infinite_prime_support_ = false;
};

/// True when some s_k with k <= depth has a prime factor above `bound`.
bool has_prime_factor_above(const Profile& profile, std::uint64_t bound, std::size_t depth);

/// Truncation of a point of Z(S): digits z_1..z_k with 0 <= z_i < s_i.
class OdometerPoint {
 public:
  OdometerPoint(std::vector<std::uint64_t> moduli, std::vector<std::uint64_t> digits);
  OdometerPoint(const Profile& profile, std::vector<std::uint64_t> digits);

  static OdometerPoint zero(std::vector<std::uint64_t> moduli);
  /// Mixed-radix expansion of value mod order().
  static OdometerPoint from_value(std::vector<std::uint64_t> moduli, std::uint64_t value);

  std::size_t depth() const { return digits_.size(); }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  const std::vector<std::uint64_t>& digits() const { return digits_; }
  /// s_1 * ... * s_k.
  std::uint64_t order() const;
  /// sum z_i * (s_1 ... s_{i-1}).
  std::uint64_t value() const;

  std::string to_string() const;  // comma-separated digits

  friend bool operator==(const OdometerPoint&, const OdometerPoint&) = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> digits_;
};

/// pt + k*(1,0,0,...) with carrying, wrapping inside Z/(s_1...s_k).
OdometerPoint plus(const OdometerPoint& pt, std::uint64_t k);

/// Parses a comma-separated digit list against the given moduli.
OdometerPoint parse_point(std::string_view text, std::vector<std::uint64_t> moduli);

/// Truncation of a point of the inverse limit: w_i mod s_1...s_i, compatible
/// under the reduction maps.
class InverseLimitPoint {
 public:
  InverseLimitPoint(std::vector<std::uint64_t> moduli, std::vector<std::uint64_t> coordinates);

  std::size_t depth() const { return coords_.size(); }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  const std::vector<std::uint64_t>& coordinates() const { return coords_; }
  /// s_1 ... s_i for i = 1..depth.
  std::vector<std::uint64_t> partial_products() const;

  friend bool operator==(const InverseLimitPoint&, const InverseLimitPoint&) = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> coords_;
};

/// Coordinatewise +1 (no carrying).
InverseLimitPoint plus_one(const InverseLimitPoint& ilp);

InverseLimitPoint tilde_of(const OdometerPoint& pt);
OdometerPoint point_of(const InverseLimitPoint& ilp);

struct Multiplicity {
  bool infinite = false;
  std::uint64_t count = 0;

  static Multiplicity infinity() { return {true, 0}; }
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

/// prime -> total number of times it divides members of S. Primes outside
/// `values` map to 0.
struct MultiplicityFunction {
  std::map<std::uint64_t, Multiplicity> values;
  /// Set for Declared profiles: only the scanned terms were counted.
  bool partial = false;

  Multiplicity at(std::uint64_t prime) const;
  std::set<std::uint64_t> support() const;
  std::string to_string() const;

  friend bool operator==(const MultiplicityFunction& a, const MultiplicityFunction& b) {
    return a.values == b.values;
  }
};

/// Exact for EventuallyPeriodic profiles. Declared profiles are scanned over
/// their first `scan_depth` terms and the result is flagged partial.
MultiplicityFunction multiplicity(const Profile& profile, std::size_t scan_depth = 64);

/// (Z(m, n, n, ...), +1) with gcd(m, n) = 1 and n squarefree; m = 1 means the
/// pure n-adic odometer.
struct CanonicalForm {
  std::uint64_t m = 1;
  std::uint64_t n = 2;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Profile& profile);
/// (m, n, n, ...) when m > 1, (n, n, ...) otherwise; `depth` terms.
std::vector<std::uint64_t> canonical_moduli(const CanonicalForm& form, std::size_t depth);

/// Maps a truncated point of Z(S) into the canonical odometer at the deepest
/// level whose order divides s_1...s_k. The conjugacy fixes the orbit of 0,
/// so this is reduction of the integer value.
OdometerPoint to_canonical(const OdometerPoint& pt, const CanonicalForm& form);

/// Equal multiplicity functions.
bool conjugate_eq(const Profile& a, const Profile& b);

struct PointPair {
  OdometerPoint first;
  OdometerPoint second;
};

/// Z(mn) -> Z(m) x Z(n) at equal depth: base-m and base-n expansions of the
/// integer value.
PointPair crt_split_point(const OdometerPoint& pt, std::uint64_t m, std::uint64_t n);
OdometerPoint crt_join_point(const OdometerPoint& a, const OdometerPoint& b);

/// Z(s, mn, mn, ...) at depth k -> Z(s, m, m, ...) at depth k times Z(n) at
/// depth k-1. s, m, n pairwise coprime.
PointPair seeded_split_point(const OdometerPoint& pt, std::uint64_t s, std::uint64_t m,
                             std::uint64_t n);
OdometerPoint seeded_join_point(const OdometerPoint& a, const OdometerPoint& b);

/// Row j holds the digits of plus(zero, j); columns are indexed 1..depth.
SpaceTimeDiagram odometer_spacetime(const Profile& profile, std::size_t depth,
                                    std::size_t steps);

/// Terms, multiplicity function and canonical form as `key value` lines.
std::string odometer_report(const Profile& profile, std::size_t depth);

}  // namespace odembed
