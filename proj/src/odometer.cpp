#include "odembed/odometer.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "odembed/errors.hpp"
#include "odembed/number_theory.hpp"

namespace odembed {

namespace {

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::uint64_t> parse_list(std::string_view text, std::string_view what) {
  std::vector<std::uint64_t> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                 : comma - start));
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      fail_invalid("malformed " + std::string(what) + " entry '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_terms(const std::vector<std::uint64_t>& terms, std::string_view what) {
  for (const auto s : terms) {
    if (s < 2) {
      fail_invalid("profile " + std::string(what) + " term " + std::to_string(s) +
                   " is less than 2");
    }
  }
}

std::uint64_t product(const std::vector<std::uint64_t>& values) {
  std::uint64_t out = 1;
  for (const auto v : values) out = checked_mul(out, v);
  return out;
}

}  // namespace

// ---- Profile ---------------------------------------------------------------

Profile Profile::eventually_periodic(std::vector<std::uint64_t> prefix,
                                     std::vector<std::uint64_t> cycle) {
  if (cycle.empty()) fail_invalid("eventually periodic profile needs a nonempty cycle");
  require_terms(prefix, "prefix");
  require_terms(cycle, "cycle");
  Profile p;
  p.kind_ = Kind::EventuallyPeriodic;
  p.prefix_ = std::move(prefix);
  p.cycle_ = std::move(cycle);
  p.infinite_prime_support_ = false;
  return p;
}

Profile Profile::declared(std::string name, Generator generator, bool infinite_prime_support) {
  if (!generator) fail_invalid("declared profile needs a generator");
  Profile p;
  p.kind_ = Kind::Declared;
  p.name_ = std::move(name);
  p.generator_ = std::make_shared<const Generator>(std::move(generator));
  p.infinite_prime_support_ = infinite_prime_support;
  return p;
}

Profile Profile::primes() {
  return declared("primes", [](std::size_t k) { return nth_prime(k); }, true);
}

Profile Profile::parse(std::string_view text) {
  text = trim(text);
  if (text == "primes") return primes();
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) {
    fail_invalid("malformed profile '" + std::string(text) +
                 "': expected prefix|cycle, e.g. 5|6 or |2,3");
  }
  auto prefix = parse_list(text.substr(0, bar), "profile prefix");
  auto cycle = parse_list(text.substr(bar + 1), "profile cycle");
  if (cycle.empty()) fail_invalid("malformed profile '" + std::string(text) + "': empty cycle");
  return eventually_periodic(std::move(prefix), std::move(cycle));
}

std::uint64_t Profile::term(std::size_t k) const {
  if (k == 0) fail_invalid("profile terms are 1-based");
  if (kind_ == Kind::Declared) {
    const std::uint64_t s = (*generator_)(k);
    if (s < 2) fail_internal("declared profile produced a term below 2");
    return s;
  }
  if (k <= prefix_.size()) return prefix_[k - 1];
  return cycle_[(k - 1 - prefix_.size()) % cycle_.size()];
}

std::vector<std::uint64_t> Profile::terms(std::size_t count) const {
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) out.push_back(term(k));
  return out;
}

std::string Profile::to_string() const {
  if (kind_ == Kind::Declared) return name_;
  return join(prefix_) + "|" + join(cycle_);
}

bool has_prime_factor_above(const Profile& profile, std::uint64_t bound, std::size_t depth) {
  for (std::size_t k = 1; k <= depth; ++k) {
    const auto primes = distinct_primes(profile.term(k));
    if (!primes.empty() && primes.back() > bound) return true;
  }
  return false;
}

// ---- OdometerPoint ---------------------------------------------------------

OdometerPoint::OdometerPoint(std::vector<std::uint64_t> moduli, std::vector<std::uint64_t> digits)
    : moduli_(std::move(moduli)), digits_(std::move(digits)) {
  if (moduli_.size() != digits_.size()) {
    fail_invalid("odometer point: " + std::to_string(digits_.size()) + " digits for depth " +
                 std::to_string(moduli_.size()));
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (moduli_[i] < 2) fail_invalid("odometer point: modulus below 2");
    if (digits_[i] >= moduli_[i]) {
      fail_invalid("odometer point: digit " + std::to_string(i + 1) + " = " +
                   std::to_string(digits_[i]) + " is not below " + std::to_string(moduli_[i]));
    }
  }
}

OdometerPoint::OdometerPoint(const Profile& profile, std::vector<std::uint64_t> digits)
    : OdometerPoint(profile.terms(digits.size()), std::move(digits)) {}

OdometerPoint OdometerPoint::zero(std::vector<std::uint64_t> moduli) {
  std::vector<std::uint64_t> digits(moduli.size(), 0);
  return OdometerPoint(std::move(moduli), std::move(digits));
}

OdometerPoint OdometerPoint::from_value(std::vector<std::uint64_t> moduli, std::uint64_t value) {
  std::vector<std::uint64_t> digits(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) fail_invalid("odometer point: modulus below 2");
    digits[i] = value % moduli[i];
    value /= moduli[i];
  }
  return OdometerPoint(std::move(moduli), std::move(digits));
}

std::uint64_t OdometerPoint::order() const { return product(moduli_); }

std::uint64_t OdometerPoint::value() const {
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    out += digits_[i] * place;
    if (i + 1 < digits_.size()) place = checked_mul(place, moduli_[i]);
  }
  return out;
}

std::string OdometerPoint::to_string() const { return join(digits_); }

OdometerPoint plus(const OdometerPoint& pt, std::uint64_t k) {
  std::vector<std::uint64_t> digits = pt.digits();
  unsigned __int128 carry = k;
  for (std::size_t i = 0; i < digits.size() && carry != 0; ++i) {
    const unsigned __int128 sum = carry + digits[i];
    digits[i] = static_cast<std::uint64_t>(sum % pt.moduli()[i]);
    carry = sum / pt.moduli()[i];
  }
  return OdometerPoint(pt.moduli(), std::move(digits));
}

OdometerPoint parse_point(std::string_view text, std::vector<std::uint64_t> moduli) {
  return OdometerPoint(std::move(moduli), parse_list(text, "point digit"));
}

// ---- InverseLimitPoint -----------------------------------------------------

InverseLimitPoint::InverseLimitPoint(std::vector<std::uint64_t> moduli,
                                     std::vector<std::uint64_t> coordinates)
    : moduli_(std::move(moduli)), coords_(std::move(coordinates)) {
  if (moduli_.size() != coords_.size()) {
    fail_invalid("inverse-limit point: coordinate count does not match depth");
  }
  const auto products = partial_products();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] >= products[i]) {
      fail_invalid("inverse-limit point: coordinate " + std::to_string(i + 1) +
                   " out of range");
    }
    if (i > 0 && coords_[i] % products[i - 1] != coords_[i - 1]) {
      fail_invalid("inverse-limit point: coordinates " + std::to_string(i) + " and " +
                   std::to_string(i + 1) + " are not compatible under reduction");
    }
  }
}

std::vector<std::uint64_t> InverseLimitPoint::partial_products() const {
  std::vector<std::uint64_t> out(moduli_.size());
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] < 2) fail_invalid("inverse-limit point: modulus below 2");
    acc = checked_mul(acc, moduli_[i]);
    out[i] = acc;
  }
  return out;
}

InverseLimitPoint plus_one(const InverseLimitPoint& ilp) {
  const auto products = ilp.partial_products();
  std::vector<std::uint64_t> coords = ilp.coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = (coords[i] + 1) % products[i];
  return InverseLimitPoint(ilp.moduli(), std::move(coords));
}

InverseLimitPoint tilde_of(const OdometerPoint& pt) {
  std::vector<std::uint64_t> coords(pt.depth());
  std::uint64_t acc = 0;
  std::uint64_t place = 1;
  for (std::size_t i = 0; i < pt.depth(); ++i) {
    acc += pt.digits()[i] * place;
    place = checked_mul(place, pt.moduli()[i]);
    coords[i] = acc;
  }
  return InverseLimitPoint(pt.moduli(), std::move(coords));
}

OdometerPoint point_of(const InverseLimitPoint& ilp) {
  const auto products = ilp.partial_products();
  std::vector<std::uint64_t> digits(ilp.depth());
  for (std::size_t i = 0; i < ilp.depth(); ++i) {
    const std::uint64_t below = i == 0 ? 0 : ilp.coordinates()[i - 1];
    const std::uint64_t place = i == 0 ? 1 : products[i - 1];
    digits[i] = (ilp.coordinates()[i] - below) / place;
  }
  return OdometerPoint(ilp.moduli(), std::move(digits));
}

// ---- Multiplicity ----------------------------------------------------------

Multiplicity MultiplicityFunction::at(std::uint64_t prime) const {
  const auto it = values.find(prime);
  return it == values.end() ? Multiplicity{} : it->second;
}

std::set<std::uint64_t> MultiplicityFunction::support() const {
  std::set<std::uint64_t> out;
  for (const auto& [p, v] : values) {
    if (v.infinite || v.count > 0) out.insert(p);
  }
  return out;
}

std::string MultiplicityFunction::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [p, v] : values) {
    if (!first) out << ", ";
    first = false;
    out << p << ": ";
    if (v.infinite) {
      out << "inf";
    } else {
      out << v.count;
    }
  }
  out << '}';
  if (partial) out << " (partial)";
  return out.str();
}

MultiplicityFunction multiplicity(const Profile& profile, std::size_t scan_depth) {
  MultiplicityFunction out;
  auto add_finite = [&](std::uint64_t s) {
    for (const auto& [p, e] : factorize(s)) {
      auto& slot = out.values[p];
      if (!slot.infinite) slot.count += e;
    }
  };
  if (profile.kind() == Profile::Kind::Declared) {
    out.partial = true;
    for (std::size_t k = 1; k <= scan_depth; ++k) add_finite(profile.term(k));
    return out;
  }
  for (const auto s : profile.cycle()) {
    for (const auto& [p, e] : factorize(s)) out.values[p] = Multiplicity::infinity();
  }
  for (const auto s : profile.prefix()) add_finite(s);
  return out;
}

CanonicalForm canonical_form(const Profile& profile) {
  if (profile.kind() == Profile::Kind::Declared) {
    if (profile.infinite_prime_support()) {
      fail_invalid("profile '" + profile.to_string() +
                   "' is not finitary: infinitely many primes divide its terms");
    }
    fail_invalid("profile '" + profile.to_string() +
                 "': a canonical form needs an eventually periodic profile; prime "
                 "multiplicities are not computable from a generator");
  }
  const MultiplicityFunction mfn = multiplicity(profile);
  CanonicalForm form{1, 1};
  for (const auto& [p, v] : mfn.values) {
    if (v.infinite) {
      form.n = checked_mul(form.n, p);
    } else {
      form.m = checked_mul(form.m, checked_pow(p, v.count));
    }
  }
  return form;
}

std::vector<std::uint64_t> canonical_moduli(const CanonicalForm& form, std::size_t depth) {
  std::vector<std::uint64_t> out(depth, form.n);
  if (form.m > 1 && depth > 0) out[0] = form.m;
  return out;
}

OdometerPoint to_canonical(const OdometerPoint& pt, const CanonicalForm& form) {
  const std::uint64_t total = pt.order();
  std::size_t depth = 0;
  std::uint64_t level_order = 1;
  while (true) {
    const std::uint64_t factor = (depth == 0 && form.m > 1) ? form.m : form.n;
    unsigned __int128 next = static_cast<unsigned __int128>(level_order) * factor;
    if (next > total || total % static_cast<std::uint64_t>(next) != 0) break;
    level_order = static_cast<std::uint64_t>(next);
    ++depth;
  }
  if (depth == 0) {
    fail_invalid("truncation of order " + std::to_string(total) +
                 " is too shallow to determine any canonical digit");
  }
  return OdometerPoint::from_value(canonical_moduli(form, depth), pt.value() % level_order);
}

bool conjugate_eq(const Profile& a, const Profile& b) {
  const auto fa = multiplicity(a);
  const auto fb = multiplicity(b);
  std::set<std::uint64_t> primes = fa.support();
  const auto sb = fb.support();
  primes.insert(sb.begin(), sb.end());
  return std::all_of(primes.begin(), primes.end(),
                     [&](std::uint64_t p) { return fa.at(p) == fb.at(p); });
}

// ---- CRT splittings --------------------------------------------------------

namespace {

void require_coprime(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < 2) fail_invalid("splitting factors must be at least 2");
  if (std::gcd(a, b) != 1) {
    fail_invalid("splitting factors " + std::to_string(a) + " and " + std::to_string(b) +
                 " are not coprime");
  }
}

bool all_equal(const std::vector<std::uint64_t>& v, std::size_t from, std::uint64_t x) {
  return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(from), v.end(),
                     [x](std::uint64_t y) { return y == x; });
}

}  // namespace

PointPair crt_split_point(const OdometerPoint& pt, std::uint64_t m, std::uint64_t n) {
  require_coprime(m, n);
  const std::uint64_t mn = checked_mul(m, n);
  if (!all_equal(pt.moduli(), 0, mn)) fail_invalid("crt_split_point: point is not in Z(mn)");
  const std::size_t k = pt.depth();
  const std::uint64_t v = pt.value();
  std::vector<std::uint64_t> ms(k, m), ns(k, n);
  return {OdometerPoint::from_value(ms, v % checked_pow(m, k)),
          OdometerPoint::from_value(ns, v % checked_pow(n, k))};
}

OdometerPoint crt_join_point(const OdometerPoint& a, const OdometerPoint& b) {
  if (a.depth() != b.depth()) fail_invalid("crt_join_point: depth mismatch");
  if (a.depth() == 0) return OdometerPoint::zero({});
  const std::uint64_t m = a.moduli()[0];
  const std::uint64_t n = b.moduli()[0];
  require_coprime(m, n);
  if (!all_equal(a.moduli(), 0, m) || !all_equal(b.moduli(), 0, n)) {
    fail_invalid("crt_join_point: components are not constant-modulus odometers");
  }
  const std::uint64_t v = crt_combine(a.value(), a.order(), b.value(), b.order());
  return OdometerPoint::from_value(std::vector<std::uint64_t>(a.depth(), m * n), v);
}

PointPair seeded_split_point(const OdometerPoint& pt, std::uint64_t s, std::uint64_t m,
                             std::uint64_t n) {
  require_coprime(s, m);
  require_coprime(s, n);
  require_coprime(m, n);
  const std::size_t k = pt.depth();
  if (k == 0 || pt.moduli()[0] != s || !all_equal(pt.moduli(), 1, checked_mul(m, n))) {
    fail_invalid("seeded_split_point: point is not in Z(s, mn, mn, ...)");
  }
  const std::uint64_t v = pt.value();
  std::vector<std::uint64_t> first(k, m);
  first[0] = s;
  const std::uint64_t first_order = checked_mul(s, checked_pow(m, k - 1));
  if (k == 1) {
    // The Z(n) factor is trivial at this depth; it is reported as depth 0.
    return {OdometerPoint::from_value(first, v % first_order), OdometerPoint::zero({})};
  }
  return {OdometerPoint::from_value(first, v % first_order),
          OdometerPoint::from_value(std::vector<std::uint64_t>(k - 1, n),
                                    v % checked_pow(n, k - 1))};
}

OdometerPoint seeded_join_point(const OdometerPoint& a, const OdometerPoint& b) {
  const std::size_t k = a.depth();
  if (k == 0 || b.depth() + 1 != k) fail_invalid("seeded_join_point: depth mismatch");
  const std::uint64_t s = a.moduli()[0];
  const std::uint64_t m = k > 1 ? a.moduli()[1] : 0;
  if (k == 1) return a;
  const std::uint64_t n = b.moduli()[0];
  require_coprime(s, m);
  require_coprime(s, n);
  require_coprime(m, n);
  if (!all_equal(a.moduli(), 1, m) || !all_equal(b.moduli(), 0, n)) {
    fail_invalid("seeded_join_point: components have the wrong shape");
  }
  std::vector<std::uint64_t> moduli(k, m * n);
  moduli[0] = s;
  return OdometerPoint::from_value(
      std::move(moduli), crt_combine(a.value(), a.order(), b.value(), b.order()));
}

// ---- Space-time diagram ----------------------------------------------------

SpaceTimeDiagram odometer_spacetime(const Profile& profile, std::size_t depth,
                                    std::size_t steps) {
  if (depth == 0 || steps == 0) fail_invalid("odometer_spacetime: depth and steps must be >= 1");
  auto moduli = profile.terms(depth);
  const auto alphabet = *std::max_element(moduli.begin(), moduli.end());
  SpaceTimeDiagram diagram(static_cast<std::uint32_t>(alphabet), 1,
                           static_cast<CellIndex>(depth), steps);
  OdometerPoint z = OdometerPoint::zero(moduli);
  for (std::size_t j = 0; j < steps; ++j) {
    for (std::size_t i = 0; i < depth; ++i) {
      diagram.set(static_cast<CellIndex>(i + 1), j, static_cast<Digit>(z.digits()[i]));
    }
    z = plus(z, 1);
  }
  diagram.annotate_periods();
  return diagram;
}

std::string odometer_report(const Profile& profile, std::size_t depth) {
  std::ostringstream out;
  out << "profile " << profile.to_string() << '\n';
  out << "terms " << join(profile.terms(depth)) << '\n';
  std::uint64_t order = 1;
  for (const auto s : profile.terms(depth)) order = checked_mul(order, s);
  out << "order " << order << '\n';
  out << "finitary " << (profile.finitary() ? "yes" : "no") << '\n';
  out << "multiplicity " << multiplicity(profile).to_string() << '\n';
  if (profile.finitary() && profile.kind() == Profile::Kind::EventuallyPeriodic) {
    const CanonicalForm form = canonical_form(profile);
    out << "canonical m=" << form.m << " n=" << form.n << '\n';
  }
  return out.str();
}

}  // namespace odembed
