#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace odembed {

struct PeriodDetection {
  std::size_t transient = 0;
  std::size_t period = 0;

  friend bool operator==(const PeriodDetection&, const PeriodDetection&) = default;
};

/// Smallest (transient, period), compared lexicographically, such that
/// seq[j] == seq[j + period] for every j >= transient in the window, and the
/// periodic part spans at least four full periods (three confirmations after
/// the first). Returns nullopt when no candidate is confirmed yet.
template <class T>
std::optional<PeriodDetection> least_period(std::span<const T> seq) {
  const std::size_t len = seq.size();
  std::optional<PeriodDetection> best;
  for (std::size_t period = 1; 4 * period <= len; ++period) {
    std::size_t transient = 0;
    for (std::size_t j = len - period; j-- > 0;) {
      if (!(seq[j] == seq[j + period])) {
        transient = j + 1;
        break;
      }
    }
    if (len - transient < 4 * period) continue;
    if (!best || transient < best->transient) best = PeriodDetection{transient, period};
    if (best->transient == 0) break;
  }
  return best;
}

template <class T>
std::optional<PeriodDetection> least_period(const std::vector<T>& seq) {
  return least_period(std::span<const T>(seq));
}

/// Least d dividing block.size() such that block is d-periodic as a cyclic word.
template <class T>
std::size_t cyclic_period(std::span<const T> block) {
  const std::size_t len = block.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (std::size_t j = d; j < len && ok; ++j) ok = block[j] == block[j - d];
    if (ok) return d;
  }
  return len;
}

}  // namespace odembed
