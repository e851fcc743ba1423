#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "kleinian/family.hpp"

namespace support {

inline std::uint64_t test_seed(std::uint64_t fallback = 20261016) {
  if (const char* s = std::getenv("KLEINIAN_RP_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return fallback;
}

inline const std::vector<double>& sample_lengths() {
  static const std::vector<double> l = {0.15, 0.5, 1.0, 2.0, 3.5};
  return l;
}

/// Angle(2..max_p), Zero, and the sampled lengths.
inline std::vector<kleinian::UPoint> sample_upoints(int max_p = 12) {
  std::vector<kleinian::UPoint> out;
  for (int p = 2; p <= max_p; ++p) out.push_back(kleinian::UPoint::angle(p));
  out.push_back(kleinian::UPoint::zero());
  for (double l : sample_lengths()) out.push_back(kleinian::UPoint::length(l));
  return out;
}

/// Every slot assignment of the row with integers in 2..max_int and the
/// sampled half-lengths whose evaluation has no violated condition.
inline void for_each_admissible(
    const kleinian::RowInfo& row, int max_int,
    const std::function<void(const kleinian::IntSlots&, const kleinian::UPointSlots&)>& fn) {
  const auto ups = sample_upoints(max_int);
  std::vector<int> ints;
  for (int k = 2; k <= max_int; ++k) ints.push_back(k);

  kleinian::IntSlots is;
  kleinian::UPointSlots us;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i < row.int_slots.size()) {
      for (int k : ints) {
        is[row.int_slots[i]] = k;
        rec(i + 1, j);
      }
      return;
    }
    if (j < row.upoint_slots.size()) {
      for (const auto& u : ups) {
        us.insert_or_assign(row.upoint_slots[j], u);
        rec(i, j + 1);
      }
      return;
    }
    const auto ev = kleinian::evaluate_row(row.id, is, us);
    if (ev.violations.empty() && ev.group) fn(is, us);
  };
  rec(0, 0);
}

}  // namespace support
