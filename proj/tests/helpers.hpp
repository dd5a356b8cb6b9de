#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "bayesvote/models.hpp"

namespace test_helpers {

using namespace bayesvote;

// Exact per-order Mallows probabilities by brute force (test-side
// oracle; independent of the library's normalizer).
inline std::map<std::vector<int>, double> mallows_distribution(
    const LinearOrder& w, double phi) {
  std::map<std::vector<int>, double> probs;
  double z = 0.0;
  for (const auto& v : all_linear_orders(w.m())) {
    const double weight = std::pow(phi, kendall(v, w));
    probs[v.ranking] = weight;
    z += weight;
  }
  for (auto& [_, p] : probs) p /= z;
  return probs;
}

// Exact per-tournament Condorcet-model probabilities by brute force.
inline std::map<std::vector<uint8_t>, double> condorcet_distribution(
    const Tournament& w, double phi) {
  std::map<std::vector<uint8_t>, double> probs;
  double z = 0.0;
  for (const auto& t : all_tournaments(w.m())) {
    const double weight = std::pow(phi, kendall(t, w));
    probs[t.beats] = weight;
    z += weight;
  }
  for (auto& [_, p] : probs) p /= z;
  return probs;
}

// Pearson chi-square statistic of observed counts against expected
// probabilities.
template <typename Key>
double chi_square(const std::map<Key, Count>& observed,
                  const std::map<Key, double>& expected, Count total) {
  double stat = 0.0;
  for (const auto& [key, p] : expected) {
    const auto it = observed.find(key);
    const double obs = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    const double exp = p * static_cast<double>(total);
    stat += (obs - exp) * (obs - exp) / exp;
  }
  return stat;
}

// Upper critical values of the chi-square distribution at alpha=0.001.
inline double chi_square_critical_001(int dof) {
  switch (dof) {
    case 5: return 20.5150;
    case 7: return 24.3219;
    default: throw std::invalid_argument("no tabulated critical value");
  }
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace test_helpers
