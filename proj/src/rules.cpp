#include "bayesvote/rules.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bayesvote {

namespace {

// above[y][x] = number of votes ranking y over x, recovered from the
// margin matrix: #(y>x) = (n + w(y,x))/2. Valid for both vote kinds.
std::vector<std::vector<Count>> above_counts(const Profile& p) {
  const WeightedMajorityGraph g = wmg(p);
  const int m = g.m();
  std::vector<std::vector<Count>> above(m, std::vector<Count>(m, 0));
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < m; ++x)
      if (x != y) above[y][x] = (g.n + g.w[y][x]) / 2;
  return above;
}

// Kendall cost of placing x at the top of the remaining set `mask`.
Count placement_cost(const std::vector<std::vector<Count>>& above,
                     uint32_t mask, int x) {
  Count cost = 0;
  for (uint32_t rest = mask & ~(uint32_t{1} << x); rest; rest &= rest - 1) {
    const int y = std::countr_zero(rest);
    cost += above[y][x];
  }
  return cost;
}

// D[mask] = minimum total within-set Kendall cost of ordering `mask`.
std::vector<Count> kemeny_subset_dp(const std::vector<std::vector<Count>>& above,
                                    int m) {
  std::vector<Count> best(uint32_t{1} << m, 0);
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    Count mn = -1;
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      const int x = std::countr_zero(bits);
      const Count c = placement_cost(above, mask, x) +
                      best[mask & ~(uint32_t{1} << x)];
      if (mn < 0 || c < mn) mn = c;
    }
    best[mask] = mn;
  }
  return best;
}

double log_sum_exp(const std::vector<double>& terms) {
  double mx = terms[0];
  for (double t : terms) mx = std::max(mx, t);
  double s = 0.0;
  for (double t : terms) s += std::exp(t - mx);
  return mx + std::log(s);
}

// log(1 + e^t), stable for large |t|.
double log1p_exp(double t) {
  if (t > 0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

ExactRational rational_phi_pow(const ExactRational& phi, Count w) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  const cpp_int num = numerator(phi), den = denominator(phi);
  const auto e = static_cast<unsigned>(w < 0 ? -w : w);
  if (w >= 0) return ExactRational(pow(num, e), pow(den, e));
  return ExactRational(pow(den, e), pow(num, e));
}

}  // namespace

bool WinnerSet::contains(int a) const {
  return std::find(alternatives.begin(), alternatives.end(), a) !=
         alternatives.end();
}

ScoreTable kemeny_forced_top_scores(const Profile& p) {
  const int m = p.m();
  if (m > 24) throw SizeLimitError("Kemeny subset DP requires m <= 24");
  const auto above = above_counts(p);
  const auto best = kemeny_subset_dp(above, m);
  const uint32_t full = (uint32_t{1} << m) - 1;
  ScoreTable t{ScoreKind::kemeny_forced_top, Orientation::minimize, {}, {}};
  t.values.resize(m);
  for (int c = 0; c < m; ++c)
    t.values[c] = static_cast<double>(placement_cost(above, full, c) +
                                      best[full & ~(uint32_t{1} << c)]);
  return t;
}

WinnerSet kemeny_winners(const Profile& p) {
  return winners(kemeny_forced_top_scores(p));
}

KemenyResult kemeny_optimal_order(const Profile& p) {
  const int m = p.m();
  if (m > 24) throw SizeLimitError("Kemeny subset DP requires m <= 24");
  const auto above = above_counts(p);
  const auto best = kemeny_subset_dp(above, m);

  // Count co-optimal orderings of each subset.
  std::vector<Count> ways(uint32_t{1} << m, 0);
  ways[0] = 1;
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      const int x = std::countr_zero(bits);
      const uint32_t rest = mask & ~(uint32_t{1} << x);
      if (placement_cost(above, mask, x) + best[rest] == best[mask])
        ways[mask] += ways[rest];
    }
  }

  // Lexicographically-first optimal order, top down.
  std::vector<int> order;
  uint32_t mask = (uint32_t{1} << m) - 1;
  while (mask) {
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      const int x = std::countr_zero(bits);
      const uint32_t rest = mask & ~(uint32_t{1} << x);
      if (placement_cost(above, mask, x) + best[rest] == best[mask]) {
        order.push_back(x);
        mask = rest;
        break;
      }
    }
  }
  return {LinearOrder(std::move(order)), best[(uint32_t{1} << m) - 1],
          ways[(uint32_t{1} << m) - 1]};
}

ScoreTable fb1_log_scores(const Profile& p, double phi) {
  const int m = p.m();
  if (m > 20) throw SizeLimitError("fb1 subset DP requires m <= 20");
  if (!(phi > 0.0 && phi < 1.0))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  const auto above = above_counts(p);
  const double log_phi = std::log(phi);

  // F[mask] = log sum over orderings of `mask` of phi^(within-set cost).
  std::vector<double> f(uint32_t{1} << m, 0.0);
  std::vector<double> terms;
  for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
    terms.clear();
    for (uint32_t bits = mask; bits; bits &= bits - 1) {
      const int x = std::countr_zero(bits);
      const uint32_t rest = mask & ~(uint32_t{1} << x);
      terms.push_back(log_phi * static_cast<double>(placement_cost(above, mask, x)) +
                      f[rest]);
    }
    f[mask] = log_sum_exp(terms);
  }

  const uint32_t full = (uint32_t{1} << m) - 1;
  ScoreTable t{ScoreKind::fb1_log_score, Orientation::maximize, {}, {}};
  t.values.resize(m);
  for (int c = 0; c < m; ++c)
    t.values[c] = log_phi * static_cast<double>(placement_cost(above, full, c)) +
                  f[full & ~(uint32_t{1} << c)];
  return t;
}

std::vector<double> fb1_top_posteriors(const Profile& p, double phi) {
  const ScoreTable t = fb1_log_scores(p, phi);
  const double total = log_sum_exp(t.values);
  std::vector<double> post(t.values.size());
  for (size_t c = 0; c < post.size(); ++c)
    post[c] = std::exp(t.values[c] - total);
  return post;
}

ScoreTable fb2_risks(const Profile& p, double phi) {
  if (!(phi > 0.0 && phi < 1.0))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  const WeightedMajorityGraph g = wmg(p);
  const int m = g.m();
  const double log_phi = std::log(phi);
  ScoreTable t{ScoreKind::fb2_risk, Orientation::minimize, {}, {}};
  t.values.resize(m);
  t.log_survival.resize(m);
  for (int c = 0; c < m; ++c) {
    double log_surv = 0.0;
    for (int b = 0; b < m; ++b) {
      if (b == c) continue;
      log_surv -= log1p_exp(static_cast<double>(g.w[c][b]) * log_phi);
    }
    t.log_survival[c] = log_surv;
    t.values[c] = 1.0 - std::exp(log_surv);
  }
  return t;
}

std::vector<ExactRational> fb2_risks_exact(const Profile& p,
                                           const ExactRational& phi) {
  if (!(phi > 0 && phi < 1))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  const WeightedMajorityGraph g = wmg(p);
  const int m = g.m();
  std::vector<ExactRational> risks(m);
  for (int c = 0; c < m; ++c) {
    ExactRational surv = 1;
    for (int b = 0; b < m; ++b) {
      if (b == c) continue;
      surv /= 1 + rational_phi_pow(phi, g.w[c][b]);
    }
    risks[c] = 1 - surv;
  }
  return risks;
}

WinnerSet fb2_winners_exact(const Profile& p, const ExactRational& phi) {
  const auto risks = fb2_risks_exact(p, phi);
  const ExactRational best = *std::min_element(risks.begin(), risks.end());
  WinnerSet w;
  for (int c = 0; c < static_cast<int>(risks.size()); ++c)
    if (risks[c] == best) w.alternatives.push_back(c);
  return w;
}

ScoreTable g_scores(const Profile& p) {
  const WeightedMajorityGraph g = wmg(p);
  const int m = g.m();
  ScoreTable t{ScoreKind::g_incoming, Orientation::minimize, {}, {}};
  t.values.resize(m);
  for (int c = 0; c < m; ++c) {
    Count s = 0;
    for (int b = 0; b < m; ++b)
      if (g.w[b][c] > 0) s += g.w[b][c];
    t.values[c] = static_cast<double>(s);
  }
  return t;
}

WinnerSet winners(const ScoreTable& table) {
  const int m = table.m();
  if (m == 0) throw std::invalid_argument("empty score table");
  const bool integral = table.kind == ScoreKind::kemeny_forced_top ||
                        table.kind == ScoreKind::g_incoming;
  // fb2 ties are judged on log survival, where precision survives
  // large electorates.
  const std::vector<double>& vals =
      table.kind == ScoreKind::fb2_risk ? table.log_survival : table.values;
  const bool maximize = table.kind == ScoreKind::fb2_risk
                            ? true
                            : table.orientation == Orientation::maximize;
  double best = vals[0];
  for (double v : vals) best = maximize ? std::max(best, v) : std::min(best, v);
  WinnerSet w;
  for (int c = 0; c < m; ++c) {
    if (integral) {
      if (vals[c] == best) w.alternatives.push_back(c);
    } else if (std::abs(vals[c] - best) <= 1e-9 * std::max(1.0, std::abs(best))) {
      w.alternatives.push_back(c);
    }
  }
  return w;
}

}  // namespace bayesvote
