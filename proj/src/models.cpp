#include "bayesvote/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace bayesvote {

namespace {

void require_kind(const RankingModel& model, ModelKind kind) {
  if (model.kind != kind)
    throw std::invalid_argument("parameter does not match the model's parameter space");
}

// Total Kendall distance from the profile to W, via the WMG: a pair
// ordered a>b by W disagrees with (n - w_P(a,b))/2 votes.
Count profile_kendall(const Tournament& w, const Profile& p) {
  const WeightedMajorityGraph g = wmg(p);
  if (g.m() != w.m())
    throw std::invalid_argument("ground truth does not match the profile's alternatives");
  Count k = 0;
  for (int a = 0; a < g.m(); ++a)
    for (int b = a + 1; b < g.m(); ++b) {
      const int win = w.wins(a, b) ? a : b;
      const int lose = a + b - win;
      k += (g.n - g.w[win][lose]) / 2;
    }
  return k;
}

}  // namespace

double log_normalizer(const RankingModel& model) {
  if (model.kind == ModelKind::mallows) {
    double log_z = 0.0;
    for (int i = 1; i <= model.m; ++i) {
      double level = 0.0, pw = 1.0;
      for (int j = 0; j < i; ++j) {
        level += pw;
        pw *= model.phi;
      }
      log_z += std::log(level);
    }
    return log_z;
  }
  return pair_count(model.m) * std::log1p(model.phi);
}

double profile_log_likelihood(const RankingModel& model, const Tournament& w,
                              const Profile& p) {
  if (model.kind == ModelKind::mallows) {
    if (!w.as_linear_order())
      throw std::invalid_argument("Mallows ground truth must be a linear order");
    if (p.kind() != VoteKind::linear)
      throw std::invalid_argument("Mallows sample space contains linear orders only");
  }
  const Count k = profile_kendall(w, p);
  return static_cast<double>(k) * std::log(model.phi) -
         static_cast<double>(p.total()) * log_normalizer(model);
}

double profile_log_likelihood(const RankingModel& model, const LinearOrder& w,
                              const Profile& p) {
  return profile_log_likelihood(model, to_tournament(w), p);
}

double pairwise_marginal(const RankingModel& model, const Tournament& w,
                         int a, int b) {
  if (a == b) throw std::invalid_argument("pairwise marginal needs distinct alternatives");
  if (model.kind == ModelKind::condorcet)
    return w.wins(a, b) ? 1.0 / (1.0 + model.phi) : model.phi / (1.0 + model.phi);
  const auto order = w.as_linear_order();
  if (!order)
    throw std::invalid_argument("Mallows ground truth must be a linear order");
  if (model.m > 9)
    throw SizeLimitError("Mallows pairwise marginal enumerates m! orders; m <= 9 required");
  double num = 0.0, den = 0.0;
  for (const auto& v : all_linear_orders(model.m)) {
    const double weight = std::pow(model.phi, kendall(v, *order));
    den += weight;
    const auto pos = v.positions();
    if (pos[a] < pos[b]) num += weight;
  }
  return num / den;
}

double pairwise_marginal(const RankingModel& model, const LinearOrder& w,
                         int a, int b) {
  return pairwise_marginal(model, to_tournament(w), a, b);
}

Profile sample_mallows(const LinearOrder& w, double phi, Count n,
                       RandomState& rng) {
  if (!(phi > 0.0 && phi < 1.0))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  w.validate();
  const int m = w.m();
  // Cumulative insertion weights per level: at level i the position
  // j from the top (1-based) has weight phi^(i-j).
  std::vector<std::vector<double>> cum(m + 1);
  for (int i = 1; i <= m; ++i) {
    cum[i].resize(i);
    double acc = 0.0;
    for (int j = 1; j <= i; ++j) {
      acc += std::pow(phi, i - j);
      cum[i][j - 1] = acc;
    }
  }
  std::map<std::vector<int>, Count> seen;
  std::vector<int> partial;
  for (Count v = 0; v < n; ++v) {
    partial.clear();
    for (int i = 1; i <= m; ++i) {
      const double u = rng.next_double() * cum[i][i - 1];
      const auto it = std::upper_bound(cum[i].begin(), cum[i].end(), u);
      const int j = static_cast<int>(it - cum[i].begin());  // 0-based position
      partial.insert(partial.begin() + std::min(j, i - 1), w.ranking[i - 1]);
    }
    ++seen[partial];
  }
  Profile p(AlternativeSet(m), VoteKind::linear);
  for (const auto& [ranking, count] : seen) p.add(LinearOrder(ranking), count);
  return p;
}

Profile sample_condorcet(const Tournament& w, double phi, Count n,
                         VoteKind kind, RandomState& rng) {
  if (!(phi > 0.0 && phi < 1.0))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  const int m = w.m();
  const double agree = 1.0 / (1.0 + phi);
  const int npairs = pair_count(m);
  constexpr int kMaxAttempts = 10000;

  auto draw = [&]() {
    Tournament t(m);
    for (int i = 0; i < npairs; ++i) {
      const bool keep = rng.next_bernoulli(agree);
      t.beats[i] = keep ? w.beats[i] : (w.beats[i] ? 0 : 1);
    }
    return t;
  };

  if (kind == VoteKind::tournament) {
    std::map<std::vector<uint8_t>, Count> seen;
    for (Count v = 0; v < n; ++v) ++seen[draw().beats];
    Profile p(AlternativeSet(m), VoteKind::tournament);
    for (const auto& [bits, count] : seen)
      p.add(Tournament(m, bits), count);
    return p;
  }

  std::map<std::vector<int>, Count> seen;
  for (Count v = 0; v < n; ++v) {
    std::optional<LinearOrder> order;
    for (int attempt = 0; attempt < kMaxAttempts && !order; ++attempt)
      order = draw().as_linear_order();
    if (!order)
      throw std::runtime_error(
          "rejection sampler exceeded the attempt cap; m is too large for linear-kind draws");
    ++seen[order->ranking];
  }
  Profile p(AlternativeSet(m), VoteKind::linear);
  for (const auto& [ranking, count] : seen) p.add(LinearOrder(ranking), count);
  return p;
}

std::vector<LinearOrder> all_linear_orders(int m) {
  if (m > 9) throw SizeLimitError("order enumeration requires m <= 9");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LinearOrder> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Tournament> all_tournaments(int m) {
  if (m > 6) throw SizeLimitError("tournament enumeration requires m <= 6");
  const int npairs = pair_count(m);
  std::vector<Tournament> out;
  out.reserve(size_t{1} << npairs);
  for (uint32_t mask = 0; mask < (uint32_t{1} << npairs); ++mask) {
    Tournament t(m);
    for (int i = 0; i < npairs; ++i) t.beats[i] = (mask >> i) & 1;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace bayesvote
