#include "bayesvote/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace bayesvote {
namespace experiments {

namespace {

int truth_m(const GroundTruth& gt) {
  return std::visit([](const auto& v) { return v.m(); }, gt);
}

// Top alternative of the ground truth, when one dominates all others.
std::optional<int> truth_top(const GroundTruth& gt) {
  if (const auto* order = std::get_if<LinearOrder>(&gt)) return order->top();
  const auto& t = std::get<Tournament>(gt);
  for (int c = 0; c < t.m(); ++c) {
    bool tops = true;
    for (int b = 0; b < t.m() && tops; ++b)
      if (b != c && !t.wins(c, b)) tops = false;
    if (tops) return c;
  }
  return std::nullopt;
}

}  // namespace

GroundTruth builtin_ground_truth(const std::string& name) {
  if (name == "w5rot") {
    Tournament t(5);
    for (int i = 0; i < 5; ++i) {
      t.set_winner(i, (i + 1) % 5);
      t.set_winner(i, (i + 2) % 5);
    }
    return t;
  }
  if (name.rfind("identity(", 0) == 0 && name.back() == ')') {
    const int m = std::stoi(name.substr(9, name.size() - 10));
    if (m < 1) throw std::invalid_argument("identity(m) requires m >= 1");
    std::vector<int> r(m);
    for (int i = 0; i < m; ++i) r[i] = i;
    return LinearOrder(std::move(r));
  }
  throw std::invalid_argument("unknown ground truth '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (phi_list.empty() || n_list.empty())
    throw std::invalid_argument("phi_list and n_list must be nonempty");
  for (double phi : phi_list)
    if (!(phi > 0.0 && phi < 1.0))
      throw std::invalid_argument("dispersion must lie in (0,1)");
  for (Count n : n_list)
    if (n < 1) throw std::invalid_argument("electorate sizes must be positive");
  if (rules.empty()) throw std::invalid_argument("at least one rule required");
  const int m = truth_m(ground_truth);
  for (Rule r : rules) {
    if (r == Rule::fb1 && m > 20)
      throw SizeLimitError("fb1 requires m <= 20");
    if (r == Rule::kemeny && m > 24)
      throw SizeLimitError("kemeny requires m <= 24");
  }
  if (model == ModelKind::mallows &&
      !std::holds_alternative<LinearOrder>(ground_truth))
    throw std::invalid_argument("Mallows ground truth must be a linear order");
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const size_t nrules = cfg.rules.size();
  const size_t npairs = nrules * (nrules - 1) / 2;
  const auto top = truth_top(cfg.ground_truth);

  // Cells iterate in sorted (phi, n) order; the cell index that feeds
  // the seed derivation follows the same order, so reruns and worker
  // counts cannot change any trial's stream.
  std::vector<double> phis = cfg.phi_list;
  std::vector<Count> ns = cfg.n_list;
  std::sort(phis.begin(), phis.end());
  std::sort(ns.begin(), ns.end());

  auto run_trial = [&](uint64_t cell, int trial, std::vector<int>& disagree,
                       std::vector<int>& hits, double phi, Count n) {
    RandomState rng(derive_seed(cfg.seed, cell, static_cast<uint64_t>(trial)));
    Profile p;
    if (cfg.model == ModelKind::mallows) {
      p = sample_mallows(std::get<LinearOrder>(cfg.ground_truth), phi, n, rng);
    } else {
      const Tournament w =
          std::holds_alternative<Tournament>(cfg.ground_truth)
              ? std::get<Tournament>(cfg.ground_truth)
              : to_tournament(std::get<LinearOrder>(cfg.ground_truth));
      p = sample_condorcet(w, phi, n, cfg.vote_kind, rng);
    }
    std::vector<WinnerSet> sets(nrules);
    for (size_t r = 0; r < nrules; ++r)
      sets[r] = apply_rule(cfg.rules[r], p, phi);
    size_t pair = 0;
    for (size_t i = 0; i < nrules; ++i)
      for (size_t j = i + 1; j < nrules; ++j, ++pair)
        if (!(sets[i] == sets[j])) ++disagree[pair];
    if (top) {
      const WinnerSet want{{*top}};
      for (size_t r = 0; r < nrules; ++r)
        if (sets[r] == want) ++hits[r];
    }
  };

  std::vector<ResultRow> rows;
  uint64_t cell = 0;
  for (double phi : phis) {
    for (Count n : ns) {
      ResultRow row{cfg.model, phi, n, cfg.trials,
                    std::vector<int>(npairs, 0),
                    std::vector<int>(nrules, top ? 0 : -1)};
      const int workers = std::max(1, cfg.workers);
      if (workers == 1) {
        std::vector<int> hits(nrules, 0);
        for (int t = 0; t < cfg.trials; ++t)
          run_trial(cell, t, row.pair_disagreements, hits, phi, n);
        if (top) row.truetop_hits = hits;
      } else {
        std::vector<std::vector<int>> dis(workers, std::vector<int>(npairs, 0));
        std::vector<std::vector<int>> hit(workers, std::vector<int>(nrules, 0));
        std::vector<std::thread> pool;
        for (int wkr = 0; wkr < workers; ++wkr) {
          pool.emplace_back([&, wkr]() {
            for (int t = wkr; t < cfg.trials; t += workers)
              run_trial(cell, t, dis[wkr], hit[wkr], phi, n);
          });
        }
        for (auto& th : pool) th.join();
        std::vector<int> hits(nrules, 0);
        for (int wkr = 0; wkr < workers; ++wkr) {
          for (size_t i = 0; i < npairs; ++i)
            row.pair_disagreements[i] += dis[wkr][i];
          for (size_t i = 0; i < nrules; ++i) hits[i] += hit[wkr][i];
        }
        if (top) row.truetop_hits = hits;
      }
      rows.push_back(std::move(row));
      ++cell;
    }
  }
  return rows;
}

double wilson_half_width(int k, int n) {
  if (n == 0) return 0.0;
  const double z = 1.959963984540054;  // 97.5th normal percentile
  const double p = static_cast<double>(k) / n;
  return (z / (1.0 + z * z / n)) *
         std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * static_cast<double>(n) * n));
}

std::string to_csv(const ExperimentConfig& cfg,
                   const std::vector<ResultRow>& rows) {
  const size_t nrules = cfg.rules.size();
  std::ostringstream out;
  out << "model,phi,n,trials";
  for (size_t i = 0; i < nrules; ++i)
    for (size_t j = i + 1; j < nrules; ++j) {
      const std::string pair = std::string(rule_name(cfg.rules[i])) + "_" +
                               rule_name(cfg.rules[j]);
      out << "," << pair << "_disagree," << pair << "_ci";
    }
  for (size_t i = 0; i < nrules; ++i)
    out << "," << rule_name(cfg.rules[i]) << "_truetop";
  out << "\n";

  char buf[32];
  auto rate = [&](int count, int trials) {
    std::snprintf(buf, sizeof(buf), "%.6f",
                  static_cast<double>(count) / trials);
    return std::string(buf);
  };
  for (const auto& row : rows) {
    out << (row.model == ModelKind::mallows ? "mallows" : "condorcet");
    std::snprintf(buf, sizeof(buf), "%g", row.phi);
    out << "," << buf << "," << row.n << "," << row.trials;
    for (int d : row.pair_disagreements) {
      out << "," << rate(d, row.trials);
      std::snprintf(buf, sizeof(buf), "%.6f", wilson_half_width(d, row.trials));
      out << "," << buf;
    }
    for (int h : row.truetop_hits) {
      if (h < 0)
        out << ",";
      else
        out << "," << rate(h, row.trials);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace experiments
}  // namespace bayesvote
