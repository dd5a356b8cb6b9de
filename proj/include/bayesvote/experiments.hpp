#pragma once

#include <variant>

#include "bayesvote/axioms.hpp"
#include "bayesvote/models.hpp"

namespace bayesvote {
namespace experiments {

using GroundTruth = std::variant<LinearOrder, Tournament>;

/// Named ground truths: "w5rot" is the rotational tournament on five
/// alternatives (c_i beats c_{i+1} and c_{i+2}, indices mod 5; cyclic,
/// no Condorcet winner); "identity(m)" is the order c1 > ... > cm.
GroundTruth builtin_ground_truth(const std::string& name);

struct ExperimentConfig {
  ModelKind model = ModelKind::condorcet;
  GroundTruth ground_truth;
  std::vector<double> phi_list;
  std::vector<Count> n_list;
  int trials = 1;
  VoteKind vote_kind = VoteKind::tournament;  // condorcet only
  std::vector<Rule> rules{Rule::kemeny, Rule::fb1, Rule::fb2, Rule::g};
  uint64_t seed = 0;
  int workers = 1;

  void validate() const;
};

struct ResultRow {
  ModelKind model;
  double phi;
  Count n;
  int trials;
  // Indexed like the rule-pair and rule lists in the config order.
  std::vector<int> pair_disagreements;
  std::vector<int> truetop_hits;  // -1 entries when the truth has no top
};

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

/// CSV with header model,phi,n,trials,<pair>_disagree,<pair>_ci,...,
/// <rule>_truetop,...; rates with 6 fractional digits, Wilson 95%
/// confidence half-widths in the _ci columns, LF line endings.
std::string to_csv(const ExperimentConfig& cfg,
                   const std::vector<ResultRow>& rows);

/// Wilson score 95% confidence half-width for k successes in n trials.
double wilson_half_width(int k, int n);

}  // namespace experiments
}  // namespace bayesvote
