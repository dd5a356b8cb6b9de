#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "bayesvote/core.hpp"

namespace bayesvote {

using ExactRational = boost::multiprecision::cpp_rational;

enum class ScoreKind {
  kemeny_forced_top,  // integer, minimize
  fb1_log_score,      // log posterior mass, maximize
  fb2_risk,           // Bayesian risk in [0,1], minimize
  g_incoming,         // integer incoming weight, minimize
};

enum class Orientation { minimize, maximize };

/// Per-alternative scores from which co-winner sets are derived.
/// For fb2 the `values` field holds the risks, and `log_survival`
/// carries log(1 - risk); winner extraction compares in the log domain
/// so that ties remain meaningful when all risks are close to 1.
struct ScoreTable {
  ScoreKind kind;
  Orientation orientation;
  std::vector<double> values;
  std::vector<double> log_survival;  // fb2 only

  int m() const { return static_cast<int>(values.size()); }
};

struct WinnerSet {
  std::vector<int> alternatives;  // nonempty, sorted

  bool operator==(const WinnerSet& o) const = default;
  bool contains(int a) const;
};

/// For each alternative c, the minimum total Kendall distance between
/// the profile and a linear order with c on top, by dynamic programming
/// over subsets of alternatives still to be placed. O(2^m m^2); m <= 24.
ScoreTable kemeny_forced_top_scores(const Profile& p);

/// Fishburn winners: tops of the Kemeny-optimal orders.
WinnerSet kemeny_winners(const Profile& p);

struct KemenyResult {
  LinearOrder order;     // one optimal order (lexicographically first)
  Count min_distance;    // its total Kendall distance from the profile
  Count optimal_count;   // number of co-optimal linear orders
};

KemenyResult kemeny_optimal_order(const Profile& p);

/// log sum over linear orders topping c of phi^Kendall(P, .), by the
/// same subset DP accumulated with log-sum-exp. Maximizing this score
/// minimizes the Bayesian risk of the Mallows-model estimator. m <= 20.
ScoreTable fb1_log_scores(const Profile& p, double phi);

/// Posterior probability that each alternative tops the ground truth,
/// from fb1 scores.
std::vector<double> fb1_top_posteriors(const Profile& p, double phi);

/// Bayesian risk of the Condorcet-model estimator, closed form:
/// risk(c) = 1 - prod_{b != c} 1/(1 + phi^w(c,b)), evaluated in the
/// log domain. Polynomial in m and n.
ScoreTable fb2_risks(const Profile& p, double phi);

/// Same closed form in exact rational arithmetic.
std::vector<ExactRational> fb2_risks_exact(const Profile& p,
                                           const ExactRational& phi);

WinnerSet fb2_winners_exact(const Profile& p, const ExactRational& phi);

/// Total positive incoming margin per alternative; the phi-free
/// surrogate for fb2.
ScoreTable g_scores(const Profile& p);

/// All alternatives within relative tolerance 1e-9 of the best score
/// (exact comparison for the integer-valued tables).
WinnerSet winners(const ScoreTable& table);

}  // namespace bayesvote
