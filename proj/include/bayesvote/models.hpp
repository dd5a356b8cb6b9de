#pragma once

#include "bayesvote/core.hpp"
#include "bayesvote/rng.hpp"

namespace bayesvote {

enum class ModelKind { mallows, condorcet };

/// A ranking model with fixed dispersion: Mallows over linear orders,
/// or the Condorcet model over all (possibly cyclic) tournaments.
struct RankingModel {
  ModelKind kind;
  double phi;  // dispersion, 0 < phi < 1
  int m;

  RankingModel(ModelKind kind_, double phi_, int m_)
      : kind(kind_), phi(phi_), m(m_) {
    if (!(phi > 0.0 && phi < 1.0))
      throw std::invalid_argument("dispersion must lie in (0,1)");
    if (m < 1) throw std::invalid_argument("m must be positive");
  }
};

/// log of the normalization constant Z. For Mallows this is the
/// product formula over insertion levels; for the Condorcet model every
/// pair contributes (1+phi) independently. Both are independent of the
/// ground truth.
double log_normalizer(const RankingModel& model);

/// Exact log Pr(P | W), computed from the weighted majority graph: the
/// total Kendall distance from P to W is sum over pairs (a>b in W) of
/// (n - w_P(a,b))/2.
double profile_log_likelihood(const RankingModel& model, const Tournament& w,
                              const Profile& p);
double profile_log_likelihood(const RankingModel& model, const LinearOrder& w,
                              const Profile& p);

/// Probability that a single random vote ranks a above b. Mallows uses
/// exact enumeration over all m! orders (m <= 9); the Condorcet model
/// factorizes per pair: 1/(1+phi) when a beats b in W.
double pairwise_marginal(const RankingModel& model, const Tournament& w,
                         int a, int b);
double pairwise_marginal(const RankingModel& model, const LinearOrder& w,
                         int a, int b);

/// n i.i.d. Mallows draws by repeated insertion: the i-th alternative
/// of W goes to position j from the top (1-based) of the partial
/// ranking with probability phi^(i-j) / (1 + phi + ... + phi^(i-1)).
Profile sample_mallows(const LinearOrder& w, double phi, Count n,
                       RandomState& rng);

/// n i.i.d. Condorcet-model draws. Tournament kind: each pair agrees
/// with W independently with probability 1/(1+phi). Linear kind:
/// rejection -- tournaments are drawn as above and only acyclic ones
/// are kept; attempts are capped at 10^4 per vote.
Profile sample_condorcet(const Tournament& w, double phi, Count n,
                         VoteKind kind, RandomState& rng);

/// All m! linear orders (test/oracle helper; m <= 9).
std::vector<LinearOrder> all_linear_orders(int m);

/// All 2^(m(m-1)/2) tournaments (m <= 6).
std::vector<Tournament> all_tournaments(int m);

}  // namespace bayesvote
