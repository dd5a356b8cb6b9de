#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bayesvote/axioms.hpp"
#include "bayesvote/models.hpp"
#include "helpers.hpp"

using namespace bayesvote;
using test_helpers::close_rel;

TEST_CASE("log normalizer closed forms") {
  CHECK(log_normalizer({ModelKind::mallows, 0.5, 2}) ==
        doctest::Approx(std::log(1.5)).epsilon(1e-12));
  CHECK(log_normalizer({ModelKind::mallows, 0.5, 3}) ==
        doctest::Approx(std::log(2.625)).epsilon(1e-12));
  CHECK(log_normalizer({ModelKind::condorcet, 0.5, 3}) ==
        doctest::Approx(std::log(3.375)).epsilon(1e-12));
}

TEST_CASE("log normalizer equals brute-force enumeration") {
  for (int m = 1; m <= 5; ++m) {
    for (double phi : {0.1, 0.5, 0.9}) {
      const LinearOrder w = [&] {
        std::vector<int> r(m);
        for (int i = 0; i < m; ++i) r[i] = i;
        return LinearOrder(r);
      }();
      double z1 = 0.0;
      for (const auto& v : all_linear_orders(m)) z1 += std::pow(phi, kendall(v, w));
      CHECK(close_rel(std::exp(log_normalizer({ModelKind::mallows, phi, m})), z1,
                      1e-12));
      double z2 = 0.0;
      for (const auto& t : all_tournaments(m))
        z2 += std::pow(phi, kendall(t, to_tournament(w)));
      CHECK(close_rel(std::exp(log_normalizer({ModelKind::condorcet, phi, m})), z2,
                      1e-12));
    }
  }
}

TEST_CASE("profile log likelihood examples") {
  Profile p(AlternativeSet(2), VoteKind::linear);
  p.add(LinearOrder({0, 1}));
  CHECK(profile_log_likelihood({ModelKind::mallows, 0.5, 2}, LinearOrder({0, 1}), p) ==
        doctest::Approx(std::log(2.0 / 3.0)).epsilon(1e-12));

  const Profile empty(AlternativeSet(3), VoteKind::linear);
  CHECK(profile_log_likelihood({ModelKind::mallows, 0.5, 3}, LinearOrder({0, 1, 2}),
                               empty) == doctest::Approx(0.0));

  Tournament w = to_tournament(LinearOrder({0, 1, 2}));
  Profile q(AlternativeSet(3), VoteKind::tournament);
  q.add(w);
  CHECK(profile_log_likelihood({ModelKind::condorcet, 0.5, 3}, w, q) ==
        doctest::Approx(std::log(1.0 / 3.375)).epsilon(1e-12));
}

TEST_CASE("WMG likelihood route equals the per-vote Kendall route") {
  RandomState rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng.next_below(5));  // up to 6
    const Count n = rng.next_below(21);
    const Profile p = random_linear_profile(m, n, rng);
    const Profile w_src = random_linear_profile(m, 1, rng);
    const LinearOrder w = w_src.order(0);
    const double phi = 0.1 + 0.8 * rng.next_double();

    for (ModelKind kind : {ModelKind::mallows, ModelKind::condorcet}) {
      const RankingModel model{kind, phi, m};
      Count total_kendall = 0;
      for (size_t i = 0; i < p.distinct(); ++i)
        total_kendall += p.count(i) * kendall(p.order(i), w);
      const double per_vote = total_kendall * std::log(phi) -
                              static_cast<double>(n) * log_normalizer(model);
      CHECK(close_rel(profile_log_likelihood(model, w, p), per_vote, 1e-12));
    }
  }
}

TEST_CASE("likelihood is invariant under consistent relabeling") {
  RandomState rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 3;
    const Profile p = random_linear_profile(m, 5, rng);
    const LinearOrder w = random_linear_profile(m, 1, rng).order(0);
    // Relabel with the cyclic shift sigma(a) = a+1 mod m.
    auto shift = [m](const LinearOrder& v) {
      std::vector<int> r;
      for (int a : v.ranking) r.push_back((a + 1) % m);
      return LinearOrder(r);
    };
    Profile p2(AlternativeSet(m), VoteKind::linear);
    for (size_t i = 0; i < p.distinct(); ++i) p2.add(shift(p.order(i)), p.count(i));
    const RankingModel model{ModelKind::mallows, 0.5, m};
    CHECK(profile_log_likelihood(model, w, p) ==
          doctest::Approx(profile_log_likelihood(model, shift(w), p2)).epsilon(1e-12));
  }
}

TEST_CASE("pairwise marginals") {
  Tournament w = to_tournament(LinearOrder({0, 1, 2}));
  CHECK(pairwise_marginal({ModelKind::condorcet, 0.5, 3}, w, 0, 1) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(pairwise_marginal({ModelKind::condorcet, 0.5, 3}, w, 1, 0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(pairwise_marginal({ModelKind::mallows, 0.5, 2}, LinearOrder({0, 1}), 0, 1) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(pairwise_marginal({ModelKind::mallows, 0.5, 3}, LinearOrder({0, 1, 2}), 0, 2) ==
        doctest::Approx(2.0 / 2.625).epsilon(1e-12));
}

TEST_CASE("mallows sampler matches the exact distribution") {
  const LinearOrder w({0, 1, 2});
  const auto exact = test_helpers::mallows_distribution(w, 0.5);
  RandomState rng(101);
  const Count n = 100000;
  const Profile p = sample_mallows(w, 0.5, n, rng);
  CHECK(p.total() == n);

  std::map<std::vector<int>, Count> observed;
  for (size_t i = 0; i < p.distinct(); ++i) observed[p.order(i).ranking] = p.count(i);
  const double stat = test_helpers::chi_square(observed, exact, n);
  CHECK(stat < test_helpers::chi_square_critical_001(5));
  // Spot value: the mode has probability 1/2.625.
  CHECK(std::abs(static_cast<double>(observed[w.ranking]) / n - 1.0 / 2.625) < 0.01);
}

TEST_CASE("mallows sampler at tiny dispersion concentrates on the truth") {
  const LinearOrder w({0, 1, 2});
  RandomState rng(7);
  const Count n = 20000;
  const Profile p = sample_mallows(w, 0.01, n, rng);
  Count hits = 0;
  for (size_t i = 0; i < p.distinct(); ++i)
    if (p.order(i) == w) hits = p.count(i);
  CHECK(std::abs(static_cast<double>(hits) / n - 0.9803) < 0.01);
}

TEST_CASE("samplers return empty profiles for n=0") {
  RandomState rng(1);
  CHECK(sample_mallows(LinearOrder({0, 1, 2}), 0.5, 0, rng).total() == 0);
  const Tournament w = to_tournament(LinearOrder({0, 1, 2}));
  CHECK(sample_condorcet(w, 0.5, 0, VoteKind::tournament, rng).total() == 0);
}

TEST_CASE("condorcet sampler per-pair agreement rate") {
  const Tournament w = to_tournament(LinearOrder({0, 1, 2}));
  RandomState rng(55);
  const Count n = 100000;
  const Profile p = sample_condorcet(w, 0.5, n, VoteKind::tournament, rng);
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      Count agree = 0;
      for (size_t i = 0; i < p.distinct(); ++i)
        if (p.relation(i).wins(a, b) == w.wins(a, b)) agree += p.count(i);
      // Binomial sd at p=2/3, n=1e5 is ~0.0015; allow 5 sigma.
      CHECK(std::abs(static_cast<double>(agree) / n - 2.0 / 3.0) < 0.0075);
    }
  }
}

TEST_CASE("condorcet rejection sampler matches Mallows on acyclic truth") {
  const LinearOrder order({0, 1, 2});
  const Tournament w = to_tournament(order);
  const auto exact = test_helpers::mallows_distribution(order, 0.5);
  RandomState rng(77);
  const Count n = 100000;
  const Profile p = sample_condorcet(w, 0.5, n, VoteKind::linear, rng);
  REQUIRE(p.kind() == VoteKind::linear);
  std::map<std::vector<int>, Count> observed;
  for (size_t i = 0; i < p.distinct(); ++i) observed[p.order(i).ranking] = p.count(i);
  CHECK(test_helpers::chi_square(observed, exact, n) <
        test_helpers::chi_square_critical_001(5));
}

TEST_CASE("sampler streams are reproducible") {
  const LinearOrder w({0, 1, 2, 3});
  RandomState a(99), b(99);
  CHECK(sample_mallows(w, 0.5, 50, a).same_multiset(sample_mallows(w, 0.5, 50, b)));
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(RankingModel(ModelKind::mallows, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(RankingModel(ModelKind::mallows, 0.0, 3), std::invalid_argument);
  const Profile t(AlternativeSet(3), VoteKind::tournament);
  CHECK_THROWS_AS(
      profile_log_likelihood({ModelKind::mallows, 0.5, 3}, LinearOrder({0, 1, 2}), t),
      std::invalid_argument);
}
