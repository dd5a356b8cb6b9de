#include "bayesvote/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bayesvote/io.hpp"

namespace bayesvote {

namespace {

LinearOrder random_order(int m, RandomState& rng) {
  std::vector<int> r(m);
  for (int i = 0; i < m; ++i) r[i] = i;
  for (int i = m - 1; i > 0; --i)
    std::swap(r[i], r[rng.next_below(static_cast<uint64_t>(i) + 1)]);
  return LinearOrder(std::move(r));
}

std::vector<int> random_permutation(int m, RandomState& rng) {
  return random_order(m, rng).ranking;
}

Profile permute_alternatives(const Profile& p, const std::vector<int>& sigma) {
  Profile out(AlternativeSet(p.m()), p.kind());
  for (size_t i = 0; i < p.distinct(); ++i) {
    if (p.kind() == VoteKind::linear) {
      std::vector<int> r;
      r.reserve(p.m());
      for (int a : p.order(i).ranking) r.push_back(sigma[a]);
      out.add(LinearOrder(std::move(r)), p.count(i));
    } else {
      Tournament t(p.m());
      for (int a = 0; a < p.m(); ++a)
        for (int b = a + 1; b < p.m(); ++b)
          if (p.relation(i).wins(a, b))
            t.set_winner(sigma[a], sigma[b]);
          else
            t.set_winner(sigma[b], sigma[a]);
      out.add(t, p.count(i));
    }
  }
  return out;
}

WinnerSet permute_winners(const WinnerSet& w, const std::vector<int>& sigma) {
  WinnerSet out;
  for (int a : w.alternatives) out.alternatives.push_back(sigma[a]);
  std::sort(out.alternatives.begin(), out.alternatives.end());
  return out;
}

// Moves c up by exactly one adjacent position in one copy of the vote
// at `index`.
Profile raise_once(const Profile& p, size_t index, int c) {
  const LinearOrder& v = p.order(index);
  const auto pos = v.positions();
  if (pos[c] == 0) throw std::invalid_argument("alternative already on top");
  LinearOrder raised = v;
  std::swap(raised.ranking[pos[c]], raised.ranking[pos[c] - 1]);

  Profile out(p.alternatives(), VoteKind::linear);
  for (size_t i = 0; i < p.distinct(); ++i) {
    const Count keep = p.count(i) - (i == index ? 1 : 0);
    if (keep > 0) out.add(p.order(i), keep);
  }
  out.add(raised, 1);
  return out;
}

WinnerSet intersect(const WinnerSet& a, const WinnerSet& b) {
  WinnerSet out;
  for (int x : a.alternatives)
    if (b.contains(x)) out.alternatives.push_back(x);
  return out;
}

Profile random_even_wmg_profile(int m, int max_half_weight, RandomState& rng) {
  WeightedMajorityGraph target(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Count w =
          2 * (static_cast<Count>(rng.next_below(2 * max_half_weight + 1)) -
               max_half_weight);
      target.w[a][b] = w;
      target.w[b][a] = -w;
    }
  return mcgarvey(target);
}

}  // namespace

WinnerSet apply_rule(Rule rule, const Profile& p, double phi) {
  switch (rule) {
    case Rule::kemeny:
      return kemeny_winners(p);
    case Rule::fb1:
      return winners(fb1_log_scores(p, phi));
    case Rule::fb2:
      return winners(fb2_risks(p, phi));
    case Rule::g:
      return winners(g_scores(p));
  }
  throw std::invalid_argument("unknown rule");
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kemeny: return "kemeny";
    case Rule::fb1: return "fb1";
    case Rule::fb2: return "fb2";
    case Rule::g: return "g";
  }
  return "?";
}

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::anonymity: return "anonymity";
    case Axiom::neutrality: return "neutrality";
    case Axiom::monotonicity: return "monotonicity";
    case Axiom::majority: return "majority";
    case Axiom::condorcet: return "condorcet";
    case Axiom::consistency: return "consistency";
  }
  return "?";
}

Rule parse_rule(const std::string& name) {
  if (name == "kemeny") return Rule::kemeny;
  if (name == "fb1") return Rule::fb1;
  if (name == "fb2") return Rule::fb2;
  if (name == "g") return Rule::g;
  throw std::invalid_argument("unknown rule '" + name + "'");
}

Axiom parse_axiom(const std::string& name) {
  for (Axiom a : {Axiom::anonymity, Axiom::neutrality, Axiom::monotonicity,
                  Axiom::majority, Axiom::condorcet, Axiom::consistency})
    if (name == axiom_name(a)) return a;
  throw std::invalid_argument("unknown axiom '" + name + "'");
}

std::string AxiomReport::to_text() const {
  std::ostringstream out;
  out << "axiom=" << axiom_name(axiom) << " rule=" << rule_name(rule)
      << " trials=" << trials << " violations=" << violations.size() << "\n";
  int index = 0;
  for (const auto& v : violations) {
    out << "violation " << ++index << ": " << v.description << "\n";
    for (size_t i = 0; i < v.winner_sets.size(); ++i)
      out << "winners[" << i << "]: "
          << io::format_winner_set(v.winner_sets[i],
                                   v.profiles.at(std::min(i, v.profiles.size() - 1))
                                       .alternatives())
          << "\n";
    for (size_t i = 0; i < v.profiles.size(); ++i)
      out << "profile[" << i << "]:\n" << io::write_profile(v.profiles[i]);
  }
  return out.str();
}

Profile random_linear_profile(int m, Count n, RandomState& rng) {
  Profile p(AlternativeSet(m), VoteKind::linear);
  for (Count i = 0; i < n; ++i) p.add(random_order(m, rng), 1);
  return p;
}

AxiomReport check_axiom(Rule rule, Axiom axiom, double phi, int trials,
                        RandomState& rng, const CheckConfig& cfg) {
  AxiomReport report{axiom, rule, 0, {}};

  auto random_profile = [&]() {
    const int m = cfg.m_min +
                  static_cast<int>(rng.next_below(cfg.m_max - cfg.m_min + 1));
    const Count n =
        cfg.n_min + static_cast<Count>(rng.next_below(cfg.n_max - cfg.n_min + 1));
    return random_linear_profile(m, n, rng);
  };

  auto run_single = [&](const Profile& p) {
    const WinnerSet w = apply_rule(rule, p, phi);
    switch (axiom) {
      case Axiom::anonymity: {
        // Expand the multiset into individual votes, shuffle them, and
        // rebuild; the winner set must be unchanged.
        std::vector<LinearOrder> flat;
        for (size_t i = 0; i < p.distinct(); ++i)
          for (Count c = 0; c < p.count(i); ++c) flat.push_back(p.order(i));
        for (size_t i = flat.size(); i > 1; --i)
          std::swap(flat[i - 1], flat[rng.next_below(i)]);
        Profile shuffled(p.alternatives(), VoteKind::linear);
        for (const auto& v : flat) shuffled.add(v, 1);
        const WinnerSet w2 = apply_rule(rule, shuffled, phi);
        if (!(w == w2))
          report.violations.push_back(
              {"winner set changed under agent permutation", {p, shuffled}, {w, w2}});
        break;
      }
      case Axiom::neutrality: {
        const auto sigma = random_permutation(p.m(), rng);
        const Profile permuted = permute_alternatives(p, sigma);
        const WinnerSet expected = permute_winners(w, sigma);
        const WinnerSet actual = apply_rule(rule, permuted, phi);
        if (!(expected == actual))
          report.violations.push_back(
              {"winner set not equivariant under alternative permutation",
               {p, permuted},
               {w, actual}});
        break;
      }
      case Axiom::monotonicity: {
        const int c =
            w.alternatives[rng.next_below(w.alternatives.size())];
        std::vector<size_t> candidates;
        for (size_t i = 0; i < p.distinct(); ++i)
          if (p.order(i).top() != c) candidates.push_back(i);
        if (candidates.empty()) break;  // c already tops every vote
        const size_t pick = candidates[rng.next_below(candidates.size())];
        const Profile raised = raise_once(p, pick, c);
        const WinnerSet w2 = apply_rule(rule, raised, phi);
        if (!w2.contains(c))
          report.violations.push_back(
              {"winner " + p.alternatives().label(c) +
                   " dropped after being raised one position",
               {p, raised},
               {w, w2}});
        break;
      }
      case Axiom::majority: {
        const auto c = majority_candidate(p);
        if (!c) break;
        if (!(w == WinnerSet{{*c}}))
          report.violations.push_back(
              {"majority candidate " + p.alternatives().label(*c) +
                   " is not the unique winner",
               {p},
               {w}});
        break;
      }
      case Axiom::condorcet: {
        const auto c = condorcet_winner(wmg(p));
        if (!c) break;
        if (!(w == WinnerSet{{*c}}))
          report.violations.push_back(
              {"Condorcet winner " + p.alternatives().label(*c) +
                   " is not the unique winner",
               {p},
               {w}});
        break;
      }
      case Axiom::consistency:
        throw std::logic_error("consistency runs on profile pairs");
    }
  };

  auto run_pair = [&](const Profile& p1, const Profile& p2) {
    const WinnerSet w1 = apply_rule(rule, p1, phi);
    const WinnerSet w2 = apply_rule(rule, p2, phi);
    const WinnerSet common = intersect(w1, w2);
    if (common.alternatives.empty()) return;
    const Profile joint = profile_union(p1, p2);
    const WinnerSet wu = apply_rule(rule, joint, phi);
    if (!(wu == common))
      report.violations.push_back(
          {"union winners differ from the intersection", {p1, p2, joint},
           {w1, w2, wu}});
  };

  if (axiom == Axiom::consistency) {
    for (const auto& [p1, p2] : cfg.seed_pairs) {
      ++report.trials;
      run_pair(p1, p2);
    }
    for (int t = 0; t < trials; ++t) {
      ++report.trials;
      const int m =
          cfg.m_min + static_cast<int>(rng.next_below(cfg.m_max - cfg.m_min + 1));
      run_pair(random_even_wmg_profile(m, 2, rng),
               random_even_wmg_profile(m, 2, rng));
    }
  } else {
    for (const auto& p : cfg.seed_profiles) {
      ++report.trials;
      run_single(p);
    }
    for (int t = 0; t < trials; ++t) {
      ++report.trials;
      if (axiom == Axiom::majority) {
        // Plant a majority candidate: strictly more than half of the
        // votes get a chosen alternative moved to the top.
        Profile p = random_profile();
        const int c = static_cast<int>(rng.next_below(p.m()));
        const Count n = p.total();
        Profile planted(p.alternatives(), VoteKind::linear);
        Count moved = 0;
        for (size_t i = 0; i < p.distinct(); ++i) {
          for (Count j = 0; j < p.count(i); ++j) {
            LinearOrder v = p.order(i);
            if (2 * moved <= n) {
              auto it = std::find(v.ranking.begin(), v.ranking.end(), c);
              v.ranking.erase(it);
              v.ranking.insert(v.ranking.begin(), c);
              ++moved;
            }
            planted.add(v, 1);
          }
        }
        run_single(planted);
      } else {
        run_single(random_profile());
      }
    }
  }
  return report;
}

Profile p_star_profile(int m, int k) {
  if (m < 3) throw std::invalid_argument("p_star_profile requires m >= 3");
  if (k < 1) throw std::invalid_argument("p_star_profile requires k >= 1");
  WeightedMajorityGraph target(m);
  auto set = [&](int a, int b, Count w) {
    target.w[a][b] = w;
    target.w[b][a] = -w;
  };
  set(0, 1, 2);  // c over b
  for (int i = 2; i < m; ++i) {
    set(0, i, 2);      // c over c_i
    set(1, i, 2 * k);  // b over c_i
  }
  return mcgarvey(target);
}

std::pair<Profile, Profile> consistency_pair(int k) {
  if (k < 1) throw std::invalid_argument("consistency_pair requires k >= 1");
  // Alternatives: 0=c, 1=b, 2=c3, 3=c4.
  WeightedMajorityGraph t1(4), t2(4);
  auto set = [](WeightedMajorityGraph& g, int a, int b, Count w) {
    g.w[a][b] = w;
    g.w[b][a] = -w;
  };
  set(t1, 0, 2, 2 * k);
  set(t1, 0, 3, 2 * k);
  set(t1, 1, 3, 4 * k);
  set(t2, 0, 2, 2 * k);
  set(t2, 0, 3, 2 * k);
  set(t2, 1, 2, 4 * k);
  return {mcgarvey(t1), mcgarvey(t2)};
}

double closed_form_ratio(RatioKind kind, int m, int k, double phi) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!(phi > 0.0 && phi < 1.0))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  switch (kind) {
    case RatioKind::fb1_condorcet: {
      if (m < 3) throw std::invalid_argument("m must be at least 3");
      double num = 0.0, den = 0.0;
      for (int t = 0; t <= m - 2; ++t) {
        num += std::pow(phi, 2.0 * k * t);
        den += std::pow(phi, 2.0 * t);
      }
      return num / den / (phi * phi);
    }
    case RatioKind::fb2_condorcet: {
      if (m < 3) throw std::invalid_argument("m must be at least 3");
      const double p2 = phi * phi;
      return std::pow((1.0 + std::pow(phi, 2.0 * k)) / (1.0 + p2), m - 2) *
             (1.0 + 1.0 / p2) / (1.0 + p2);
    }
    case RatioKind::fb1_consistency: {
      const double p2k = std::pow(phi, 2.0 * k);
      return 3.0 * (1.0 + p2k * p2k) / (2.0 * (1.0 + p2k + p2k * p2k));
    }
    case RatioKind::fb2_consistency: {
      const double p2k = std::pow(phi, 2.0 * k);
      return 2.0 * (1.0 + p2k * p2k) / ((1.0 + p2k) * (1.0 + p2k));
    }
  }
  throw std::invalid_argument("unknown ratio kind");
}

}  // namespace bayesvote
