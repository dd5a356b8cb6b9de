#pragma once

#include <utility>

#include "bayesvote/rng.hpp"
#include "bayesvote/rules.hpp"

namespace bayesvote {

enum class Rule { kemeny, fb1, fb2, g };
enum class Axiom {
  anonymity,
  neutrality,
  monotonicity,
  majority,
  condorcet,
  consistency,
};

WinnerSet apply_rule(Rule rule, const Profile& p, double phi);

const char* rule_name(Rule rule);
const char* axiom_name(Axiom axiom);
Rule parse_rule(const std::string& name);
Axiom parse_axiom(const std::string& name);

/// One falsification witness: the profile(s) involved and the winner
/// sets that contradict the axiom. Re-running the rule on the stored
/// profiles reproduces the violation.
struct AxiomViolation {
  std::string description;
  std::vector<Profile> profiles;
  std::vector<WinnerSet> winner_sets;
};

struct AxiomReport {
  Axiom axiom;
  Rule rule;
  int trials = 0;
  std::vector<AxiomViolation> violations;

  std::string to_text() const;
};

/// Profile generation knobs for randomized falsification, plus
/// optional seed instances always checked before the random trials.
struct CheckConfig {
  int m_min = 3;
  int m_max = 5;
  Count n_min = 1;
  Count n_max = 9;
  std::vector<Profile> seed_profiles;
  std::vector<std::pair<Profile, Profile>> seed_pairs;  // consistency only
};

AxiomReport check_axiom(Rule rule, Axiom axiom, double phi, int trials,
                        RandomState& rng, const CheckConfig& cfg = {});

/// The Condorcet-criterion counterexample family: a McGarvey profile
/// whose WMG gives c (index 0) margin 2 over everything while b
/// (index 1) holds margin 2k over the rest. c is always the Condorcet
/// winner, yet for suitable (m, k, phi) neither fb1 nor fb2 selects it.
Profile p_star_profile(int m, int k);

/// The consistency counterexample pair on {c, b, c3, c4}: both
/// profiles elect c alone, while their union is symmetric in c and b.
std::pair<Profile, Profile> consistency_pair(int k);

enum class RatioKind {
  fb1_condorcet,
  fb2_condorcet,
  fb1_consistency,
  fb2_consistency,
};

/// Closed-form posterior/survival ratio of c against b on the
/// counterexample profiles; a value below 1 certifies that the
/// criterion fails there. m is used by the condorcet kinds only.
double closed_form_ratio(RatioKind kind, int m, int k, double phi);

/// Random linear profile with the configured size distribution
/// (shared by the axiom checker and tests).
Profile random_linear_profile(int m, Count n, RandomState& rng);

}  // namespace bayesvote
