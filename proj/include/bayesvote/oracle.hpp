#pragma once

#include "bayesvote/rules.hpp"

namespace bayesvote {
namespace oracle {

// Deliberately slow reference implementations in exact rational
// arithmetic. They enumerate the full parameter space vote by vote,
// with no WMG shortcuts, so they cannot share bugs with the rule
// implementations they check.

enum class Space { linear, tournament };

/// Exact posterior probability that each alternative is top-ranked in
/// the ground truth, by enumerating phi^Kendall(P, .) over the whole
/// parameter space. Linear space: values sum to 1. Tournament space:
/// cyclic relations have no top, so the values sum to less than 1.
std::vector<ExactRational> exact_top_posteriors(const Profile& p,
                                                const ExactRational& phi,
                                                Space space);

/// 1 - exact_top_posteriors over the tournament space; the enumeration
/// side of the closed-form risk cross-check.
std::vector<ExactRational> exact_fb2_risk(const Profile& p,
                                          const ExactRational& phi);

struct KemenyEnumeration {
  Count min_distance;
  std::vector<LinearOrder> optimal;
};

/// Exhaustive scan of all m! orders.
KemenyEnumeration kemeny_enumerate(const Profile& p);

}  // namespace oracle
}  // namespace bayesvote
