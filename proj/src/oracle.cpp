#include "bayesvote/oracle.hpp"

#include "bayesvote/models.hpp"

namespace bayesvote {
namespace oracle {

namespace {

using boost::multiprecision::cpp_int;

// phi^k for a nonnegative integer exponent.
ExactRational phi_pow(const ExactRational& phi, Count k) {
  using boost::multiprecision::pow;
  return ExactRational(pow(numerator(phi), static_cast<unsigned>(k)),
                       pow(denominator(phi), static_cast<unsigned>(k)));
}

// Total Kendall distance from the profile to the candidate parameter,
// summed vote by vote (no WMG shortcut).
Count profile_distance(const Profile& p, const Tournament& w) {
  Count d = 0;
  for (size_t i = 0; i < p.distinct(); ++i)
    d += p.count(i) * kendall(p.vote_as_tournament(i), w);
  return d;
}

}  // namespace

std::vector<ExactRational> exact_top_posteriors(const Profile& p,
                                                const ExactRational& phi,
                                                Space space) {
  if (!(phi > 0 && phi < 1))
    throw std::invalid_argument("dispersion must lie in (0,1)");
  const int m = p.m();
  std::vector<ExactRational> mass(m, 0);
  ExactRational total = 0;

  if (space == Space::linear) {
    if (m > 7) throw SizeLimitError("linear-space oracle requires m <= 7");
    for (const auto& v : all_linear_orders(m)) {
      const ExactRational weight = phi_pow(phi, profile_distance(p, to_tournament(v)));
      total += weight;
      mass[v.top()] += weight;
    }
  } else {
    if (m > 5) throw SizeLimitError("tournament-space oracle requires m <= 5");
    for (const auto& t : all_tournaments(m)) {
      const ExactRational weight = phi_pow(phi, profile_distance(p, t));
      total += weight;
      for (int c = 0; c < m; ++c) {
        bool tops = true;
        for (int b = 0; b < m && tops; ++b)
          if (b != c && !t.wins(c, b)) tops = false;
        if (tops) {
          mass[c] += weight;
          break;  // at most one top per relation
        }
      }
    }
  }

  for (auto& q : mass) q /= total;
  return mass;
}

std::vector<ExactRational> exact_fb2_risk(const Profile& p,
                                          const ExactRational& phi) {
  auto post = exact_top_posteriors(p, phi, Space::tournament);
  for (auto& q : post) q = 1 - q;
  return post;
}

KemenyEnumeration kemeny_enumerate(const Profile& p) {
  const int m = p.m();
  if (m > 7) throw SizeLimitError("Kemeny enumeration requires m <= 7");
  KemenyEnumeration result{-1, {}};
  for (const auto& v : all_linear_orders(m)) {
    const Count d = profile_distance(p, to_tournament(v));
    if (result.min_distance < 0 || d < result.min_distance) {
      result.min_distance = d;
      result.optimal.clear();
    }
    if (d == result.min_distance) result.optimal.push_back(v);
  }
  return result;
}

}  // namespace oracle
}  // namespace bayesvote
