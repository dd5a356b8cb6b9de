#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bayesvote {

using Count = long long;

/// Thrown when an operation is asked to run past its hard size limit
/// (e.g. factorial enumeration for large m). The CLI maps this to a
/// distinct exit code.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The set of alternatives c1..cm. Labels are optional display names;
/// internally everything is a 0-based index.
struct AlternativeSet {
  int m = 0;
  std::vector<std::string> labels;  // empty, or exactly m distinct names

  AlternativeSet() = default;
  explicit AlternativeSet(int m_) : m(m_) { validate(); }
  AlternativeSet(int m_, std::vector<std::string> labels_)
      : m(m_), labels(std::move(labels_)) {
    validate();
  }

  std::string label(int i) const;
  void validate() const;

  // Two sets are compatible when they have the same size; labels are a
  // display concern only.
  bool compatible(const AlternativeSet& other) const { return m == other.m; }
};

inline int pair_count(int m) { return m * (m - 1) / 2; }

/// Index of the unordered pair {i,j}, i<j, in lexicographic order over
/// all pairs of 0..m-1.
inline int pair_index(int m, int i, int j) {
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

/// A strict total ranking, top to bottom.
struct LinearOrder {
  std::vector<int> ranking;

  LinearOrder() = default;
  explicit LinearOrder(std::vector<int> r) : ranking(std::move(r)) {}

  int m() const { return static_cast<int>(ranking.size()); }
  int top() const { return ranking.at(0); }

  /// positions[a] = rank of alternative a (0 = top).
  std::vector<int> positions() const;

  void validate() const;  // must be a permutation of 0..m-1

  bool operator==(const LinearOrder& o) const = default;
  bool operator<(const LinearOrder& o) const { return ranking < o.ranking; }
};

/// An irreflexive, antisymmetric, total binary relation, stored as one
/// bit per unordered pair: beats[pair_index(m,i,j)] is true when i
/// beats j. Completeness and antisymmetry hold by representation.
struct Tournament {
  int num_alternatives = 0;
  std::vector<uint8_t> beats;

  Tournament() = default;
  explicit Tournament(int m)
      : num_alternatives(m), beats(pair_count(m), 0) {}
  Tournament(int m, std::vector<uint8_t> bits);

  int m() const { return num_alternatives; }

  bool wins(int a, int b) const {
    if (a < b) return beats[pair_index(num_alternatives, a, b)] != 0;
    return beats[pair_index(num_alternatives, b, a)] == 0;
  }
  void set_winner(int a, int b);

  std::vector<int> out_degrees() const;

  /// A tournament is a linear order iff its out-degrees are all
  /// distinct; in that case sorting by descending out-degree recovers
  /// the order.
  std::optional<LinearOrder> as_linear_order() const;

  bool operator==(const Tournament& o) const = default;
  bool operator<(const Tournament& o) const {
    return beats < o.beats;
  }
};

Tournament to_tournament(const LinearOrder& v);

/// Kendall-tau distance: the number of unordered pairs the two
/// relations order differently.
int kendall(const Tournament& x, const Tournament& y);
int kendall(const LinearOrder& x, const LinearOrder& y);
int kendall(const LinearOrder& x, const Tournament& y);
int kendall(const Tournament& x, const LinearOrder& y);

enum class VoteKind { linear, tournament };

/// A multiset of votes over a shared alternative set, compressed as
/// (vote, multiplicity) pairs. All votes share one kind.
class Profile {
 public:
  Profile() = default;
  Profile(AlternativeSet alts, VoteKind kind)
      : alts_(std::move(alts)), kind_(kind) {}

  const AlternativeSet& alternatives() const { return alts_; }
  VoteKind kind() const { return kind_; }
  int m() const { return alts_.m; }

  void add(const LinearOrder& v, Count mult = 1);
  void add(const Tournament& v, Count mult = 1);

  size_t distinct() const { return counts_.size(); }
  Count total() const;

  const LinearOrder& order(size_t i) const { return orders_.at(i); }
  const Tournament& relation(size_t i) const { return relations_.at(i); }
  Tournament vote_as_tournament(size_t i) const;
  Count count(size_t i) const { return counts_.at(i); }

  const std::vector<LinearOrder>& orders() const { return orders_; }
  const std::vector<Tournament>& relations() const { return relations_; }
  const std::vector<Count>& counts() const { return counts_; }

  /// Multiset equality (vote order irrelevant).
  bool same_multiset(const Profile& other) const;

 private:
  AlternativeSet alts_;
  VoteKind kind_ = VoteKind::linear;
  std::vector<LinearOrder> orders_;      // linear kind
  std::vector<Tournament> relations_;    // tournament kind
  std::vector<Count> counts_;
};

/// Antisymmetric pairwise-margin matrix w(a,b) = #(a>b) - #(b>a).
struct WeightedMajorityGraph {
  Count n = 0;
  std::vector<std::vector<Count>> w;

  WeightedMajorityGraph() = default;
  explicit WeightedMajorityGraph(int m)
      : n(0), w(m, std::vector<Count>(m, 0)) {}

  int m() const { return static_cast<int>(w.size()); }
  void validate() const;
};

WeightedMajorityGraph wmg(const Profile& p);

Profile profile_union(const Profile& p1, const Profile& p2);

/// Builds a linear-order profile realizing the target margins (all
/// even). Each positive edge (a,b) contributes w/2 canceling vote
/// pairs { [a,b,rest ascending], [rest descending,a,b] }. The n field
/// of the target is ignored.
Profile mcgarvey(const WeightedMajorityGraph& target);

/// The unique alternative with positive margin against every other,
/// if any.
std::optional<int> condorcet_winner(const WeightedMajorityGraph& g);

/// The alternative top-ranked in strictly more than half of the votes,
/// if any. Linear profiles only.
std::optional<int> majority_candidate(const Profile& p);

}  // namespace bayesvote
