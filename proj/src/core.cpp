#include "bayesvote/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bayesvote {

std::string AlternativeSet::label(int i) const {
  if (i < 0 || i >= m) throw std::invalid_argument("alternative index out of range");
  if (!labels.empty()) return labels[i];
  return "c" + std::to_string(i + 1);
}

void AlternativeSet::validate() const {
  if (m < 1) throw std::invalid_argument("alternative set must be nonempty");
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != m)
      throw std::invalid_argument("label count does not match m");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (static_cast<int>(seen.size()) != m)
      throw std::invalid_argument("labels must be distinct");
  }
}

std::vector<int> LinearOrder::positions() const {
  std::vector<int> pos(ranking.size());
  for (size_t r = 0; r < ranking.size(); ++r) pos[ranking[r]] = static_cast<int>(r);
  return pos;
}

void LinearOrder::validate() const {
  const int n = m();
  std::vector<char> seen(n, 0);
  for (int a : ranking) {
    if (a < 0 || a >= n || seen[a]) throw std::invalid_argument("ranking is not a permutation");
    seen[a] = 1;
  }
}

Tournament::Tournament(int m, std::vector<uint8_t> bits)
    : num_alternatives(m), beats(std::move(bits)) {
  if (static_cast<int>(beats.size()) != pair_count(m))
    throw std::invalid_argument("tournament bit vector has wrong length");
}

void Tournament::set_winner(int a, int b) {
  if (a == b) throw std::invalid_argument("tournament pair must be distinct");
  if (a < b)
    beats[pair_index(num_alternatives, a, b)] = 1;
  else
    beats[pair_index(num_alternatives, b, a)] = 0;
}

std::vector<int> Tournament::out_degrees() const {
  std::vector<int> deg(num_alternatives, 0);
  for (int i = 0; i < num_alternatives; ++i)
    for (int j = i + 1; j < num_alternatives; ++j)
      ++deg[wins(i, j) ? i : j];
  return deg;
}

std::optional<LinearOrder> Tournament::as_linear_order() const {
  const auto deg = out_degrees();
  std::vector<int> order(num_alternatives);
  std::vector<char> used(num_alternatives, 0);
  for (int a = 0; a < num_alternatives; ++a) {
    const int rank = num_alternatives - 1 - deg[a];
    if (rank < 0 || rank >= num_alternatives || used[rank]) return std::nullopt;
    used[rank] = 1;
    order[rank] = a;
  }
  return LinearOrder(std::move(order));
}

Tournament to_tournament(const LinearOrder& v) {
  const int m = v.m();
  const auto pos = v.positions();
  Tournament t(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      t.beats[pair_index(m, i, j)] = pos[i] < pos[j] ? 1 : 0;
  return t;
}

int kendall(const Tournament& x, const Tournament& y) {
  if (x.m() != y.m())
    throw std::invalid_argument("kendall: mismatched alternative sets");
  int d = 0;
  for (size_t i = 0; i < x.beats.size(); ++i) d += x.beats[i] != y.beats[i];
  return d;
}

int kendall(const LinearOrder& x, const LinearOrder& y) {
  return kendall(to_tournament(x), to_tournament(y));
}

int kendall(const LinearOrder& x, const Tournament& y) {
  return kendall(to_tournament(x), y);
}

int kendall(const Tournament& x, const LinearOrder& y) {
  return kendall(x, to_tournament(y));
}

void Profile::add(const LinearOrder& v, Count mult) {
  if (kind_ != VoteKind::linear)
    throw std::invalid_argument("cannot add a linear vote to a tournament profile");
  if (v.m() != alts_.m)
    throw std::invalid_argument("vote does not match the alternative set");
  if (mult <= 0) throw std::invalid_argument("vote multiplicity must be positive");
  v.validate();
  for (size_t i = 0; i < orders_.size(); ++i) {
    if (orders_[i] == v) {
      counts_[i] += mult;
      return;
    }
  }
  orders_.push_back(v);
  counts_.push_back(mult);
}

void Profile::add(const Tournament& v, Count mult) {
  if (kind_ != VoteKind::tournament)
    throw std::invalid_argument("cannot add a tournament vote to a linear profile");
  if (v.m() != alts_.m)
    throw std::invalid_argument("vote does not match the alternative set");
  if (mult <= 0) throw std::invalid_argument("vote multiplicity must be positive");
  for (size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i] == v) {
      counts_[i] += mult;
      return;
    }
  }
  relations_.push_back(v);
  counts_.push_back(mult);
}

Count Profile::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

Tournament Profile::vote_as_tournament(size_t i) const {
  if (kind_ == VoteKind::tournament) return relations_.at(i);
  return to_tournament(orders_.at(i));
}

bool Profile::same_multiset(const Profile& other) const {
  if (m() != other.m() || kind_ != other.kind_ || total() != other.total())
    return false;
  std::map<std::vector<uint8_t>, Count> a, b;
  for (size_t i = 0; i < distinct(); ++i)
    a[vote_as_tournament(i).beats] += counts_[i];
  for (size_t i = 0; i < other.distinct(); ++i)
    b[other.vote_as_tournament(i).beats] += other.counts_[i];
  return a == b;
}

void WeightedMajorityGraph::validate() const {
  const int mm = m();
  for (int a = 0; a < mm; ++a) {
    if (static_cast<int>(w[a].size()) != mm)
      throw std::invalid_argument("margin matrix is not square");
    if (w[a][a] != 0) throw std::invalid_argument("diagonal margin must be zero");
    for (int b = 0; b < mm; ++b) {
      if (w[a][b] != -w[b][a])
        throw std::invalid_argument("margin matrix must be antisymmetric");
      if (a != b) {
        if (std::abs(w[a][b]) > n)
          throw std::invalid_argument("margin exceeds vote count");
        if (((w[a][b] - n) % 2) != 0)
          throw std::invalid_argument("margin parity does not match vote count");
      }
    }
  }
}

WeightedMajorityGraph wmg(const Profile& p) {
  const int m = p.m();
  WeightedMajorityGraph g(m);
  g.n = p.total();
  for (size_t v = 0; v < p.distinct(); ++v) {
    const Tournament t = p.vote_as_tournament(v);
    const Count c = p.count(v);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (t.wins(i, j)) {
          g.w[i][j] += c;
          g.w[j][i] -= c;
        } else {
          g.w[j][i] += c;
          g.w[i][j] -= c;
        }
      }
    }
  }
  return g;
}

Profile profile_union(const Profile& p1, const Profile& p2) {
  if (!p1.alternatives().compatible(p2.alternatives()))
    throw std::invalid_argument("union: mismatched alternative sets");
  if (p1.kind() != p2.kind())
    throw std::invalid_argument("union: mismatched vote kinds");
  Profile out = p1;
  for (size_t i = 0; i < p2.distinct(); ++i) {
    if (p2.kind() == VoteKind::linear)
      out.add(p2.order(i), p2.count(i));
    else
      out.add(p2.relation(i), p2.count(i));
  }
  return out;
}

Profile mcgarvey(const WeightedMajorityGraph& target) {
  const int m = target.m();
  Profile p(AlternativeSet(m), VoteKind::linear);
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (target.w[a][b] != -target.w[b][a])
        throw std::invalid_argument("mcgarvey: target is not antisymmetric");
      Count w = target.w[a][b];
      if (w == 0) continue;
      if (w % 2 != 0) throw std::invalid_argument("mcgarvey: target weight is odd");
      const int winner = w > 0 ? a : b;
      const int loser = w > 0 ? b : a;
      const Count pairs = std::abs(w) / 2;
      // [winner, loser, rest ascending]
      std::vector<int> v1{winner, loser};
      for (int x = 0; x < m; ++x)
        if (x != winner && x != loser) v1.push_back(x);
      // [rest descending, winner, loser]
      std::vector<int> v2;
      for (int x = m - 1; x >= 0; --x)
        if (x != winner && x != loser) v2.push_back(x);
      v2.push_back(winner);
      v2.push_back(loser);
      p.add(LinearOrder(std::move(v1)), pairs);
      p.add(LinearOrder(std::move(v2)), pairs);
    }
  }
  return p;
}

std::optional<int> condorcet_winner(const WeightedMajorityGraph& g) {
  const int m = g.m();
  for (int a = 0; a < m; ++a) {
    bool all = true;
    for (int b = 0; b < m && all; ++b)
      if (b != a && g.w[a][b] <= 0) all = false;
    if (all) return a;
  }
  return std::nullopt;
}

std::optional<int> majority_candidate(const Profile& p) {
  if (p.kind() != VoteKind::linear)
    throw std::invalid_argument("majority candidate is defined for linear profiles only");
  const Count n = p.total();
  std::vector<Count> tops(p.m(), 0);
  for (size_t i = 0; i < p.distinct(); ++i) tops[p.order(i).top()] += p.count(i);
  for (int a = 0; a < p.m(); ++a)
    if (2 * tops[a] > n) return a;
  return std::nullopt;
}

}  // namespace bayesvote
