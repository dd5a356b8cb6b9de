#include "bayesvote/io.hpp"

#include <fstream>
#include <sstream>

namespace bayesvote {
namespace io {

namespace {

// Strips comments and surrounding whitespace; empty result means the
// line carries nothing.
std::string clean(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

long long parse_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError(line, "trailing characters after integer");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

Profile read_profile(std::istream& in) {
  std::string raw;
  int lineno = 0;
  int m = -1;
  VoteKind kind = VoteKind::linear;
  std::vector<std::string> labels;
  bool header_seen = false;
  Profile profile;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = clean(raw);
    if (line.empty()) continue;

    if (!header_seen) {
      std::istringstream hs(line);
      std::string mfield, kindfield;
      hs >> mfield >> kindfield;
      if (mfield.rfind("m=", 0) != 0 || kindfield.rfind("kind=", 0) != 0)
        throw ParseError(lineno, "expected header 'm=<int> kind=<linear|tournament>'");
      m = static_cast<int>(parse_int(mfield.substr(2), lineno));
      if (m < 1) throw ParseError(lineno, "m must be positive");
      const std::string k = kindfield.substr(5);
      if (k == "linear")
        kind = VoteKind::linear;
      else if (k == "tournament")
        kind = VoteKind::tournament;
      else
        throw ParseError(lineno, "unknown vote kind '" + k + "'");
      header_seen = true;
      continue;
    }

    if (line.rfind("alt ", 0) == 0 || line == "alt") {
      if (!labels.empty() || profile.distinct() > 0)
        throw ParseError(lineno, "alt line must appear once, before any votes");
      std::istringstream as(line.substr(3));
      std::string name;
      while (as >> name) labels.push_back(name);
      if (static_cast<int>(labels.size()) != m)
        throw ParseError(lineno, "alt line must name exactly m alternatives");
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, "expected '<count>: <body>'");
    const long long count = parse_int(clean(line.substr(0, colon)), lineno);
    if (count <= 0) throw ParseError(lineno, "vote count must be positive");
    const std::string body = clean(line.substr(colon + 1));

    if (profile.m() == 0) {
      // First vote: materialize the profile now that labels are fixed.
      profile = Profile(labels.empty() ? AlternativeSet(m)
                                       : AlternativeSet(m, labels),
                        kind);
    }

    try {
      if (kind == VoteKind::linear) {
        std::vector<int> ranking;
        std::string token;
        std::istringstream bs(body);
        while (std::getline(bs, token, '>'))
          ranking.push_back(static_cast<int>(parse_int(clean(token), lineno)) - 1);
        if (static_cast<int>(ranking.size()) != m)
          throw ParseError(lineno, "ranking must list all m alternatives");
        LinearOrder v(std::move(ranking));
        v.validate();
        profile.add(v, count);
      } else {
        if (static_cast<int>(body.size()) != pair_count(m))
          throw ParseError(lineno, "bitstring must have length m(m-1)/2");
        std::vector<uint8_t> bits(body.size());
        for (size_t i = 0; i < body.size(); ++i) {
          if (body[i] != '0' && body[i] != '1')
            throw ParseError(lineno, "bitstring may contain only 0 and 1");
          bits[i] = body[i] == '1';
        }
        profile.add(Tournament(m, std::move(bits)), count);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }

  if (!header_seen) throw ParseError(0, "missing profile header");
  if (profile.m() == 0)
    profile = Profile(labels.empty() ? AlternativeSet(m) : AlternativeSet(m, labels),
                      kind);
  return profile;
}

Profile read_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_profile(in);
}

std::string write_profile(const Profile& p) {
  std::ostringstream out;
  out << "m=" << p.m() << " kind="
      << (p.kind() == VoteKind::linear ? "linear" : "tournament") << "\n";
  if (!p.alternatives().labels.empty()) {
    out << "alt";
    for (const auto& name : p.alternatives().labels) out << " " << name;
    out << "\n";
  }
  for (size_t i = 0; i < p.distinct(); ++i) {
    out << p.count(i) << ": ";
    if (p.kind() == VoteKind::linear) {
      const auto& r = p.order(i).ranking;
      for (size_t j = 0; j < r.size(); ++j)
        out << (j ? ">" : "") << r[j] + 1;
    } else {
      for (uint8_t b : p.relation(i).beats) out << (b ? '1' : '0');
    }
    out << "\n";
  }
  return out.str();
}

WeightedMajorityGraph read_wmg(std::istream& in) {
  std::string raw;
  int lineno = 0;
  int m = -1;
  WeightedMajorityGraph g;
  std::vector<std::vector<char>> listed;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = clean(raw);
    if (line.empty()) continue;
    if (m < 0) {
      if (line.rfind("m=", 0) != 0)
        throw ParseError(lineno, "expected header 'm=<int>'");
      m = static_cast<int>(parse_int(line.substr(2), lineno));
      if (m < 1) throw ParseError(lineno, "m must be positive");
      g = WeightedMajorityGraph(m);
      listed.assign(m, std::vector<char>(m, 0));
      continue;
    }
    std::istringstream ls(line);
    std::string is, js, ws;
    if (!(ls >> is >> js >> ws))
      throw ParseError(lineno, "expected '<i> <j> <w>'");
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing characters");
    const int i = static_cast<int>(parse_int(is, lineno)) - 1;
    const int j = static_cast<int>(parse_int(js, lineno)) - 1;
    const long long w = parse_int(ws, lineno);
    if (i < 0 || i >= m || j < 0 || j >= m)
      throw ParseError(lineno, "alternative index out of range");
    if (i == j) throw ParseError(lineno, "pair must be distinct");
    if (w % 2 != 0) throw ParseError(lineno, "weights must be even");
    if (listed[i][j]) throw ParseError(lineno, "duplicate pair");
    listed[i][j] = listed[j][i] = 1;
    g.w[i][j] = w;
    g.w[j][i] = -w;
  }
  if (m < 0) throw ParseError(0, "missing WMG header");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g.n = std::max(g.n, std::abs(g.w[i][j]));
  return g;
}

WeightedMajorityGraph read_wmg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_wmg(in);
}

std::string write_wmg(const WeightedMajorityGraph& g) {
  std::ostringstream out;
  out << "m=" << g.m() << "\n";
  for (int i = 0; i < g.m(); ++i)
    for (int j = i + 1; j < g.m(); ++j)
      if (g.w[i][j] != 0)
        out << i + 1 << " " << j + 1 << " " << g.w[i][j] << "\n";
  return out.str();
}

ExactRational parse_phi(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      const boost::multiprecision::cpp_int p(text.substr(0, slash));
      const boost::multiprecision::cpp_int q(text.substr(slash + 1));
      if (q <= 0) throw std::invalid_argument("denominator must be positive");
      return ExactRational(p, q);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos)
      return ExactRational(boost::multiprecision::cpp_int(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    // Trim leading zeros: cpp_int would read "0123" as octal.
    const auto nonzero = digits.find_first_not_of('0');
    digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);
    boost::multiprecision::cpp_int den = 1;
    for (size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
    return ExactRational(boost::multiprecision::cpp_int(digits), den);
  } catch (const std::exception&) {
    throw ParseError(0, "cannot parse dispersion '" + text + "'");
  }
}

std::string format_order(const LinearOrder& v, const AlternativeSet& alts) {
  std::string out;
  for (size_t i = 0; i < v.ranking.size(); ++i) {
    if (i) out += ">";
    out += alts.label(v.ranking[i]);
  }
  return out;
}

std::string format_winner_set(const WinnerSet& w, const AlternativeSet& alts) {
  std::string out;
  for (size_t i = 0; i < w.alternatives.size(); ++i) {
    if (i) out += " ";
    out += alts.label(w.alternatives[i]);
  }
  return out;
}

std::string format_rational(const ExactRational& q) {
  std::ostringstream out;
  out << numerator(q);
  if (denominator(q) != 1) out << "/" << denominator(q);
  return out.str();
}

}  // namespace io
}  // namespace bayesvote
