#pragma once

#include <iosfwd>
#include <string>

#include "bayesvote/rules.hpp"

namespace bayesvote {
namespace io {

/// Thrown on malformed input; `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Profile file format:
//   m=<int> kind=<linear|tournament>
//   alt <name1> ... <namem>            (optional)
//   <count>: <body>
// where <body> is "i1>i2>...>im" with 1-based indices for linear votes,
// or a bitstring of length m(m-1)/2 over lexicographic pairs (i<j), '1'
// meaning i beats j, for tournament votes. '#' starts a comment.
Profile read_profile(std::istream& in);
Profile read_profile_file(const std::string& path);
std::string write_profile(const Profile& p);

// WMG file format:
//   m=<int>
//   <i> <j> <w>        (1-based, i != j, even w; unlisted pairs are 0)
WeightedMajorityGraph read_wmg(std::istream& in);
WeightedMajorityGraph read_wmg_file(const std::string& path);
std::string write_wmg(const WeightedMajorityGraph& g);

/// Dispersion given as a decimal ("0.5") or a ratio ("1/2"); both parse
/// to an exact rational, so exact mode works either way.
ExactRational parse_phi(const std::string& text);

std::string format_order(const LinearOrder& v, const AlternativeSet& alts);
std::string format_winner_set(const WinnerSet& w, const AlternativeSet& alts);
std::string format_rational(const ExactRational& q);

}  // namespace io
}  // namespace bayesvote
