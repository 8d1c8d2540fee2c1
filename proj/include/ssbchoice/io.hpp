#pragma once

// Text formats: ballot files, SSB matrix files and budget proposal files.
//
// Ballot file:
//
//   # comment
//   alternatives: A, B, C, D
//   25: A > B > C > D          weak order; unlisted alternatives tie at the bottom
//   3: A = B > C
//   2: approve {A, B}          dichotomous: approved set above the rest
//   1: util A=1, B=1/3, C=0    vNM utilities; unlisted alternatives get 0
//   1: edges A>B, B>C, C>A     arbitrary strict relation
//   1: matrix 0 1; -1 0        general SSB matrix, rows separated by ';'
//
// Matrix file: an `alternatives:` line followed by one row per alternative,
// optionally labeled ("A: 0 40 -10 80").
//
// Proposal file: an `alternatives:` line followed by one line per budget
// item, "Education: 40% 30% 20% 10%"; entries are rationals or percentages
// and every column must sum to exactly one.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssbchoice/core_model.hpp"

namespace ssbchoice {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Agents are expanded by count in file order.
Profile parse_ballots(std::string_view text);

/// Canonical ballot text: runs of identical consecutive agents are merged
/// into one counted line. Re-parses to an equal profile.
std::string render_ballots(const Profile& profile);

/// Text for one agent's ballot body (without the count).
std::string render_agent(const Agent& agent);

SSBMatrix parse_matrix(std::string_view text);
std::string render_matrix(const SSBMatrix& phi);

/// Budget items (rows) by proposals (columns); every column sums to one.
class ProposalMatrix {
 public:
  ProposalMatrix(Universe universe, std::vector<std::string> items,
                 std::vector<std::vector<Rational>> shares);

  const Universe& universe() const { return universe_; }
  const std::vector<std::string>& items() const { return items_; }
  /// shares()[item][alternative].
  const std::vector<std::vector<Rational>>& shares() const { return shares_; }

 private:
  Universe universe_;
  std::vector<std::string> items_;
  std::vector<std::vector<Rational>> shares_;
};

ProposalMatrix parse_proposals(std::string_view text);

/// P * p, matching proposals to lottery entries by alternative name.
std::vector<Rational> budget_allocation(const ProposalMatrix& proposals, const Lottery& p);

/// Whole file contents; throws std::runtime_error if unreadable.
std::string read_text_file(const std::string& path);

}  // namespace ssbchoice
