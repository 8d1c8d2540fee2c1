#include "ssbchoice/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "ssbchoice/ssb.hpp"

namespace ssbchoice {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

constexpr std::string_view kKeywords[] = {"alternatives", "approve", "util", "edges", "matrix"};

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && std::string_view(">=,{};:%#").find(c) == std::string_view::npos;
}

bool is_number_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/' || c == '.';
}

// Cursor over one line of input; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t column() {
    skip_space();
    return pos_ + 1;
  }

  std::string_view name() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected an alternative name");
    return text_.substr(start, pos_ - start);
  }

  std::size_t alternative(const Universe& universe) {
    const auto col = column();
    const auto n = name();
    if (auto i = universe.find(n)) return *i;
    throw ParseError(line_, col, "unknown alternative '" + std::string(n) + "'");
  }

  Rational rational() {
    skip_space();
    const auto col = pos_ + 1;
    const auto start = pos_;
    while (pos_ < text_.size() && is_number_char(text_[pos_])) ++pos_;
    const auto token = text_.substr(start, pos_ - start);
    if (token.empty()) fail("expected a number");
    try {
      return parse_rational(token);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_, col, e.what());
    }
  }

  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }

  [[noreturn]] void fail(const std::string& message) { throw ParseError(line_, column(), message); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& message) {
    throw ParseError(line_, col, message);
  }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::string_view text;
};

// Non-blank lines with comments stripped.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      continue;
    out.push_back({number, line});
  }
  return out;
}

Universe parse_header(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "missing 'alternatives:' declaration");
  Cursor cur(lines.front().text, lines.front().number);
  const auto col = cur.column();
  if (cur.name() != "alternatives") cur.fail_at(col, "expected 'alternatives:' declaration");
  cur.expect(':');
  std::vector<std::string> names;
  do {
    const auto ncol = cur.column();
    auto n = std::string(cur.name());
    if (std::find(std::begin(kKeywords), std::end(kKeywords), n) != std::end(kKeywords))
      cur.fail_at(ncol, "'" + n + "' is a reserved word");
    if (std::find(names.begin(), names.end(), n) != names.end())
      cur.fail_at(ncol, "alternative '" + n + "' declared twice");
    names.push_back(std::move(n));
  } while (cur.consume(','));
  if (!cur.at_end()) cur.fail("unexpected text after alternatives");
  return Universe(std::move(names));
}

Agent parse_weak_order(Cursor& cur, const Universe& universe) {
  std::vector<AltSet> tiers(1);
  std::vector<char> seen(universe.size(), 0);
  for (;;) {
    const auto col = cur.column();
    const auto a = cur.alternative(universe);
    if (seen[a]) cur.fail_at(col, "alternative '" + universe.name(a) + "' listed twice");
    seen[a] = 1;
    tiers.back().push_back(a);
    if (cur.consume('>')) tiers.emplace_back();
    else if (!cur.consume('=')) break;
  }
  return weak_order(universe, tiers);
}

Agent parse_approval(Cursor& cur, const Universe& universe) {
  cur.expect('{');
  AltSet approved;
  if (!cur.consume('}')) {
    do {
      const auto col = cur.column();
      const auto a = cur.alternative(universe);
      if (std::find(approved.begin(), approved.end(), a) != approved.end())
        cur.fail_at(col, "alternative '" + universe.name(a) + "' listed twice");
      approved.push_back(a);
    } while (cur.consume(','));
    cur.expect('}');
  }
  return weak_order(universe, std::vector<AltSet>{approved});
}

Agent parse_utilities(Cursor& cur, const Universe& universe) {
  std::vector<Rational> values(universe.size(), Rational(0));
  std::vector<char> seen(universe.size(), 0);
  do {
    const auto col = cur.column();
    const auto a = cur.alternative(universe);
    if (seen[a]) cur.fail_at(col, "alternative '" + universe.name(a) + "' listed twice");
    seen[a] = 1;
    cur.expect('=');
    values[a] = cur.rational();
  } while (cur.consume(','));
  return UtilityVector(universe, std::move(values));
}

Agent parse_edges(Cursor& cur, const Universe& universe) {
  std::vector<std::pair<std::size_t, std::size_t>> strict;
  const auto col = cur.column();
  do {
    const auto ecol = cur.column();
    const auto a = cur.alternative(universe);
    cur.expect('>');
    const auto b = cur.alternative(universe);
    if (a == b) cur.fail_at(ecol, "an alternative cannot be preferred to itself");
    strict.emplace_back(a, b);
  } while (cur.consume(','));
  try {
    return BaseRelation(universe, strict);
  } catch (const std::invalid_argument& e) {
    cur.fail_at(col, e.what());
  }
}

SSBMatrix parse_matrix_rows(Cursor& cur, const Universe& universe) {
  const auto m = universe.size();
  const auto col = cur.column();
  std::vector<Rational> entries;
  for (std::size_t row = 0; row < m; ++row) {
    if (row > 0) cur.expect(';');
    for (std::size_t c = 0; c < m; ++c) entries.push_back(cur.rational());
  }
  try {
    return SSBMatrix(universe, std::move(entries));
  } catch (const std::invalid_argument& e) {
    cur.fail_at(col, e.what());
  }
}

std::string join_names(const Universe& universe) {
  std::string out;
  for (std::size_t a = 0; a < universe.size(); ++a) out += (a ? ", " : "") + universe.name(a);
  return out;
}

}  // namespace

// ----------------------------------------------------------------- ballots

Profile parse_ballots(std::string_view text) {
  const auto lines = significant_lines(text);
  const auto universe = parse_header(lines);
  std::vector<Agent> agents;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Cursor cur(lines[k].text, lines[k].number);
    const auto count_col = cur.column();
    const auto count = cur.rational();
    if (count.get_den() != 1 || count <= 0)
      cur.fail_at(count_col, "ballot count must be a positive integer");
    if (count > 1000000) cur.fail_at(count_col, "ballot count too large");
    cur.expect(':');

    std::optional<Agent> agent;
    const auto body = cur.rest();
    auto starts_with_keyword = [&](std::string_view kw) {
      if (body.substr(0, kw.size()) != kw) return false;
      return body.size() == kw.size() || !is_name_char(body[kw.size()]);
    };
    if (starts_with_keyword("approve")) {
      cur.name();
      agent = parse_approval(cur, universe);
    } else if (starts_with_keyword("util")) {
      cur.name();
      agent = parse_utilities(cur, universe);
    } else if (starts_with_keyword("edges")) {
      cur.name();
      agent = parse_edges(cur, universe);
    } else if (starts_with_keyword("matrix")) {
      cur.name();
      agent = parse_matrix_rows(cur, universe);
    } else {
      agent = parse_weak_order(cur, universe);
    }
    if (!cur.at_end()) cur.fail("unexpected text after ballot");
    for (unsigned long i = 0; i < count.get_num().get_ui(); ++i) agents.push_back(*agent);
  }
  if (agents.empty()) throw ParseError(lines.back().number + 1, 1, "no ballots");
  return Profile(universe, std::move(agents));
}

std::string render_agent(const Agent& agent) {
  struct Visitor {
    std::string operator()(const BaseRelation& r) const {
      const auto& u = r.universe();
      if (auto tiers = r.as_weak_order()) {
        std::string out;
        for (std::size_t t = 0; t < tiers->size(); ++t) {
          if (t) out += " > ";
          for (std::size_t i = 0; i < (*tiers)[t].size(); ++i) out += (i ? " = " : "") + u.name((*tiers)[t][i]);
        }
        return out;
      }
      std::string out = "edges ";
      bool first = true;
      for (auto [a, b] : r.pairs()) {
        out += (first ? "" : ", ") + u.name(a) + ">" + u.name(b);
        first = false;
      }
      return out;
    }
    std::string operator()(const UtilityVector& v) const {
      std::string out = "util ";
      for (std::size_t a = 0; a < v.size(); ++a)
        out += (a ? ", " : "") + v.universe().name(a) + "=" + to_string(v[a]);
      return out;
    }
    std::string operator()(const SSBMatrix& phi) const {
      std::string out = "matrix ";
      for (std::size_t a = 0; a < phi.size(); ++a) {
        if (a) out += "; ";
        for (std::size_t b = 0; b < phi.size(); ++b) out += (b ? " " : "") + to_string(phi(a, b));
      }
      return out;
    }
  };
  return std::visit(Visitor{}, agent);
}

std::string render_ballots(const Profile& profile) {
  std::string out = "alternatives: " + join_names(profile.universe()) + "\n";
  std::size_t i = 0;
  while (i < profile.size()) {
    std::size_t j = i + 1;
    while (j < profile.size() && profile[j] == profile[i]) ++j;
    out += std::to_string(j - i) + ": " + render_agent(profile[i]) + "\n";
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------- matrices

SSBMatrix parse_matrix(std::string_view text) {
  const auto lines = significant_lines(text);
  const auto universe = parse_header(lines);
  const auto m = universe.size();
  if (lines.size() != m + 1)
    throw ParseError(lines.back().number, 1,
                     "expected " + std::to_string(m) + " matrix rows, found " + std::to_string(lines.size() - 1));
  std::vector<Rational> entries;
  for (std::size_t row = 0; row < m; ++row) {
    const auto& line = lines[row + 1];
    Cursor cur(line.text, line.number);
    if (line.text.find(':') != std::string_view::npos) {
      const auto col = cur.column();
      const auto label = cur.name();
      if (label != universe.name(row))
        cur.fail_at(col, "row label '" + std::string(label) + "' does not match '" + universe.name(row) + "'");
      cur.expect(':');
    }
    for (std::size_t c = 0; c < m; ++c) entries.push_back(cur.rational());
    if (!cur.at_end()) cur.fail("too many entries in row");
  }
  try {
    return SSBMatrix(universe, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[1].number, 1, e.what());
  }
}

std::string render_matrix(const SSBMatrix& phi) {
  const auto& u = phi.universe();
  std::string out = "alternatives: " + join_names(u) + "\n";
  for (std::size_t a = 0; a < phi.size(); ++a) {
    out += u.name(a) + ":";
    for (std::size_t b = 0; b < phi.size(); ++b) out += " " + to_string(phi(a, b));
    out += "\n";
  }
  return out;
}

// --------------------------------------------------------------- proposals

ProposalMatrix::ProposalMatrix(Universe universe, std::vector<std::string> items,
                               std::vector<std::vector<Rational>> shares)
    : universe_(std::move(universe)), items_(std::move(items)), shares_(std::move(shares)) {
  if (items_.empty() || items_.size() != shares_.size())
    throw std::invalid_argument("proposal matrix needs one share row per budget item");
  for (const auto& row : shares_) {
    if (row.size() != universe_.size()) throw std::invalid_argument("share row has wrong length");
    for (const auto& s : row)
      if (s < 0) throw std::invalid_argument("negative budget share");
  }
  for (std::size_t a = 0; a < universe_.size(); ++a) {
    Rational total = 0;
    for (const auto& row : shares_) total += row[a];
    if (total != 1)
      throw std::invalid_argument("proposal '" + universe_.name(a) + "' sums to " + to_string(total) +
                                  ", not 1");
  }
}

ProposalMatrix parse_proposals(std::string_view text) {
  const auto lines = significant_lines(text);
  const auto universe = parse_header(lines);
  std::vector<std::string> items;
  std::vector<std::vector<Rational>> shares;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) throw ParseError(line.number, 1, "expected 'item: shares...'");
    auto label = line.text.substr(0, colon);
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) label.remove_prefix(1);
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.remove_suffix(1);
    if (label.empty()) throw ParseError(line.number, 1, "missing budget item name");
    Cursor cur(line.text.substr(colon + 1), line.number);
    std::vector<Rational> row;
    for (std::size_t a = 0; a < universe.size(); ++a) {
      Rational v = cur.rational();
      if (cur.consume('%')) v /= 100;
      row.push_back(v);
    }
    if (!cur.at_end()) cur.fail("too many entries");
    items.emplace_back(label);
    shares.push_back(std::move(row));
  }
  try {
    return ProposalMatrix(universe, std::move(items), std::move(shares));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines.back().number, 1, e.what());
  }
}

std::vector<Rational> budget_allocation(const ProposalMatrix& proposals, const Lottery& p) {
  const auto& pu = proposals.universe();
  const auto& lu = p.universe();
  if (pu.size() != lu.size())
    throw std::invalid_argument("proposal matrix has " + std::to_string(pu.size()) + " columns for " +
                                std::to_string(lu.size()) + " alternatives");
  std::vector<std::size_t> column(lu.size());
  for (std::size_t a = 0; a < lu.size(); ++a) {
    auto c = pu.find(lu.name(a));
    if (!c) throw std::invalid_argument("no proposal column for '" + lu.name(a) + "'");
    column[a] = *c;
  }
  std::vector<Rational> out;
  for (const auto& row : proposals.shares()) {
    Rational v = 0;
    for (std::size_t a = 0; a < lu.size(); ++a) v += row[column[a]] * p[a];
    out.push_back(v);
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ssbchoice
