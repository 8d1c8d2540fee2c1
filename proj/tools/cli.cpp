#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ssbchoice/aggregation.hpp"
#include "ssbchoice/axiom_lab.hpp"
#include "ssbchoice/io.hpp"
#include "ssbchoice/lottery_solver.hpp"
#include "ssbchoice/random.hpp"
#include "ssbchoice/ssb.hpp"

namespace ssbchoice::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  bool json = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t max_enum = 8;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

json matrix_json(const SSBMatrix& phi) {
  json rows = json::array();
  for (std::size_t a = 0; a < phi.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < phi.size(); ++b) row.push_back(rational_json(phi(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string named_lottery(const Lottery& p) {
  std::string out;
  for (std::size_t a = 0; a < p.size(); ++a)
    out += (a ? ", " : "") + p.universe().name(a) + "=" + to_string(p[a]);
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SWFHandle rule_by_name(const std::string& rule, const std::string& weights) {
  if (!weights.empty()) {
    WeightVector w;
    for (const auto& item : split_list(weights)) w.weights.push_back(parse_rational(item));
    return swf::affine(std::move(w));
  }
  if (rule == "pairwise") return swf::pairwise_utilitarian();
  if (rule == "majority") return swf::majority_margins();
  if (rule == "approval") return swf::approval();
  if (rule == "relative") return swf::relative_utilitarian();
  if (rule == "constant") return swf::constant_zero();
  if (rule.rfind("dictator", 0) == 0) {
    const auto suffix = rule.substr(std::string("dictator").size());
    std::size_t agent = 1;
    if (!suffix.empty()) agent = std::stoul(suffix);
    if (agent == 0) throw InputError("dictator agents are numbered from 1");
    return swf::dictatorial(agent - 1);
  }
  throw InputError("unknown rule '" + rule + "'");
}

// Larger profile spaces are sampled with the global seed.
constexpr std::size_t kExhaustiveProfiles = 20000;

struct CollectiveInput {
  SSBMatrix matrix;
  std::string source;
};

CollectiveInput load_collective(const std::string& path, bool is_matrix, const SWFHandle& rule) {
  const auto text = read_text_file(path);
  if (is_matrix) return {parse_matrix(text), "matrix " + path};
  const auto profile = parse_ballots(text);
  return {rule(profile), rule.name + " of " + std::to_string(profile.size()) + " agents"};
}

AltSet feasible_set(const Universe& universe, const std::string& among) {
  if (among.empty()) return universe.all();
  try {
    return make_alt_set(universe, split_list(among));
  } catch (const std::out_of_range& e) {
    throw InputError(e.what());
  }
}

void print_matrix(std::ostream& out, const SSBMatrix& phi) {
  const auto& u = phi.universe();
  std::size_t width = 1;
  for (std::size_t a = 0; a < phi.size(); ++a) {
    width = std::max(width, u.name(a).size());
    for (std::size_t b = 0; b < phi.size(); ++b) width = std::max(width, to_string(phi(a, b)).size());
  }
  out << std::setw(static_cast<int>(width)) << "";
  for (std::size_t b = 0; b < phi.size(); ++b) out << ' ' << std::setw(static_cast<int>(width)) << u.name(b);
  out << '\n';
  for (std::size_t a = 0; a < phi.size(); ++a) {
    out << std::setw(static_cast<int>(width)) << u.name(a);
    for (std::size_t b = 0; b < phi.size(); ++b)
      out << ' ' << std::setw(static_cast<int>(width)) << to_string(phi(a, b));
    out << '\n';
  }
}

// ------------------------------------------------------------- subcommands

int cmd_aggregate(const GlobalOptions& g, const std::string& path, const std::string& rule_name,
                  const std::string& weights, std::ostream& out) {
  const auto profile = parse_ballots(read_text_file(path));
  const auto rule = rule_by_name(rule_name, weights);
  const auto phi = rule(profile);
  std::optional<UtilityVector> scores;
  if (rule.name == "approval") scores = approval_aggregate(profile).scores;
  if (g.json) {
    json j{{"rule", rule.name},
           {"agents", profile.size()},
           {"alternatives", phi.universe().names()},
           {"matrix", matrix_json(phi)}};
    if (scores) j["scores"] = rationals_json(scores->values());
    out << j.dump(2) << '\n';
  } else {
    out << "rule: " << rule.name << " (" << profile.size() << " agents)\n";
    print_matrix(out, phi);
    if (scores) {
      out << "approval scores:";
      for (std::size_t a = 0; a < scores->size(); ++a)
        out << ' ' << phi.universe().name(a) << '=' << to_string((*scores)[a]);
      out << '\n';
    }
  }
  return kOk;
}

struct SolveReport {
  MaximalityCertificate certificate;
  std::optional<MaximalSet> face;
};

SolveReport solve_report(const GlobalOptions& g, const SSBMatrix& phi, const AltSet& alts) {
  SolveReport report{maximal_lottery(phi, alts), std::nullopt};
  if (alts.size() <= g.max_enum) report.face = maximal_set(phi, alts, g.max_enum);
  return report;
}

json solve_json(const SolveReport& r) {
  json j{{"lottery", rationals_json(r.certificate.lottery.probs())},
         {"slacks", rationals_json(r.certificate.slack)}};
  json against = json::array();
  for (auto b : r.certificate.against) against.push_back(r.certificate.lottery.universe().name(b));
  j["against"] = against;
  if (r.face) {
    j["unique"] = r.face->unique;
    json vertices = json::array();
    for (const auto& v : r.face->vertices) vertices.push_back(rationals_json(v.probs()));
    j["maximal_set_vertices"] = vertices;
  } else {
    j["unique"] = nullptr;
  }
  return j;
}

void print_solve(std::ostream& out, const SolveReport& r) {
  const auto& u = r.certificate.lottery.universe();
  out << "maximal lottery: " << named_lottery(r.certificate.lottery) << '\n';
  out << "slacks:";
  for (std::size_t i = 0; i < r.certificate.against.size(); ++i)
    out << ' ' << u.name(r.certificate.against[i]) << '=' << to_string(r.certificate.slack[i]);
  out << '\n';
  if (!r.face) {
    out << "unique: not enumerated (feasible set above --max-enum)\n";
  } else if (r.face->unique) {
    out << "unique: yes\n";
  } else {
    out << "unique: no (" << r.face->vertices.size()
        << " extreme maximal lotteries; reported lottery is the first optimal basic solution)\n";
    for (const auto& v : r.face->vertices) out << "  vertex: " << named_lottery(v) << '\n';
  }
}

int cmd_maximal_lottery(const GlobalOptions& g, const std::string& path, bool is_matrix,
                        const std::string& rule_name, const std::string& among, std::ostream& out) {
  const auto input = load_collective(path, is_matrix, rule_by_name(rule_name, ""));
  const auto alts = feasible_set(input.matrix.universe(), among);
  const auto report = solve_report(g, input.matrix, alts);
  if (g.json) {
    auto j = solve_json(report);
    j["alternatives"] = input.matrix.universe().names();
    j["source"] = input.source;
    out << j.dump(2) << '\n';
  } else {
    out << "source: " << input.source << '\n';
    print_solve(out, report);
  }
  return kOk;
}

int cmd_budget(const GlobalOptions& g, const std::string& ballots, const std::string& proposals_path,
               const std::string& rule_name, std::ostream& out) {
  const auto profile = parse_ballots(read_text_file(ballots));
  const auto proposals = parse_proposals(read_text_file(proposals_path));
  const auto rule = rule_by_name(rule_name, "");
  const auto phi = rule(profile);
  const auto report = solve_report(g, phi, phi.universe().all());
  const auto allocation = budget_allocation(proposals, report.certificate.lottery);
  if (g.json) {
    auto j = solve_json(report);
    j["alternatives"] = phi.universe().names();
    j["rule"] = rule.name;
    json items = json::array();
    for (std::size_t i = 0; i < allocation.size(); ++i)
      items.push_back({{"item", proposals.items()[i]},
                       {"share", rational_json(allocation[i])},
                       {"percent", to_percent(allocation[i])}});
    j["allocation"] = items;
    out << j.dump(2) << '\n';
  } else {
    out << "rule: " << rule.name << " (" << profile.size() << " agents)\n";
    print_solve(out, report);
    std::size_t width = 0;
    for (const auto& item : proposals.items()) width = std::max(width, item.size());
    out << "budget allocation:\n";
    for (std::size_t i = 0; i < allocation.size(); ++i)
      out << "  " << std::left << std::setw(static_cast<int>(width)) << proposals.items()[i] << std::right
          << "  " << std::setw(6) << to_percent(allocation[i]) << "%  (" << to_string(allocation[i]) << ")\n";
  }
  return kOk;
}

int cmd_cycle_witness(const GlobalOptions& g, const std::string& path, bool is_matrix,
                      const std::string& rule_name, std::ostream& out) {
  const auto input = load_collective(path, is_matrix, rule_by_name(rule_name, ""));
  const auto& phi = input.matrix;
  const auto cycle = cycle_witness(phi, g.jobs);
  if (g.json) {
    json j{{"alternatives", phi.universe().names()}, {"source", input.source}};
    if (cycle) {
      const auto& [p, q, r] = *cycle;
      j["cycle"] = {rationals_json(p.probs()), rationals_json(q.probs()), rationals_json(r.probs())};
      j["values"] = rationals_json({evaluate(phi, p, q), evaluate(phi, q, r), evaluate(phi, r, p)});
    } else {
      j["cycle"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else if (cycle) {
    const auto& [p, q, r] = *cycle;
    out << "cycle found: p > q > r > p\n"
        << "  p: " << named_lottery(p) << '\n'
        << "  q: " << named_lottery(q) << '\n'
        << "  r: " << named_lottery(r) << '\n'
        << "  phi(p,q) = " << to_string(evaluate(phi, p, q)) << ", phi(q,r) = " << to_string(evaluate(phi, q, r))
        << ", phi(r,p) = " << to_string(evaluate(phi, r, p)) << '\n';
  } else {
    out << "none found on grid\n";
  }
  return kOk;
}

struct AxiomLine {
  std::string axiom;
  bool pass;
  std::string detail;
};

Universe letters(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) names.emplace_back(1, static_cast<char>('a' + a));
  return Universe(std::move(names));
}

int cmd_check_axioms(const GlobalOptions& g, const std::string& rule_name, const std::string& weights,
                     const std::string& ballots, const std::string& against, std::size_t samples,
                     std::size_t m, std::size_t agents, std::ostream& out) {
  const auto rule = rule_by_name(rule_name, weights);
  std::vector<AxiomLine> lines;
  std::string mode;

  if (!ballots.empty()) {
    const auto profile = parse_ballots(read_text_file(ballots));
    mode = "profile " + ballots;
    const auto anon = check_anonymity(rule, profile, 6, g.seed);
    lines.push_back({"anonymity", anon.pass, anon.detail});
    const auto pareto = check_pareto(rule, profile, sample_lottery_pairs(profile.universe(), samples, g.seed));
    lines.push_back({"pareto", pareto.pass, pareto.detail});
    if (!against.empty()) {
      const auto other = parse_ballots(read_text_file(against));
      const auto report = exhaustive_iia(rule, {profile, other}, nonempty_subsets(profile.universe().size()),
                                         IIAConvention::UpToScale, g.jobs);
      lines.push_back({"iia", report.pass(),
                       report.pass() ? std::to_string(report.hypothesis_held) + " (R, R', X) triples with equal restrictions agree"
                                     : *report.first_counterexample});
    }
  } else {
    if (m < 1 || m > 5) throw InputError("--m must be between 1 and 5");
    if (agents < 1 || agents > 3) throw InputError("--agents must be between 1 and 3");
    const auto universe = letters(m);
    std::vector<BaseRelation> relations;
    std::string domain;
    if (rule.name == "approval") {
      relations = all_dichotomous(universe);
      domain = "dichotomous";
    } else if (rule.name == "relative-utilitarian") {
      throw InputError("the relative rule needs vNM profiles; pass --ballots and --against");
    } else {
      relations = all_weak_orders(universe);
      domain = "transitive PC";
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < agents; ++i) total *= relations.size();
    std::vector<Profile> profiles;
    const auto shape = " profiles of " + std::to_string(agents) + " agents, " + domain + " preferences over " +
                       std::to_string(m) + " alternatives";
    if (total <= kExhaustiveProfiles) {
      profiles = all_profiles(universe, relations, agents);
      mode = "exhaustive: " + std::to_string(total) + shape;
    } else {
      Rng rng(g.seed);
      std::uniform_int_distribution<std::size_t> pick_relation(0, relations.size() - 1);
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Agent> chosen;
        for (std::size_t i = 0; i < agents; ++i) chosen.emplace_back(relations[pick_relation(rng)]);
        profiles.emplace_back(universe, std::move(chosen));
      }
      mode = "sampled: " + std::to_string(samples) + " of " + std::to_string(total) + shape;
    }
    const auto report = exhaustive_iia(rule, profiles, nonempty_subsets(m), IIAConvention::UpToScale, g.jobs);
    lines.push_back({"iia", report.pass(),
                     report.pass() ? std::to_string(report.pairs_checked) + " (R, R', X) triples, " +
                                         std::to_string(report.hypothesis_held) + " with equal restrictions"
                                   : *report.first_counterexample});

    Rng rng(g.seed);
    std::uniform_int_distribution<std::size_t> pick(0, profiles.size() - 1);
    std::string pareto_detail = std::to_string(samples) + " random (profile, p, q) draws";
    bool pareto_pass = true;
    for (std::size_t s = 0; s < samples && pareto_pass; ++s) {
      const auto& profile = profiles[pick(rng)];
      const auto p = random_lottery(universe, rng);
      const auto q = random_lottery(universe, rng);
      const auto v = check_pareto(rule, profile, {{p, q}});
      if (!v.pass) {
        pareto_pass = false;
        pareto_detail = v.detail;
      }
    }
    lines.push_back({"pareto", pareto_pass, pareto_detail});

    bool anon_pass = true;
    std::string anon_detail = "every enumerated profile";
    for (const auto& profile : profiles) {
      const auto v = check_anonymity(rule, profile, 6, g.seed);
      if (!v.pass) {
        anon_pass = false;
        anon_detail = v.detail;
        break;
      }
    }
    lines.push_back({"anonymity", anon_pass, anon_detail});
  }

  const bool all_pass = std::all_of(lines.begin(), lines.end(), [](const AxiomLine& l) { return l.pass; });
  if (g.json) {
    json results = json::array();
    for (const auto& l : lines) results.push_back({{"axiom", l.axiom}, {"pass", l.pass}, {"detail", l.detail}});
    out << json{{"rule", rule.name}, {"mode", mode}, {"seed", g.seed}, {"results", results}, {"pass", all_pass}}.dump(2)
        << '\n';
  } else {
    out << "rule: " << rule.name << "\n" << mode << "\nseed: " << g.seed << '\n';
    for (const auto& l : lines) out << (l.pass ? "PASS " : "FAIL ") << l.axiom << ": " << l.detail << '\n';
  }
  return all_pass ? kOk : kFail;
}

std::vector<SSBMatrix> parse_matrix_list(const std::string& text) {
  std::vector<SSBMatrix> out;
  std::string block;
  std::stringstream in(text);
  std::string line;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\r\n") != std::string::npos) out.push_back(parse_matrix(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.rfind("---", 0) == 0) flush();
    else block += line + "\n";
  }
  flush();
  if (out.empty()) throw InputError("no matrices in domain file");
  return out;
}

int cmd_audit_domain(const GlobalOptions& g, const std::string& kind, std::size_t m, const std::string& matrices,
                     const std::string& conditions, bool without_zero, std::ostream& out) {
  std::optional<DomainDescription> domain;
  std::string label;
  if (!matrices.empty()) {
    auto list = parse_matrix_list(read_text_file(matrices));
    const auto universe = list.front().universe();
    domain.emplace(universe, list);
    label = matrices;
  } else {
    if (m < 1 || m > 5) throw InputError("--m must be between 1 and 5");
    const auto universe = letters(m);
    if (kind == "full-pc") domain = full_pc_domain(universe);
    else if (kind == "transitive-pc") domain = transitive_pc_domain(universe);
    else if (kind == "dichotomous") domain = dichotomous_domain(universe);
    else throw InputError("unknown domain kind '" + kind + "'");
    label = kind + " over " + std::to_string(m) + " alternatives";
  }
  if (without_zero) {
    std::vector<SSBMatrix> kept;
    for (const auto& phi : domain->members())
      if (!phi.is_zero()) kept.push_back(phi);
    domain.emplace(domain->universe(), kept);
    label += " without complete indifference";
  }

  std::vector<Richness> wanted;
  for (const auto& c : split_list(conditions)) {
    if (c == "R1") wanted.push_back(Richness::R1);
    else if (c == "R2") wanted.push_back(Richness::R2);
    else if (c == "R3") wanted.push_back(Richness::R3);
    else if (c == "R4") wanted.push_back(Richness::R4);
    else if (c == "R5") wanted.push_back(Richness::R5);
    else throw InputError("unknown richness condition '" + c + "'");
  }
  const auto reports = audit_richness(*domain, wanted);
  const auto inclusion = pc_inclusion_check(*domain);
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const RichnessReport& r) { return r.pass; });

  if (g.json) {
    json results = json::array();
    for (const auto& r : reports)
      results.push_back({{"condition", to_string(r.condition)}, {"pass", r.pass}, {"witness", r.witness}});
    out << json{{"domain", label},
                {"members", domain->size()},
                {"results", results},
                {"pc_inclusion", {{"pass", inclusion.pass}, {"detail", inclusion.detail}}},
                {"pass", all_pass}}
               .dump(2)
        << '\n';
  } else {
    out << "domain: " << label << " (" << domain->size() << " members)\n";
    for (const auto& r : reports)
      out << (r.pass ? "PASS " : "FAIL ") << to_string(r.condition) << (r.witness.empty() ? "" : ": " + r.witness)
          << '\n';
    out << (inclusion.pass ? "inside PC: " : "outside PC: ") << inclusion.detail << '\n';
  }
  return all_pass ? kOk : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact SSB social choice: pairwise utilitarian aggregation and maximal lotteries"};
  app.name("ssbchoice");
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_flag("--json", g.json, "Machine-readable output; rationals as [numerator, denominator] strings");
  app.add_option("--jobs", g.jobs, "Worker threads for enumerations")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_option("--max-enum", g.max_enum, "Largest feasible set for maximal-set enumeration");

  std::string rule = "pairwise", weights, among;
  bool is_matrix = false;

  auto* aggregate = app.add_subcommand("aggregate", "Print the collective SSB matrix of a ballot file");
  std::string agg_path;
  aggregate->add_option("ballots", agg_path)->required();
  aggregate->add_option("--rule", rule, "pairwise, majority, approval, relative, constant, dictator<k>");
  aggregate->add_option("--weights", weights, "Comma-separated agent weights (affine utilitarian rule)");

  auto* maximal = app.add_subcommand("maximal-lottery", "Compute a maximal lottery with its certificate");
  std::string ml_path;
  maximal->add_option("input", ml_path)->required();
  maximal->add_flag("--matrix", is_matrix, "Input is a matrix file rather than ballots");
  maximal->add_option("--rule", rule, "Aggregation rule for ballot input");
  maximal->add_option("--among", among, "Comma-separated feasible alternatives (default: all)");

  auto* budget = app.add_subcommand("budget", "Maximal lottery mapped through a proposal matrix");
  std::string budget_ballots, budget_proposals;
  budget->add_option("ballots", budget_ballots)->required();
  budget->add_option("proposals", budget_proposals)->required();
  budget->add_option("--rule", rule, "Aggregation rule");

  auto* check = app.add_subcommand("check-axioms", "Check IIA, Pareto optimality and anonymity of a rule");
  std::string check_ballots, check_against;
  std::size_t samples = 1000, check_m = 3, check_agents = 2;
  check->add_option("--rule", rule, "pairwise, majority, approval, relative, constant, dictator<k>");
  check->add_option("--weights", weights, "Comma-separated agent weights (affine utilitarian rule)");
  check->add_option("--ballots", check_ballots, "Check a given profile instead of enumerating");
  check->add_option("--against", check_against, "Second profile for the IIA comparison");
  check->add_option("--samples", samples, "Random lottery pairs / draws for Pareto");
  check->add_option("--m", check_m, "Alternatives in the enumerated domain");
  check->add_option("--agents", check_agents, "Agents per enumerated profile");

  auto* audit = app.add_subcommand("audit-domain", "Audit richness conditions of a preference domain");
  std::string kind = "full-pc", matrices, conditions = "R1,R2,R3,R4";
  std::size_t audit_m = 4;
  bool without_zero = false;
  audit->add_option("--domain", kind, "full-pc, transitive-pc or dichotomous");
  audit->add_option("--m", audit_m, "Number of alternatives");
  audit->add_option("--matrices", matrices, "Domain file: matrix blocks separated by '---' lines");
  audit->add_option("--conditions", conditions, "Comma-separated subset of R1..R5");
  audit->add_flag("--without-zero", without_zero, "Remove complete indifference from the domain");

  auto* cycle = app.add_subcommand("cycle-witness", "Search for a strict preference cycle among lotteries");
  std::string cycle_path;
  cycle->add_option("input", cycle_path)->required();
  cycle->add_flag("--matrix", is_matrix, "Input is a matrix file rather than ballots");
  cycle->add_option("--rule", rule, "Aggregation rule for ballot input");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, error;
    const int code = app.exit(e, help, error);
    out << help.str();
    err << error.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*aggregate) return cmd_aggregate(g, agg_path, rule, weights, out);
    if (*maximal) return cmd_maximal_lottery(g, ml_path, is_matrix, rule, among, out);
    if (*budget) return cmd_budget(g, budget_ballots, budget_proposals, rule, out);
    if (*check)
      return cmd_check_axioms(g, rule, weights, check_ballots, check_against, samples, check_m, check_agents, out);
    if (*audit) return cmd_audit_domain(g, kind, audit_m, matrices, conditions, without_zero, out);
    if (*cycle) return cmd_cycle_witness(g, cycle_path, is_matrix, rule, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const EnumerationBoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace ssbchoice::cli
