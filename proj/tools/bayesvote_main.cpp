#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "bayesvote/axioms.hpp"
#include "bayesvote/experiments.hpp"
#include "bayesvote/io.hpp"
#include "bayesvote/models.hpp"
#include "bayesvote/oracle.hpp"

namespace bv = bayesvote;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;

double phi_to_double(const bv::ExactRational& q) {
  return static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
}

bv::experiments::GroundTruth parse_ground_truth(const std::string& text) {
  if (text == "w5rot" || text.rfind("identity(", 0) == 0)
    return bv::experiments::builtin_ground_truth(text);
  if (text.rfind("bits:", 0) == 0) {
    const std::string bits = text.substr(5);
    const int len = static_cast<int>(bits.size());
    const int m = static_cast<int>((1 + std::lround(std::sqrt(1.0 + 8.0 * len))) / 2);
    if (bv::pair_count(m) != len)
      throw std::invalid_argument("bitstring length is not m(m-1)/2 for any m");
    std::vector<uint8_t> b(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1')
        throw std::invalid_argument("tournament literal may contain only 0 and 1");
      b[i] = bits[i] == '1';
    }
    return bv::Tournament(m, std::move(b));
  }
  // Order literal: 1-based indices separated by '>'.
  std::vector<int> ranking;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, '>')) ranking.push_back(std::stoi(token) - 1);
  bv::LinearOrder order(std::move(ranking));
  order.validate();
  return order;
}

bv::experiments::ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bv::io::ParseError(0, "cannot open '" + path + "'");
  json j = json::parse(in);
  bv::experiments::ExperimentConfig cfg;
  const std::string model = j.at("model").get<std::string>();
  if (model == "mallows")
    cfg.model = bv::ModelKind::mallows;
  else if (model == "condorcet")
    cfg.model = bv::ModelKind::condorcet;
  else
    throw std::invalid_argument("unknown model '" + model + "'");
  cfg.ground_truth = parse_ground_truth(j.at("ground_truth").get<std::string>());
  cfg.phi_list = j.at("phi_list").get<std::vector<double>>();
  cfg.n_list = j.at("n_list").get<std::vector<bv::Count>>();
  cfg.trials = j.at("trials").get<int>();
  if (j.contains("vote_kind")) {
    const std::string kind = j["vote_kind"].get<std::string>();
    if (kind == "linear")
      cfg.vote_kind = bv::VoteKind::linear;
    else if (kind == "tournament")
      cfg.vote_kind = bv::VoteKind::tournament;
    else
      throw std::invalid_argument("unknown vote kind '" + kind + "'");
  }
  if (j.contains("rules")) {
    cfg.rules.clear();
    for (const auto& name : j["rules"])
      cfg.rules.push_back(bv::parse_rule(name.get<std::string>()));
  }
  if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
  return cfg;
}

int run(int argc, char** argv) {
  CLI::App app{"Voting rules as Bayesian estimators: Kemeny, fb1, fb2, and g"};
  app.require_subcommand(1);

  std::string rule_name = "fb2", phi_text = "0.5", profile_path, wmg_path;
  std::string model_name = "condorcet", ground_truth_text, axiom_name_text;
  std::string config_path, expect, kind_name = "tournament", space_name = "linear";
  bv::Count votes = 0;
  uint64_t seed = 0;
  int trials = 100;
  bool exact = false;

  auto* winners_cmd = app.add_subcommand("winners", "Co-winner set of a rule");
  winners_cmd->add_option("--rule", rule_name)->required();
  winners_cmd->add_option("--phi", phi_text);
  winners_cmd->add_option("--profile", profile_path)->required();
  winners_cmd->add_flag("--exact", exact, "exact rational mode (fb2 only)");

  auto* risks_cmd = app.add_subcommand("risks", "Per-alternative score table");
  risks_cmd->add_option("--rule", rule_name)->required();
  risks_cmd->add_option("--phi", phi_text);
  risks_cmd->add_option("--profile", profile_path)->required();
  risks_cmd->add_flag("--exact", exact);

  auto* kemeny_cmd = app.add_subcommand("kemeny-order", "One optimal order and tie count");
  kemeny_cmd->add_option("--profile", profile_path)->required();

  auto* sample_cmd = app.add_subcommand("sample", "Draw a profile from a model");
  sample_cmd->add_option("--model", model_name);
  sample_cmd->add_option("--ground-truth", ground_truth_text)->required();
  sample_cmd->add_option("--phi", phi_text);
  sample_cmd->add_option("--votes", votes)->required();
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--kind", kind_name, "vote kind for the Condorcet model");

  auto* mcgarvey_cmd = app.add_subcommand("mcgarvey", "Profile realizing a WMG");
  mcgarvey_cmd->add_option("--wmg", wmg_path)->required();

  std::vector<int> seed_pstar;
  int seed_consistency = 0;
  auto* check_cmd = app.add_subcommand("check", "Randomized axiom falsification");
  check_cmd->add_option("--rule", rule_name)->required();
  check_cmd->add_option("--axiom", axiom_name_text)->required();
  check_cmd->add_option("--phi", phi_text);
  check_cmd->add_option("--trials", trials);
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--profile", profile_path, "seed profile checked first");
  check_cmd->add_option("--seed-pstar", seed_pstar, "m k: seed the P* counterexample")
      ->expected(2);
  check_cmd->add_option("--seed-consistency", seed_consistency,
                        "k: seed the consistency counterexample pair");
  check_cmd->add_option("--expect", expect, "'none' exits 1 if violations are found");

  auto* experiment_cmd = app.add_subcommand("experiment", "Monte-Carlo rule divergence");
  experiment_cmd->add_option("--config", config_path)->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact-rational reference tables");
  oracle_cmd->add_option("--profile", profile_path)->required();
  oracle_cmd->add_option("--phi", phi_text);
  oracle_cmd->add_option("--space", space_name, "linear or tournament");

  CLI11_PARSE(app, argc, argv);

  const bv::ExactRational phi_exact = bv::io::parse_phi(phi_text);
  const double phi = phi_to_double(phi_exact);

  if (winners_cmd->parsed()) {
    const bv::Profile p = bv::io::read_profile_file(profile_path);
    const bv::Rule rule = bv::parse_rule(rule_name);
    bv::WinnerSet w;
    if (exact) {
      if (rule != bv::Rule::fb2)
        throw std::invalid_argument("--exact is available for fb2 only");
      w = bv::fb2_winners_exact(p, phi_exact);
    } else {
      w = bv::apply_rule(rule, p, phi);
    }
    std::cout << bv::io::format_winner_set(w, p.alternatives()) << "\n";
    return 0;
  }

  if (risks_cmd->parsed()) {
    const bv::Profile p = bv::io::read_profile_file(profile_path);
    const bv::Rule rule = bv::parse_rule(rule_name);
    const auto& alts = p.alternatives();
    if (rule == bv::Rule::fb2 && exact) {
      const auto risks = bv::fb2_risks_exact(p, phi_exact);
      for (int c = 0; c < p.m(); ++c)
        std::cout << alts.label(c) << " " << bv::io::format_rational(risks[c]) << "\n";
      return 0;
    }
    if (rule == bv::Rule::fb2) {
      const auto t = bv::fb2_risks(p, phi);
      for (int c = 0; c < p.m(); ++c)
        std::cout << alts.label(c) << " " << t.values[c] << "\n";
      return 0;
    }
    if (rule == bv::Rule::fb1) {
      const auto post = bv::fb1_top_posteriors(p, phi);
      for (int c = 0; c < p.m(); ++c)
        std::cout << alts.label(c) << " " << post[c] << "\n";
      return 0;
    }
    if (rule == bv::Rule::g) {
      const auto t = bv::g_scores(p);
      for (int c = 0; c < p.m(); ++c)
        std::cout << alts.label(c) << " " << static_cast<bv::Count>(t.values[c]) << "\n";
      return 0;
    }
    const auto t = bv::kemeny_forced_top_scores(p);
    for (int c = 0; c < p.m(); ++c)
      std::cout << alts.label(c) << " " << static_cast<bv::Count>(t.values[c]) << "\n";
    return 0;
  }

  if (kemeny_cmd->parsed()) {
    const bv::Profile p = bv::io::read_profile_file(profile_path);
    const auto result = bv::kemeny_optimal_order(p);
    std::cout << bv::io::format_order(result.order, p.alternatives())
              << " distance=" << result.min_distance
              << " optimal_orders=" << result.optimal_count << "\n";
    return 0;
  }

  if (sample_cmd->parsed()) {
    const auto gt = parse_ground_truth(ground_truth_text);
    bv::RandomState rng(seed);
    bv::Profile p;
    if (model_name == "mallows") {
      if (!std::holds_alternative<bv::LinearOrder>(gt))
        throw std::invalid_argument("Mallows ground truth must be a linear order");
      p = bv::sample_mallows(std::get<bv::LinearOrder>(gt), phi, votes, rng);
    } else if (model_name == "condorcet") {
      const bv::Tournament w =
          std::holds_alternative<bv::Tournament>(gt)
              ? std::get<bv::Tournament>(gt)
              : bv::to_tournament(std::get<bv::LinearOrder>(gt));
      const bv::VoteKind kind =
          kind_name == "linear" ? bv::VoteKind::linear : bv::VoteKind::tournament;
      p = bv::sample_condorcet(w, phi, votes, kind, rng);
    } else {
      throw std::invalid_argument("unknown model '" + model_name + "'");
    }
    std::cout << bv::io::write_profile(p);
    return 0;
  }

  if (mcgarvey_cmd->parsed()) {
    const auto target = bv::io::read_wmg_file(wmg_path);
    std::cout << bv::io::write_profile(bv::mcgarvey(target));
    return 0;
  }

  if (check_cmd->parsed()) {
    const bv::Rule rule = bv::parse_rule(rule_name);
    const bv::Axiom axiom = bv::parse_axiom(axiom_name_text);
    bv::CheckConfig cfg;
    if (!profile_path.empty())
      cfg.seed_profiles.push_back(bv::io::read_profile_file(profile_path));
    if (!seed_pstar.empty())
      cfg.seed_profiles.push_back(bv::p_star_profile(seed_pstar[0], seed_pstar[1]));
    if (seed_consistency > 0)
      cfg.seed_pairs.push_back(bv::consistency_pair(seed_consistency));
    bv::RandomState rng(seed);
    const auto report = bv::check_axiom(rule, axiom, phi, trials, rng, cfg);
    std::cout << report.to_text();
    if (expect == "none" && !report.violations.empty()) return 1;
    return 0;
  }

  if (experiment_cmd->parsed()) {
    const auto cfg = load_experiment_config(config_path);
    std::cout << bv::experiments::to_csv(cfg, bv::experiments::run_experiment(cfg));
    return 0;
  }

  if (oracle_cmd->parsed()) {
    const bv::Profile p = bv::io::read_profile_file(profile_path);
    const auto space = space_name == "tournament"
                           ? bv::oracle::Space::tournament
                           : bv::oracle::Space::linear;
    const auto post = bv::oracle::exact_top_posteriors(p, phi_exact, space);
    const auto& alts = p.alternatives();
    for (int c = 0; c < p.m(); ++c)
      std::cout << alts.label(c) << " top_posterior="
                << bv::io::format_rational(post[c]) << "\n";
    if (space == bv::oracle::Space::tournament) {
      const auto risks = bv::oracle::exact_fb2_risk(p, phi_exact);
      for (int c = 0; c < p.m(); ++c)
        std::cout << alts.label(c) << " risk="
                  << bv::io::format_rational(risks[c]) << "\n";
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bv::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
