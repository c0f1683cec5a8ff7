// m3: invariants of 3-component links from combinatorial diagram data.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "m3/cli_commands.hpp"

namespace {

std::string read_arg_or_file(const std::string& v) {
  if (!v.empty() && v[0] == '@') {
    std::ifstream in(v.substr(1));
    if (!in) {
      std::cerr << "cannot open " << v.substr(1) << "\n";
      exit(m3::kExitParse);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return v;
}

std::vector<long long> parse_params(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoll(tok));
  }
  return out;
}

std::vector<std::vector<int>> parse_lambdas(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(s);
  std::string group;
  while (std::getline(ss, group, ';')) {
    std::vector<int> lam;
    std::stringstream gs(group);
    std::string tok;
    while (std::getline(gs, tok, ',')) lam.push_back(std::stoi(tok));
    if (lam.size() != 3) {
      std::cerr << "lambda triples must have three entries: " << group << "\n";
      exit(m3::kExitParse);
    }
    out.push_back(lam);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of 3-component links from diagram combinatorics"};
  app.require_subcommand(1);

  m3::CliOptions opts;
  std::string family, params_str, braid, diagram, invariants_str, lambdas_str;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "table, json or csv")->default_val("table");
    sub->add_option("--jobs", opts.jobs, "worker count (0 = all cores)");
    sub->add_option("--seed", opts.seed, "base seed for randomized checks");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute invariants for one link");
  compute->add_option("--family", family, "family name (hopf2, hopf2_op, l0, hopf3, hopf_fibers, figure)");
  compute->add_option("--params", params_str, "comma-separated family parameters");
  compute->add_option("--braid", braid, "braid JSON (inline or @file)");
  compute->add_option("--diagram", diagram, "diagram JSON (inline or @file)");
  compute->add_option("--invariants", invariants_str,
                      "comma-separated subset (lk,conway,c0,c1,beta,betas,gamma,m_tilde,p1,r,m_av,m,report)");
  add_common(compute);

  CLI::App* table = app.add_subcommand("paper-table", "reproduce the worked-example table");
  add_common(table);

  CLI::App* sweep = app.add_subcommand("sweep-asymptotic", "check the cabling scaling law");
  sweep->add_option("--family", family, "base family")->required();
  sweep->add_option("--params", params_str, "base family parameters");
  sweep->add_option("--lambdas", lambdas_str, "semicolon-separated triples, e.g. 2,1,1;2,2,1")
      ->required();
  add_common(sweep);

  int max_crossings = 12, seeds = 5;
  CLI::App* oracle = app.add_subcommand("oracle-check", "engine vs bruteforce + closed forms");
  oracle->add_option("--max-crossings", max_crossings, "bruteforce corpus bound");
  oracle->add_option("--seeds", seeds, "random crossing-order seeds per diagram");
  add_common(oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      m3::ComputeArgs args;
      args.family = family;
      args.params = parse_params(params_str);
      args.braid_json = read_arg_or_file(braid);
      args.diagram_json = read_arg_or_file(diagram);
      if (!invariants_str.empty()) {
        std::stringstream ss(invariants_str);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) args.invariants.push_back(tok);
      }
      args.opts = opts;
      return m3::cmd_compute(args, std::cout, std::cerr);
    }
    if (table->parsed()) return m3::cmd_paper_table(opts, std::cout, std::cerr);
    if (sweep->parsed())
      return m3::cmd_sweep_asymptotic(family, parse_params(params_str), parse_lambdas(lambdas_str),
                                      opts, std::cout, std::cerr);
    if (oracle->parsed()) return m3::cmd_oracle_check(max_crossings, seeds, opts, std::cout, std::cerr);
  } catch (const m3::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code == m3::Err::Parse ? m3::kExitParse : m3::kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
