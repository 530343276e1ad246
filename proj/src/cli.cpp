#include "locgame/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "locgame/io.hpp"

namespace locgame {

namespace {

Design design_from(std::istream& in, const std::string& path) {
  if (path.empty() || path == "-") return read_design(in);
  std::ifstream f(path);
  if (!f) throw Error(Errc::bad_format, "cannot open " + path);
  return read_design(f);
}

Graph graph_from(std::istream& in, const std::string& path, std::string* kind) {
  if (path.empty() || path == "-") return read_graph_or_design(in, kind);
  std::ifstream f(path);
  if (!f) throw Error(Errc::bad_format, "cannot open " + path);
  return read_graph_or_design(f, kind);
}

int threads_default() {
  if (const char* env = std::getenv("LOCGAME_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

std::unique_ptr<CopStrategy> strategy_by_tag(const std::string& tag, const Design& d,
                                             const Graph& g, int steiner_t) {
  if (tag == "symmetric") return symmetric_strategy(d);
  if (tag == "near-symmetric") return near_symmetric_strategy(d);
  if (tag == "affine") {
    auto rd = recover_resolution(d);
    if (!rd) throw Error(Errc::not_resolved, "no parallel classes recoverable");
    return affine_strategy(*rd);
  }
  if (tag == "general-bibd") return general_bibd_strategy(d, g);
  if (tag == "two-design" || tag == "scanning") return two_design_strategy(d, g);
  if (tag == "sts-half") return sts_half_strategy(d);
  if (tag == "sts-matching") return sts_matching_strategy(d);
  if (tag == "steiner-matching") {
    int k = d.blocks.empty() ? 0 : static_cast<int>(d.blocks.front().size());
    return steiner_matching_strategy(d, steiner_t, k);
  }
  if (tag == "sqs") return sqs_strategy(d);
  if (tag == "td") {
    auto gd = recover_grouping(d);
    if (!gd) throw Error(Errc::not_resolved, "no transversal grouping recoverable");
    return td_strategy(*gd);
  }
  throw Error(Errc::bad_format, "unknown theorem tag: " + tag);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"localization game on incidence graphs of designs"};
  app.require_subcommand(1);

  uint64_t seed = 0;
  int threads = threads_default();
  long long budget_states = 2'000'000;
  int budget_rounds = 0;
  std::string format = "text";
  app.add_option("--seed", seed, "seed for adversary randomization");
  app.add_option("--threads", threads, "worker threads (env LOCGAME_THREADS)");
  app.add_option("--budget-states", budget_states, "solver state budget");
  app.add_option("--budget-rounds", budget_rounds, "round budget (0: default)");
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a design family");
  std::string family;
  std::vector<int> orders;
  int gen_point = 0, gen_class = 0;
  gen->add_option("family", family, "pp|ag|sts|sqs|td|td-from-pp|td-from-ag")->required();
  gen->add_option("order", orders, "order parameters");
  gen->add_option("--point", gen_point, "point deleted by td-from-pp");
  gen->add_option("--class", gen_class, "class deleted by td-from-ag");

  // validate
  auto* validate = app.add_subcommand("validate", "check the design axioms");
  std::string input_path;
  validate->add_option("--input", input_path, "design file (default stdin)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "report every applicable bound");
  bounds->add_option("--input", input_path, "design file (default stdin)");
  std::string design_id = "stdin";
  bounds->add_option("--id", design_id, "design label used in the report");
  int verify_cap = 150;
  bounds->add_option("--verify-cap", verify_cap, "exhaustive verification vertex cutoff");

  // f-value
  auto* fvalue = app.add_subcommand("f-value", "f(u) per point and f(G)");
  fvalue->add_option("--input", input_path, "design file (default stdin)");

  // solve
  auto* solve = app.add_subcommand("solve", "exact localization number");
  solve->add_option("--input", input_path, "design or graph file (default stdin)");
  int solve_k = 0, solve_kmax = 0;
  std::string cert_path;
  solve->add_option("--k", solve_k, "test exactly k cops");
  solve->add_option("--k-max", solve_kmax, "ascending search up to k");
  solve->add_option("--certificate", cert_path, "write the certificate here");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustively verify a theorem strategy");
  verify->add_option("--input", input_path, "design file (default stdin)");
  std::string theorem;
  int expect_cops = 0, steiner_t = 2;
  verify->add_option("--theorem", theorem, "strategy tag")->required();
  verify->add_option("--cops", expect_cops, "expected cop count");
  verify->add_option("--t", steiner_t, "t for steiner-matching");

  // replay
  auto* replay = app.add_subcommand("replay", "replay a certificate against a graph");
  replay->add_option("--certificate", cert_path, "certificate file")->required();
  replay->add_option("--input", input_path, "design or graph file (default stdin)");

  // export-graph
  auto* exportg = app.add_subcommand("export-graph", "incidence graph as adjacency lists");
  exportg->add_option("--input", input_path, "design file (default stdin)");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("locgame");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (gen->parsed()) {
      auto need = [&](size_t n) {
        if (orders.size() != n)
          throw Error(Errc::bad_format, "family " + family + " needs " + std::to_string(n) +
                                            " order parameter(s)");
      };
      Design d;
      if (family == "pp") {
        need(1);
        d = projective_plane(orders[0]);
      } else if (family == "ag") {
        need(1);
        d = affine_plane(orders[0]).design;
      } else if (family == "sts") {
        need(1);
        d = sts(orders[0]);
      } else if (family == "sqs") {
        need(1);
        d = sqs_boolean(orders[0]);
      } else if (family == "td") {
        need(2);
        d = transversal_design(orders[0], orders[1]).design;
      } else if (family == "td-from-pp") {
        need(1);
        d = derive_td_from_pp(projective_plane(orders[0]), gen_point).design;
      } else if (family == "td-from-ag") {
        need(1);
        d = derive_td_from_affine(affine_plane(orders[0]), gen_class).design;
      } else {
        throw Error(Errc::bad_format, "unknown family: " + family);
      }
      write_design(out, d);
      return 0;
    }

    if (validate->parsed()) {
      Design d = design_from(in, input_path);
      try {
        DesignParams p = validate_bibd(d);
        out << p.str();
        if (p.symmetric) out << " symmetric";
        if (!p.simple) out << " non-simple";
        if (p.lambda == 1 && p.k == 3) out << " STS(" << p.v << ")";
        if (p.k == 4 && validate_steiner(d, 3)) out << " SQS(" << p.v << ")";
        out << '\n';
        return 0;
      } catch (const Error& e) {
        err << e.what() << '\n';
        return 1;
      }
    }

    if (bounds->parsed()) {
      Design d = design_from(in, input_path);
      BoundsOptions opts;
      opts.verify_vertex_cap = verify_cap;
      opts.round_budget = budget_rounds;
      opts.threads = threads;
      BoundReport report = bounds_report(d, design_id, opts);
      out << (format == "json" ? render_bounds_json(report) : render_bounds_text(report));
      return 0;
    }

    if (fvalue->parsed()) {
      Design d = design_from(in, input_path);
      validate_bibd(d);
      out << kFormatLine << '\n';
      for (int u = 0; u < d.v; ++u) out << "f " << u << ' ' << f_value(d, u) << '\n';
      out << "f(G) " << f_of_design(d) << '\n';
      return 0;
    }

    if (solve->parsed()) {
      std::string kind;
      Graph g = graph_from(in, input_path, &kind);
      Budgets budgets;
      budgets.max_states = budget_states;
      budgets.max_rounds = budget_rounds;
      std::string gid = input_path.empty() || input_path == "-" ? "stdin" : input_path;
      int rc = 0;
      std::optional<Certificate> cert;
      if (solve_k > 0) {
        SolveResult r = can_win(g, solve_k, budgets, threads, gid);
        out << render_solve_text(r);
        if (r.status == SolveStatus::unknown) rc = 3;
        if (r.certificate) cert = r.certificate;
      } else {
        int kmax = solve_kmax > 0 ? solve_kmax : 8;
        LocalizationResult lr = localization_number(g, kmax, budgets, threads, gid);
        for (const auto& r : lr.runs) out << render_solve_text(r);
        out << "localization-number " << lr.str() << '\n';
        if (!lr.exact) rc = 3;
        for (auto it = lr.runs.rbegin(); it != lr.runs.rend(); ++it)
          if (it->certificate) { cert = it->certificate; break; }
      }
      if (!cert_path.empty() && cert) {
        std::ofstream cf(cert_path);
        write_certificate(cf, *cert);
        out << "certificate " << cert_path << '\n';
      }
      return rc;
    }

    if (verify->parsed()) {
      Design d = design_from(in, input_path);
      Graph g = Graph::incidence(d);
      auto cs = strategy_by_tag(theorem, d, g, steiner_t);
      if (expect_cops > 0 && cs->cop_count() != expect_cops) {
        err << "strategy uses " << cs->cop_count() << " cops, expected " << expect_cops << '\n';
        return 1;
      }
      int budget = budget_rounds > 0 ? budget_rounds : default_round_budget(g);
      Verdict v = verify_strategy_exhaustive(g, *cs, budget, threads);
      out << kFormatLine << '\n';
      out << "verify " << theorem << " cops=" << cs->cop_count() << " ";
      switch (v.kind) {
        case Verdict::Kind::proven:
          out << "PROVEN rounds<=" << v.max_rounds << '\n';
          return 0;
        case Verdict::Kind::counterexample: {
          out << "COUNTEREXAMPLE\n";
          write_transcript(out, v.counterexample);
          return 1;
        }
        case Verdict::Kind::budget_exhausted:
          out << "BUDGET_EXHAUSTED rounds=" << budget << '\n';
          return 3;
      }
      return 1;
    }

    if (replay->parsed()) {
      std::ifstream cf(cert_path);
      if (!cf) throw Error(Errc::bad_format, "cannot open " + cert_path);
      Certificate cert = read_certificate(cf);
      std::string kind;
      Graph g = graph_from(in, input_path, &kind);
      bool pass = false;
      if (cert.kind == Certificate::Kind::cops) {
        Verdict v = replay_cops_certificate(g, cert, budget_rounds, threads);
        pass = v.proven() && v.max_rounds <= cert.round_bound;
      } else {
        pass = replay_robber_certificate(g, cert);
      }
      out << (pass ? "PASS" : "FAIL") << '\n';
      return pass ? 0 : 1;
    }

    if (exportg->parsed()) {
      Design d = design_from(in, input_path);
      Graph g = Graph::incidence(d);
      write_graph(out, g);
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::budget_exhausted ? 3 : 1;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace locgame
