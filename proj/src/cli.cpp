#include "labcount/cli.hpp"

#include "labcount/errors.hpp"
#include "labcount/survey.hpp"
#include "labcount/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace labcount {

namespace {

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

// Block syntax: blocks separated by '|', vertices by ',' ("0,2|1,3").
BlockSpec parse_blocks(const std::string& text) {
  BlockSpec blocks;
  if (text.empty()) return blocks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    VertexSubset block;
    std::stringstream ps(part);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      if (tok.empty()) throw usage_error("empty vertex token in blocks: " + text);
      try {
        block.push_back(std::stoi(tok));
      } catch (...) {
        throw usage_error("bad vertex token in blocks: '" + tok + "'");
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

VertexSubset parse_subset(const std::string& text) {
  auto blocks = parse_blocks(text);
  if (blocks.size() != 1) throw usage_error("expected a single vertex subset");
  return blocks[0];
}

// Range syntax: "5" or "0..20".
std::pair<long long, long long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      long long v = std::stoll(text);
      return {v, v};
    }
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (hi < lo) throw usage_error("empty range: " + text);
    return {lo, hi};
  } catch (const usage_error&) {
    throw;
  } catch (...) {
    throw usage_error("bad range: '" + text + "' (expected N or N..M)");
  }
}

std::vector<Int> parse_sequence(const std::string& text) {
  std::vector<Int> seq;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      seq.emplace_back(tok);
    } catch (...) {
      throw usage_error("bad sequence entry: '" + tok + "'");
    }
  }
  if (seq.empty()) throw usage_error("empty sequence");
  return seq;
}

void emit(std::ostream& out, const json& report, const std::string& format) {
  if (format == "csv") {
    for (const auto& rec : report.at("records"))
      out << rec.at("arg").get<long long>() << "," << rec.at("count").get<std::string>() << "\n";
    return;
  }
  out << report.dump(2) << "\n";
}

json base_report(const std::string& command, const json& params, bool force) {
  json report{{"command", command}, {"params", params}, {"version", kVersion}};
  if (force)
    report["warnings"] = json::array({"guardrails overridden by --force"});
  return report;
}

struct CountOptions {
  std::string graph_path;
  std::string mode = "block";
  std::string blocks_text;
  std::string k_text, r_text, t_text;
  std::string positivity = "nonneg";
  std::string engine = "dp";
  std::string format = "json";
  bool force = false;
};

int run_count(const CountOptions& opt, std::ostream& out) {
  Multigraph g = load_graph(opt.graph_path);
  Positivity pos =
      opt.positivity == "positive" ? Positivity::positive : Positivity::nonneg;
  Engine engine = opt.engine == "brute" ? Engine::brute : Engine::dp;
  BlockSpec blocks = parse_blocks(opt.blocks_text);

  std::pair<long long, long long> range;
  std::string arg_name = "k";
  if (opt.mode == "magic") {
    if (opt.r_text.empty()) throw usage_error("count --mode magic requires --r");
    range = parse_range(opt.r_text);
    arg_name = "r";
  } else if (opt.mode == "interior") {
    if (opt.t_text.empty()) throw usage_error("count --mode interior requires --t");
    range = parse_range(opt.t_text);
    arg_name = "t";
  } else {
    if (opt.k_text.empty()) throw usage_error("count requires --k");
    range = parse_range(opt.k_text);
  }

  json records = json::array();
  for (long long a = range.first; a <= range.second; ++a) {
    Int value;
    if (opt.mode == "magic")
      value = count_magic_by_index(g, a, engine, opt.force);
    else if (opt.mode == "block")
      value = count_block_magic(g, blocks, a, pos, engine, opt.force);
    else if (opt.mode == "weak")
      value = count_weak_antimagic_direct(g, a, opt.force);
    else if (opt.mode == "weak-ie")
      value = count_weak_antimagic_ie(g, a, opt.force);
    else if (opt.mode == "strict")
      value = count_strict_antimagic(g, a, opt.force);
    else if (opt.mode == "interior")
      value = count_relative_interior(g, blocks, a, opt.force);
    else
      throw usage_error("unknown count mode: " + opt.mode);
    records.push_back(json{{"arg", a}, {"count", value.str()}});
  }

  json params{{"mode", opt.mode},     {"blocks", opt.blocks_text},
              {"positivity", opt.positivity}, {"engine", opt.engine},
              {"range", arg_name + "=" + std::to_string(range.first) + ".." +
                            std::to_string(range.second)}};
  json report = base_report("count", params, opt.force);
  report["graph"] = graph_to_json(g);
  report["records"] = records;
  report["status"] = "ok";
  emit(out, report, opt.format);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"labcount: exact counting laboratory for magic and antimagic labelings"};
  app.require_subcommand(1);

  // ---- count ----
  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "count labelings (sequence over a range)");
  count->add_option("--graph", count_opt.graph_path, "graph file")->required();
  count->add_option("--mode", count_opt.mode, "magic|block|weak|weak-ie|strict|interior");
  count->add_option("--blocks", count_opt.blocks_text, "blocks, e.g. \"0,2|1,3\"");
  count->add_option("--k", count_opt.k_text, "k or k range: N or N..M");
  count->add_option("--r", count_opt.r_text, "index r range (magic mode)");
  count->add_option("--t", count_opt.t_text, "dilation t range (interior mode)");
  count->add_option("--positivity", count_opt.positivity, "nonneg|positive");
  count->add_option("--engine", count_opt.engine, "dp|brute");
  count->add_option("--format", count_opt.format, "json|csv");
  count->add_flag("--force", count_opt.force, "override guardrails");

  // ---- fit ----
  std::string fit_sequence;
  int fit_max_period = 6, fit_degree_bound = 8;
  long long fit_max_offset = 4;
  int fit_period = 0, fit_degree = -1;
  long long fit_offset = 0;
  bool fit_gf = false;
  auto* fit = app.add_subcommand("fit", "fit a quasi-polynomial to an integer sequence");
  fit->add_option("--sequence", fit_sequence, "comma-separated values from argument 0")->required();
  fit->add_option("--max-period", fit_max_period, "detection bound (default 6)");
  fit->add_option("--degree-bound", fit_degree_bound, "detection bound (default 8)");
  fit->add_option("--max-offset", fit_max_offset, "detection bound (default 4)");
  fit->add_option("--period", fit_period, "fixed fit: period");
  fit->add_option("--degree", fit_degree, "fixed fit: degree");
  fit->add_option("--offset", fit_offset, "fixed fit: offset (default 0)");
  fit->add_flag("--gf", fit_gf, "attach the rational generating function");

  // ---- rays ----
  std::string rays_graph, rays_blocks, rays_grading = "index";
  bool rays_force = false;
  auto* rays = app.add_subcommand("rays", "extreme rays of the labeling cone");
  rays->add_option("--graph", rays_graph, "graph file")->required();
  rays->add_option("--blocks", rays_blocks, "blocks (default: all vertices in one block)");
  rays->add_option("--grading", rays_grading, "index|maxlabel");
  rays->add_flag("--force", rays_force, "override guardrails");

  // ---- facts ----
  std::string facts_graph, facts_blocks;
  bool facts_force = false;
  auto* facts_cmd = app.add_subcommand("facts", "polytope facts of the k=1 section");
  facts_cmd->add_option("--graph", facts_graph, "graph file")->required();
  facts_cmd->add_option("--blocks", facts_blocks, "blocks (default: all vertices in one block)");
  facts_cmd->add_flag("--force", facts_force, "override guardrails");

  // ---- search ----
  std::string search_graph, search_kind = "strict";
  long long search_bound = -1;
  bool search_force = false;
  auto* search = app.add_subcommand("search", "find a witness labeling");
  search->add_option("--graph", search_graph, "graph file")->required();
  search->add_option("--kind", search_kind, "strict|weak|directed");
  search->add_option("--bound", search_bound, "label bound (weak; default 2|E|)");
  search->add_flag("--force", search_force, "override guardrails");

  // ---- quotient ----
  std::string quot_graph, quot_subset, quot_format = "json";
  auto* quotient = app.add_subcommand("quotient", "magic quotient construction");
  quotient->add_option("--graph", quot_graph, "graph file")->required();
  quotient->add_option("--subset", quot_subset, "vertex subset, e.g. \"0,1,2\"")->required();
  quotient->add_option("--format", quot_format, "json|graph");

  // ---- survey ----
  std::string survey_family = "connected", survey_check;
  SuiteScope survey_scope;
  survey_scope.min_vertices = 1;
  survey_scope.max_vertices = 4;
  auto* survey = app.add_subcommand("survey", "search surveys over graph families");
  survey->add_option("--family", survey_family, "connected|connected-multi");
  survey->add_option("--check", survey_check, "strict-antimagic|weak-antimagic|pml2")->required();
  survey->add_option("--min-vertices", survey_scope.min_vertices, "family lower bound");
  survey->add_option("--max-vertices", survey_scope.max_vertices, "family upper bound");
  survey->add_option("--max-edges", survey_scope.max_edges, "edge filter");
  survey->add_option("--bound", survey_scope.k_max, "weak-antimagic label bound (default 2|E|)");
  survey->add_flag("--force", survey_scope.force, "override guardrails");

  // ---- verify ----
  std::string verify_suite, verify_graph, verify_blocks;
  SuiteScope verify_scope;
  auto* verify = app.add_subcommand("verify", "verification suites over claims");
  verify->add_option("--suite", verify_suite,
                     "stanley-period|pml-period|partial-period|reciprocity|pml2|lemma34|"
                     "lemma7|directed-conjecture|directed-period|strict-antimagic-period")
      ->required();
  verify->add_option("--graph", verify_graph, "single-graph mode (partial-period, lemma7)");
  verify->add_option("--blocks", verify_blocks, "blocks for single-graph mode");
  verify->add_option("--min-vertices", verify_scope.min_vertices, "family lower bound");
  verify->add_option("--max-vertices", verify_scope.max_vertices, "family upper bound");
  verify->add_option("--max-edges", verify_scope.max_edges, "edge filter");
  verify->add_option("--r-max", verify_scope.r_max, "index range (stanley-period)");
  verify->add_option("--k-max", verify_scope.k_max, "label bound range");
  verify->add_option("--t-max", verify_scope.t_max, "dilation range (reciprocity)");
  verify->add_option("--path-max", verify_scope.path_max, "directed-period path bound");
  verify->add_flag("--force", verify_scope.force, "override guardrails");

  std::vector<const char*> argv;
  argv.push_back("labcount");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0) {  // --help
        out << app.help() << "\n";
        return 0;
      }
      err << "usage error: " << e.what() << "\n";
      return 2;
    }

    if (count->parsed()) return run_count(count_opt, out);

    if (fit->parsed()) {
      auto seq = parse_sequence(fit_sequence);
      json params{{"sequence", fit_sequence}};
      FitReport result;
      if (fit_degree >= 0 && fit_period >= 1) {
        params["period"] = fit_period;
        params["degree"] = fit_degree;
        params["offset"] = fit_offset;
        auto qp = fit_fixed(seq, fit_period, fit_degree, fit_offset);
        result.status = qp ? FitReport::Status::found : FitReport::Status::no_fit;
        if (qp) {
          result.period = fit_period;
          result.degree = fit_degree;
          result.offset = fit_offset;
          result.qp = std::move(qp);
        }
      } else {
        params["max_period"] = fit_max_period;
        params["degree_bound"] = fit_degree_bound;
        params["max_offset"] = fit_max_offset;
        result = detect_minimal(seq, fit_max_period, fit_degree_bound, fit_max_offset);
      }
      json report = base_report("fit", params, false);
      report["records"] = json::array({fit_to_json(result)});
      if (fit_gf && result.status == FitReport::Status::found && result.qp->valid_from == 0)
        report["records"][0]["generating_function"] = gf_to_json(to_generating_function(*result.qp));
      report["status"] = result.status == FitReport::Status::found ? "ok" : "inconclusive";
      out << report.dump(2) << "\n";
      return 0;
    }

    if (rays->parsed() || facts_cmd->parsed()) {
      bool is_rays = rays->parsed();
      Multigraph g = load_graph(is_rays ? rays_graph : facts_graph);
      std::string blocks_text = is_rays ? rays_blocks : facts_blocks;
      BlockSpec blocks;
      if (blocks_text.empty()) {
        VertexSubset all;
        for (int v = 0; v < g.n; ++v) all.push_back(v);
        blocks.push_back(all);
      } else {
        blocks = parse_blocks(blocks_text);
      }
      bool force = is_rays ? rays_force : facts_force;
      json params{{"blocks", blocks_to_json(blocks)}};
      json report;
      if (is_rays) {
        params["grading"] = rays_grading;
        Grading grading = rays_grading == "maxlabel" ? Grading::maxlabel : Grading::index;
        if (rays_grading != "maxlabel" && rays_grading != "index")
          throw usage_error("unknown grading: " + rays_grading);
        auto ray_list = extreme_rays(build_system(g, blocks, grading), force);
        report = base_report("rays", params, force);
        json records = json::array();
        for (const auto& ray : ray_list) records.push_back(ray_to_json(ray));
        report["records"] = records;
      } else {
        auto f = polytope_facts(build_system(g, blocks, Grading::maxlabel), force);
        report = base_report("facts", params, force);
        json vertices = json::array();
        for (const auto& vtx : f.vertices) {
          json coords = json::array();
          for (const Rat& c : vtx) coords.push_back(rat_to_string(c));
          vertices.push_back(coords);
        }
        report["records"] = json::array({json{{"dimension", f.dimension},
                                              {"implicit_equalities", f.implicit_equalities},
                                              {"vertices", vertices},
                                              {"denominator_lcm", f.denominator_lcm.str()}}});
      }
      report["graph"] = graph_to_json(g);
      report["status"] = "ok";
      out << report.dump(2) << "\n";
      return 0;
    }

    if (search->parsed()) {
      Multigraph g = load_graph(search_graph);
      std::optional<Labeling> witness;
      long long bound = search_bound >= 0 ? search_bound : 2LL * g.edge_count();
      if (search_kind == "strict")
        witness = search_strict_antimagic(g, search_force);
      else if (search_kind == "weak")
        witness = search_weak_antimagic(g, bound, search_force);
      else if (search_kind == "directed")
        witness = search_directed_antimagic(g, search_force);
      else
        throw usage_error("unknown search kind: " + search_kind);
      json params{{"kind", search_kind}};
      if (search_kind == "weak") params["bound"] = bound;
      json report = base_report("search", params, search_force);
      report["graph"] = graph_to_json(g);
      json rec{{"found", witness.has_value()}};
      if (witness) {
        rec["witness"] = labeling_to_json(*witness);
        json sums = json::array();
        for (long long s : vertex_sums(g, *witness)) sums.push_back(s);
        rec["vertex_sums"] = sums;
      }
      report["records"] = json::array({rec});
      report["status"] = "ok";
      out << report.dump(2) << "\n";
      return 0;
    }

    if (quotient->parsed()) {
      Multigraph g = load_graph(quot_graph);
      Multigraph q = magic_quotient(g, parse_subset(quot_subset));
      if (quot_format == "graph") {
        out << serialize_graph(q);
        return 0;
      }
      json report = base_report("quotient", json{{"subset", quot_subset}}, false);
      report["graph"] = graph_to_json(g);
      report["records"] = json::array({json{{"quotient", graph_to_json(q)},
                                            {"graph_file", serialize_graph(q)}}});
      report["status"] = "ok";
      out << report.dump(2) << "\n";
      return 0;
    }

    if (survey->parsed()) {
      json body = run_survey(survey_family, survey_check, survey_scope);
      json params{{"family", survey_family},
                  {"check", survey_check},
                  {"min_vertices", survey_scope.min_vertices},
                  {"max_vertices", survey_scope.max_vertices}};
      json report = base_report("survey", params, survey_scope.force);
      report.update(body);
      out << report.dump(2) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      if (!verify_graph.empty()) verify_scope.graph = load_graph(verify_graph);
      verify_scope.blocks = parse_blocks(verify_blocks);
      json body = run_verification_suite(verify_suite, verify_scope);
      json params{{"suite", verify_suite},
                  {"min_vertices", verify_scope.min_vertices},
                  {"max_vertices", verify_scope.max_vertices},
                  {"r_max", verify_scope.r_max},
                  {"k_max", verify_scope.k_max},
                  {"t_max", verify_scope.t_max},
                  {"path_max", verify_scope.path_max}};
      if (!verify_graph.empty()) params["graph_file"] = verify_graph;
      if (!verify_blocks.empty()) params["blocks"] = verify_blocks;
      json report = base_report("verify", params, verify_scope.force);
      if (verify_scope.graph) report["graph"] = graph_to_json(*verify_scope.graph);
      report.update(body);
      out << report.dump(2) << "\n";
      return 0;
    }

    err << "usage error: no subcommand\n";
    return 2;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const guardrail_error& e) {
    err << "guardrail refusal: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace labcount
