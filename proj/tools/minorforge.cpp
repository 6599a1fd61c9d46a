#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorforge/bench.hpp"
#include "minorforge/builder.hpp"
#include "minorforge/certify.hpp"
#include "minorforge/edge_list_io.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/expansion.hpp"
#include "minorforge/extraction.hpp"
#include "minorforge/generators.hpp"

namespace mf = minorforge;
using nlohmann::json;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
};

void write_output(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw mf::InputError("cannot write " + g.out);
  file << text;
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string render(const json& doc, const std::string& format) {
  if (format == "jsonl") {
    if (!doc.is_array()) return doc.dump() + "\n";
    std::string text;
    for (const auto& row : doc) text += row.dump() + "\n";
    return text;
  }
  if (format == "csv") {
    const json rows = doc.is_array() ? doc : json::array({doc});
    std::vector<std::string> keys;
    for (const auto& row : rows)
      for (const auto& [key, _] : row.items())
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    std::string text;
    for (std::size_t i = 0; i < keys.size(); ++i) text += (i ? "," : "") + csv_cell(keys[i]);
    text += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < keys.size(); ++i)
        text += (i ? "," : "") + (row.contains(keys[i]) ? csv_cell(row.at(keys[i])) : std::string());
      text += "\n";
    }
    return text;
  }
  return doc.dump() + "\n";
}

json verdict_json(const mf::Verdict& v) {
  json doc = {{"passed", v.passed}, {"exactness", mf::to_string(v.exactness)}, {"checked_subsets", v.checked_subsets}};
  if (v.witness) doc["witness"] = std::vector<mf::Vertex>(v.witness->begin(), v.witness->end());
  if (v.witness_edges) {
    json edges = json::array();
    for (const mf::Edge& e : *v.witness_edges) edges.push_back({e.u, e.v});
    doc["witness_edges"] = edges;
  }
  return doc;
}

mf::Graph load_graph(const std::string& path) {
  if (path.empty() || path == "-") return mf::read_edge_list(std::cin);
  return mf::read_edge_list_file(path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mf::InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw mf::InputError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-minor construction and verification in expanding graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Random seed");
  app.add_option("--out", globals.out, "Output file (default: stdout)");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "jsonl", "csv"}));

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph as an edge list");
  std::string gen_type;
  mf::Vertex gen_n = 0, gen_rows = 0, gen_cols = 0;
  std::int32_t gen_d = 0;
  int gen_dim = 0;
  double gen_p = 0;
  gen->add_option("--type", gen_type, "Generator")
      ->required()
      ->check(CLI::IsMember({"gnp", "random_regular", "grid", "hypercube", "complete"}));
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--p", gen_p, "Edge probability (gnp)");
  gen->add_option("--d", gen_d, "Degree (random_regular)");
  gen->add_option("--rows", gen_rows, "Grid rows");
  gen->add_option("--cols", gen_cols, "Grid columns");
  gen->add_option("--dim", gen_dim, "Hypercube dimension");

  // check
  auto* check = app.add_subcommand("check", "Test an expansion property");
  std::string check_graph = "-", kind;
  double check_eps = 0.1, check_t = 4, check_alpha = 0.5, check_eps1 = 0.1, check_base = 2;
  mf::SearchBudget check_budget;
  check->add_option("--graph", check_graph, "Edge-list file (default: stdin)");
  check->add_option("--kind", kind, "Property to test")
      ->required()
      ->check(CLI::IsMember({"vexp", "talpha", "sparse", "robust"}));
  check->add_option("--eps", check_eps, "eps for vexp / sparse");
  check->add_option("--t", check_t, "t for talpha / robust");
  check->add_option("--alpha", check_alpha, "alpha for talpha");
  check->add_option("--eps1", check_eps1, "eps1 for robust");
  check->add_option("--log-base", check_base, "Logarithm base for rho");
  check->add_option("--exact-n", check_budget.exact_n, "Enumerate every subset up to this many vertices");

  // extract
  auto* extract = app.add_subcommand("extract", "Extract a robust expander subgraph");
  std::string extract_graph = "-", extract_subgraph;
  double extract_eps1 = 0.1, extract_t = 4, extract_base = 2;
  bool calibrate = false;
  extract->add_option("--graph", extract_graph, "Edge-list file (default: stdin)");
  extract->add_option("--eps1", extract_eps1, "eps1");
  extract->add_option("--t", extract_t, "t");
  extract->add_option("--log-base", extract_base, "Logarithm base for rho");
  extract->add_flag("--calibrate", calibrate, "Estimate eps1 on the input first and use it");
  extract->add_option("--subgraph", extract_subgraph, "Write the extracted subgraph as an edge list");

  // build
  auto* build = app.add_subcommand("build", "Build a clique-minor certificate");
  std::string build_graph, stage_log;
  mf::BuilderConfig cfg;
  std::optional<double> build_t;
  std::optional<std::int64_t> build_k;
  build->add_option("--graph", build_graph, "Edge-list file")->required();
  build->add_option("--eps", cfg.eps, "eps in (0, 1)");
  build->add_option("--eps1", cfg.eps1, "eps1 of the extracted expander");
  build->add_option("--t", build_t, "t of the extracted expander (default: half the branch-set size)");
  build->add_option("--k", build_k, "Target clique size");
  build->add_option("--polylog-exp", cfg.polylog_exp, "Exponent c of log^c n");
  build->add_option("--retries", cfg.max_retries, "Retries with halved k");
  build->add_option("--log-base", cfg.log_base, "Logarithm base");
  build->add_option("--stage-log", stage_log, "Write the stage log as JSONL");

  // certify
  auto* certify = app.add_subcommand("certify", "Verify a certificate against a graph");
  std::string cert_graph, cert_file;
  certify->add_option("--graph", cert_graph, "Edge-list file")->required();
  certify->add_option("--cert", cert_file, "Certificate JSON")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment sweep");
  std::string spec_file, csv_file, svg_file;
  std::optional<int> threads;
  bench->add_option("--spec", spec_file, "Sweep description (JSON)")->required();
  bench->add_option("--csv", csv_file, "Summary CSV");
  bench->add_option("--svg", svg_file, "Scatter plot SVG");
  bench->add_option("--threads", threads, "Worker count (default: MINORFORGE_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*gen) {
      json params;
      if (gen_type == "gnp") params = {{"n", gen_n}, {"p", gen_p}};
      else if (gen_type == "random_regular") params = {{"n", gen_n}, {"d", gen_d}};
      else if (gen_type == "grid") params = {{"rows", gen_rows}, {"cols", gen_cols}};
      else if (gen_type == "hypercube") params = {{"dim", gen_dim}};
      else params = {{"n", gen_n}};
      std::ostringstream text;
      mf::write_edge_list(text, mf::generate(gen_type, params, globals.seed));
      write_output(globals, text.str());
    } else if (*check) {
      const mf::Graph g = load_graph(check_graph);
      check_budget.seed = globals.seed;
      mf::Verdict v;
      if (kind == "vexp") v = mf::check_vertex_expansion(g, check_eps, check_budget);
      else if (kind == "talpha") v = mf::check_t_alpha_expanding(g, check_t, check_alpha, check_budget);
      else if (kind == "sparse") v = mf::check_locally_sparse(g, check_eps, check_budget);
      else v = mf::check_robust_expander(g, {check_eps1, check_t, check_base}, check_budget);
      json doc = verdict_json(v);
      doc["kind"] = kind;
      if (kind == "robust") doc["log_base"] = check_base;
      write_output(globals, render(doc, globals.format));
    } else if (*extract) {
      const mf::Graph g = load_graph(extract_graph);
      mf::SearchBudget budget;
      budget.seed = globals.seed;
      std::optional<double> calibrated;
      if (calibrate) {
        calibrated = mf::calibrate_eps1(g, extract_t, budget, extract_base);
        if (*calibrated > 0) extract_eps1 = *calibrated;
      }
      const auto report = mf::extract_expander(g, {extract_eps1, extract_t, extract_base}, budget);
      if (!extract_subgraph.empty()) mf::write_edge_list_file(extract_subgraph, report.subgraph.graph);
      json doc = {{"n", report.subgraph.graph.vertex_count()},
                  {"m", report.subgraph.graph.edge_count()},
                  {"original_ids", report.subgraph.original_ids},
                  {"eps1", extract_eps1},
                  {"t", extract_t},
                  {"log_base", extract_base},
                  {"avg_degree_ratio", report.avg_degree_ratio.to_string()},
                  {"min_degree_ok", report.min_degree_ok},
                  {"iterations", report.iterations},
                  {"success", report.success},
                  {"verdict", verdict_json(report.expander_verdict)}};
      if (calibrated) doc["calibrated_eps1"] = *calibrated;
      write_output(globals, render(doc, globals.format));
    } else if (*build) {
      const mf::Graph g = mf::read_edge_list_file(build_graph);
      cfg.seed = globals.seed;
      cfg.t = build_t;
      cfg.target_k = build_k;
      const mf::MinorCertificate cert = mf::build_minor(g, cfg);
      if (!stage_log.empty()) {
        std::ofstream log(stage_log, std::ios::binary);
        if (!log) throw mf::InputError("cannot write " + stage_log);
        for (const auto& stage : cert.provenance.at("stages")) log << stage.dump() << '\n';
      }
      write_output(globals, mf::certificate_to_json(cert, g).dump() + "\n");
    } else if (*certify) {
      const mf::Graph g = mf::read_edge_list_file(cert_graph);
      const mf::MinorCertificate cert = mf::certificate_from_json(read_json_file(cert_file), g);
      const mf::CertReport report = mf::verify_certificate(g, cert);
      write_output(globals, render(mf::to_json(report), globals.format));
      return report.valid ? 0 : 1;
    } else if (*bench) {
      mf::SweepOutputs outputs;
      if (!globals.out.empty() && globals.out != "-") outputs.jsonl = globals.out;
      if (!csv_file.empty()) outputs.csv = csv_file;
      if (!svg_file.empty()) outputs.svg = svg_file;
      outputs.threads = threads;
      const auto records = mf::run_sweep(read_json_file(spec_file), outputs);
      if (!outputs.jsonl) {
        if (globals.format == "csv") {
          std::cout << mf::summary_csv(records);
        } else {
          json rows = json::array();
          for (const auto& r : records) rows.push_back(mf::to_json(r));
          std::cout << render(rows, globals.format);
        }
      }
      std::cerr << records.size() << " records, digest " << mf::records_digest(records) << "\n";
    }
  } catch (const mf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mf::CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return 2;
  } catch (const mf::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const mf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
