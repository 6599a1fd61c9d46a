#include "minorforge/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "minorforge/builder.hpp"
#include "minorforge/certify.hpp"
#include "minorforge/edge_list_io.hpp"
#include "minorforge/errors.hpp"
#include "minorforge/generators.hpp"

namespace minorforge {

namespace {

struct Cell {
  std::string generator;
  nlohmann::json params;
  std::uint64_t seed = 0;
  nlohmann::json config;
  bool baseline = false;
};

// Cartesian product over parameters given as scalars or lists.
std::vector<nlohmann::json> expand_params(const nlohmann::json& params) {
  if (!params.is_object()) throw InputError("generator params must be an object");
  std::vector<nlohmann::json> out{nlohmann::json::object()};
  for (const auto& [key, value] : params.items()) {
    const nlohmann::json values = value.is_array() ? value : nlohmann::json::array({value});
    if (values.empty()) throw InputError("generator parameter '" + key + "' has no values");
    std::vector<nlohmann::json> next;
    for (const auto& partial : out)
      for (const auto& v : values) {
        nlohmann::json p = partial;
        p[key] = v;
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Cell> expand_spec(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("generators")) throw InputError("sweep description needs a 'generators' list");
  const nlohmann::json seeds = spec.value("seeds", nlohmann::json::array({0}));
  const nlohmann::json configs = spec.value("configs", nlohmann::json::array({nlohmann::json::object()}));
  const bool baseline = spec.value("baseline", false);
  if (!seeds.is_array() || !configs.is_array()) throw InputError("'seeds' and 'configs' must be lists");
  std::vector<Cell> cells;
  try {
    for (const auto& gen : spec.at("generators")) {
      const auto name = gen.at("name").get<std::string>();
      for (const auto& params : expand_params(gen.value("params", nlohmann::json::object())))
        for (const auto& seed : seeds)
          for (const auto& config : configs) {
            builder_config_from_json(config);
            cells.push_back({name, params, seed.get<std::uint64_t>(), config, baseline});
          }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed sweep description: ") + e.what());
  }
  return cells;
}

std::int64_t first_target_k(const MinorCertificate& cert) {
  for (const auto& stage : cert.provenance.value("stages", nlohmann::json::array()))
    if (stage.value("stage", "") == "parameters" && stage.contains("k")) return stage.at("k").get<std::int64_t>();
  return cert.k;
}

ExperimentRecord run_cell(const Cell& cell) {
  ExperimentRecord r;
  r.generator = cell.generator;
  r.params = cell.params;
  r.seed = cell.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    BuilderConfig cfg = builder_config_from_json(cell.config);
    cfg.seed = cell.seed;
    r.config = to_json(cfg);
    const Graph g = generate(cell.generator, cell.params, cell.seed);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.avg_degree = r.n > 0 ? average_degree(g).to_double() : 0.0;
    const MinorCertificate cert = build_minor(g, cfg);
    if (!verify_certificate(g, cert).valid) throw InvariantViolation("certificate failed re-verification");
    r.certified_k = cert.k;
    if (cell.baseline)
      r.baseline_k = baseline_random_contraction(g, std::min<std::int64_t>(first_target_k(cert), r.n), cell.seed).k;
    const double t = cert.provenance.value("t", 1.0);
    if (r.n > 1 && r.avg_degree > 0) r.bounds = to_json(theoretical_bounds(r.n, r.avg_degree, t, 1.0, cfg.log_base));
    const auto& stages = cert.provenance.at("stages");
    if (!stages.empty() && stages.front().value("stage", "") == "extract")
      r.verdicts = {{"extraction_success", stages.front().at("success")},
                    {"robust_expander", stages.front().at("verdict")}};
  } catch (const Error& e) {
    r.error = e.what();
    r.certified_k = 0;
  }
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
    i = j + 1;
  }
  return rank;
}

}  // namespace

nlohmann::json to_json(const ExperimentRecord& r) {
  nlohmann::json doc = {{"generator", r.generator}, {"params", r.params},           {"seed", r.seed},
                        {"config", r.config},       {"n", r.n},                     {"m", r.m},
                        {"avg_degree", r.avg_degree}, {"certified_k", r.certified_k}, {"baseline_k", r.baseline_k},
                        {"runtime_ms", r.runtime_ms}, {"bounds", r.bounds},         {"verdicts", r.verdicts}};
  if (!r.error.empty()) doc["error"] = r.error;
  return doc;
}

ExperimentRecord record_from_json(const nlohmann::json& doc) {
  ExperimentRecord r;
  try {
    r.generator = doc.at("generator").get<std::string>();
    r.params = doc.at("params");
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.config = doc.at("config");
    r.n = doc.at("n").get<std::int64_t>();
    r.m = doc.at("m").get<std::int64_t>();
    r.avg_degree = doc.at("avg_degree").get<double>();
    r.certified_k = doc.at("certified_k").get<std::int64_t>();
    r.baseline_k = doc.at("baseline_k").get<std::int64_t>();
    r.runtime_ms = doc.at("runtime_ms").get<std::int64_t>();
    r.bounds = doc.at("bounds");
    r.verdicts = doc.at("verdicts");
    r.error = doc.value("error", "");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed experiment record: ") + e.what());
  }
  return r;
}

std::string to_jsonl(const ExperimentRecord& r) { return to_json(r).dump(); }

int default_thread_count() {
  if (const char* env = std::getenv("MINORFORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<ExperimentRecord> run_sweep(const nlohmann::json& spec, const SweepOutputs& out) {
  const std::vector<Cell> cells = expand_spec(spec);
  std::vector<std::optional<ExperimentRecord>> slots(cells.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      ExperimentRecord r = run_cell(cells[i]);
      std::lock_guard lock(mutex);
      slots[i] = std::move(r);
      ready.notify_all();
    }
  };
  const int threads = std::max(1, std::min<int>(out.threads.value_or(default_thread_count()),
                                                static_cast<int>(std::max<std::size_t>(cells.size(), 1))));
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

  std::ofstream jsonl;
  if (out.jsonl) {
    jsonl.open(*out.jsonl, std::ios::binary | std::ios::app);
    if (!jsonl) throw InputError("cannot write " + out.jsonl->string());
  }
  std::vector<ExperimentRecord> records;
  records.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return slots[i].has_value(); });
    records.push_back(std::move(*slots[i]));
    lock.unlock();
    if (jsonl.is_open()) jsonl << to_jsonl(records.back()) << '\n' << std::flush;
  }
  for (std::thread& t : pool) t.join();

  if (out.csv) write_text(*out.csv, summary_csv(records));
  if (out.svg) write_text(*out.svg, scatter_svg(records));
  return records;
}

std::string summary_csv(const std::vector<ExperimentRecord>& records) {
  struct Group {
    std::int64_t runs = 0;
    double sum_k = 0;
  };
  std::map<std::tuple<std::string, std::int64_t, double>, Group> groups;
  for (const ExperimentRecord& r : records) {
    if (!r.error.empty()) continue;
    Group& g = groups[{r.generator, r.n, r.avg_degree}];
    ++g.runs;
    g.sum_k += static_cast<double>(r.certified_k);
  }
  std::string csv = "generator,n,d,runs,mean_k,sqrt_nd\n";
  for (const auto& [key, g] : groups) {
    const auto& [name, n, d] = key;
    csv += name + "," + std::to_string(n) + "," + fmt(d) + "," + std::to_string(g.runs) + "," +
           fmt(g.sum_k / static_cast<double>(g.runs)) + "," + fmt(std::sqrt(static_cast<double>(n) * d)) + "\n";
  }
  return csv;
}

std::string scatter_svg(const std::vector<ExperimentRecord>& records) {
  constexpr double kWidth = 800, kHeight = 600, kLeft = 70, kRight = 30, kTop = 30, kBottom = 60;
  std::vector<std::pair<double, double>> pts;
  for (const ExperimentRecord& r : records)
    if (r.error.empty() && r.certified_k > 0 && r.n > 0 && r.avg_degree > 0)
      pts.push_back({std::log10(std::sqrt(static_cast<double>(r.n) * r.avg_degree)),
                     std::log10(static_cast<double>(r.certified_k))});
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!pts.empty()) {
    x0 = std::floor(std::min_element(pts.begin(), pts.end())->first);
    x1 = std::ceil(std::max_element(pts.begin(), pts.end())->first);
    auto [ylo, yhi] = std::minmax_element(pts.begin(), pts.end(),
                                          [](const auto& a, const auto& b) { return a.second < b.second; });
    y0 = std::floor(ylo->second);
    y1 = std::ceil(yhi->second);
    if (x1 <= x0) x1 = x0 + 1;
    if (y1 <= y0) y1 = y0 + 1;
  }
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); };
  auto py = [&](double y) { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n"
      << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << kWidth - kRight << "\" y2=\""
      << kHeight - kBottom << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kHeight - kBottom
      << "\" stroke=\"black\"/>\n";
  for (double e = x0; e <= x1; e += 1)
    svg << "<text x=\"" << fmt(px(e)) << "\" y=\"" << kHeight - kBottom + 20 << "\" font-size=\"12\" "
        << "text-anchor=\"middle\">1e" << static_cast<int>(e) << "</text>\n";
  for (double e = y0; e <= y1; e += 1)
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py(e) + 4) << "\" font-size=\"12\" "
        << "text-anchor=\"end\">1e" << static_cast<int>(e) << "</text>\n";
  svg << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 15
      << "\" font-size=\"14\" text-anchor=\"middle\">sqrt(n d)</text>\n"
      << "<text x=\"18\" y=\"" << (kTop + kHeight - kBottom) / 2 << "\" font-size=\"14\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 18 " << (kTop + kHeight - kBottom) / 2 << ")\">certified k</text>\n";
  for (const auto& [x, y] : pts)
    svg << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::string records_digest(const std::vector<ExperimentRecord>& records) {
  std::string text;
  for (const ExperimentRecord& r : records) {
    nlohmann::json doc = to_json(r);
    doc.erase("runtime_ms");
    text += doc.dump();
    text += '\n';
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("spearman needs two equal-length samples of size >= 2");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace minorforge
