#include "pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectrograph/analytic.hpp"
#include "spectrograph/anomaly.hpp"
#include "spectrograph/error.hpp"
#include "spectrograph/graph_factory.hpp"
#include "spectrograph/io.hpp"
#include "spectrograph/learn.hpp"
#include "spectrograph/logging.hpp"
#include "spectrograph/modulation.hpp"

namespace spectrograph::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string signal;
  std::string output;
  std::string format = "csv";
  std::string family;
  std::uint64_t seed = 0;
  int fir = 0;
  double tolerance = 1e-9;
  double threshold_sigma = 2.0;
  double ridge = 0.0;
  double sigma = 0.1;
  double density = 0.01;
  double p_intra = 0.5;
  Index n = 0;
  Index rows = 0;
  Index cols = 0;
  Index communities = 0;
  Index members = 0;
  Index inter_edges = 0;
  Index trials = 50;
  Index low = -1;
  Index high = -1;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, message);
}

SpectralDecomposition decompose_input(const AdjacencyMatrix& a, const Options& o) {
  DecomposeOptions opts;
  opts.real_tolerance = o.tolerance;
  return decompose(a, opts);
}

GraphSignal load_signal(const Options& o, Index n) {
  require(!o.signal.empty(), "--signal is required");
  GraphSignal x = io::read_signal(std::filesystem::path(o.signal));
  if (x.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "signal has " + std::to_string(x.size()) +
                                                  " values, graph has " + std::to_string(n) +
                                                  " nodes");
  }
  return x;
}

json to_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json to_json(std::span<const Index> v) { return json(std::vector<Index>(v.begin(), v.end())); }

// Emits named columns as CSV with a "node" (or other) index column, or as a
// JSON object of arrays.
void emit_columns(std::ostream& out, const std::string& format, const std::string& index_name,
                  const std::vector<std::pair<std::string, Eigen::VectorXd>>& columns,
                  json extra = json::object()) {
  const Index n = columns.empty() ? 0 : columns.front().second.size();
  if (format == "json") {
    json j = std::move(extra);
    for (const auto& [name, values] : columns) j[name] = to_json(values);
    out << j.dump(2) << '\n';
    return;
  }
  io::CsvTable table;
  table.header.push_back(index_name);
  table.values.resize(n, static_cast<Index>(columns.size()) + 1);
  for (Index i = 0; i < n; ++i) table.values(i, 0) = static_cast<double>(i);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    table.header.push_back(columns[c].first);
    table.values.col(static_cast<Index>(c) + 1) = columns[c].second;
  }
  io::write_csv_table(out, table);
}

void cmd_decompose(const Options& o, std::ostream& out) {
  const auto d = decompose_input(io::read_adjacency(o.input), o);
  json eig = json::array();
  json partition = json::array();
  json partner = json::array();
  for (Index i = 0; i < d.size(); ++i) {
    eig.push_back({d.eigenvalues()(i).real(), d.eigenvalues()(i).imag()});
    partition.push_back(static_cast<int>(d.partition_of(i)));
    partner.push_back(d.partner(i));
  }
  json j;
  j["n"] = d.size();
  j["eigenvalues"] = eig;
  j["partition"] = partition;
  j["partner"] = partner;
  j["gamma1"] = to_json(d.gamma1());
  j["gamma2"] = to_json(d.gamma2());
  j["gamma3"] = to_json(d.gamma3());
  j["gamma4"] = to_json(d.gamma4());
  j["k1"] = d.k1();
  j["k2"] = d.k2();
  j["k"] = d.k();
  j["theta"] = theta_of(d);
  j["condition_estimate"] = d.condition_estimate();
  j["residual"] = d.residual();
  out << j.dump(2) << '\n';
}

void cmd_gft(const Options& o, std::ostream& out) {
  const auto d = decompose_input(io::read_adjacency(o.input), o);
  const auto s = gft(d, load_signal(o, d.size()));
  emit_columns(out, o.format, "index",
               {{"re", s.real()}, {"im", s.imag()}, {"magnitude", s.cwiseAbs()}});
}

void cmd_hilbert(const Options& o, std::ostream& out) {
  const auto a = io::read_adjacency(o.input);
  const auto d = decompose_input(a, o);
  const GraphSignal x = load_signal(o, d.size());
  json extra = json::object();
  GraphSignal xh;
  if (o.fir > 0) {
    const auto filter = design_fir(d, o.fir);
    log::info("FIR order " + std::to_string(filter.order()) + ", design residual " +
              io::format_number(filter.design_residual));
    xh = apply_fir(a, filter, x);
    extra["fir_order"] = filter.order();
    extra["design_residual"] = filter.design_residual;
    extra["taps"] = filter.taps;
  } else {
    TransformOptions opts;
    opts.imag_tolerance = o.tolerance;
    xh = hilbert_transform(d, x, opts);
  }
  emit_columns(out, o.format, "node", {{"hilbert", xh}}, std::move(extra));
}

void cmd_analytic(const Options& o, std::ostream& out) {
  const auto d = decompose_input(io::read_adjacency(o.input), o);
  TransformOptions opts;
  opts.imag_tolerance = o.tolerance;
  const auto xa = analytic_signal(d, load_signal(o, d.size()), opts);
  emit_columns(out, o.format, "node", {{"re", xa.values.real()}, {"im", xa.values.imag()}});
}

void cmd_demod(const Options& o, std::ostream& out) {
  const auto a = io::read_adjacency(o.input);
  const auto d = decompose_input(a, o);
  const auto profile = demodulate(a, d, load_signal(o, d.size()));
  const auto sinks = nodes_without_shift_input(a);
  if (!sinks.empty()) {
    std::string list;
    for (Index i : sinks) list += (list.empty() ? "" : " ") + std::to_string(i);
    log::warn("nodes without shift input (FM equals the unwrapped phase there): " + list);
  }
  json extra = json::object();
  extra["nodes_without_input"] = sinks;
  emit_columns(out, o.format, "node",
               {{"am", profile.am}, {"pm", profile.pm}, {"unwrapped", profile.unwrapped},
                {"fm", profile.fm}},
               std::move(extra));
}

void cmd_features(const Options& o, std::ostream& out) {
  const auto a = io::read_adjacency(o.input);
  const auto d = decompose_input(a, o);
  const auto profile = demodulate(a, d, load_signal(o, d.size()));
  emit_columns(out, o.format, "index", {{"feature", demod_features(profile, d)}});
}

void cmd_anomaly(const Options& o, std::ostream& out) {
  const auto d = decompose_input(io::read_adjacency(o.input), o);
  const auto report = anomaly_scan(d, load_signal(o, d.size()), o.threshold_sigma);
  const Index n = report.scores.size();
  Eigen::VectorXd rank(n);
  Eigen::VectorXd flagged = Eigen::VectorXd::Zero(n);
  for (std::size_t r = 0; r < report.ranking.size(); ++r) {
    rank(report.ranking[r]) = static_cast<double>(r);
  }
  for (Index i : report.flagged) flagged(i) = 1.0;
  if (o.format == "json") {
    json j;
    j["threshold_sigma"] = o.threshold_sigma;
    j["threshold"] = report.threshold;
    j["scores"] = to_json(report.scores);
    j["ranking"] = report.ranking;
    j["flagged"] = report.flagged;
    out << j.dump(2) << '\n';
    return;
  }
  emit_columns(out, o.format, "node", {{"score", report.scores}, {"rank", rank}, {"flagged", flagged}});
}

void cmd_bedrosian(const Options& o, std::ostream& out) {
  std::optional<AdjacencyMatrix> a;
  if (!o.input.empty()) {
    a = io::read_adjacency(o.input);
  } else {
    require(o.n >= 2, "bedrosian needs --input or --n >= 2 for a jittered cycle");
    SeededRng rng(o.seed);
    a = jittered_cycle(o.n, o.sigma, rng);
  }
  const auto d = decompose_input(*a, o);
  std::vector<Index> candidates(d.gamma2().begin(), d.gamma2().end());
  std::vector<double> ms;
  for (Index i : candidates) ms.push_back(smoothness(*a, d.basis().col(i).real()));

  std::vector<std::array<double, 5>> rows;
  for (std::size_t p = 0; p < candidates.size(); ++p) {
    for (std::size_t q = 0; q < candidates.size(); ++q) {
      const Index lo = candidates[p];
      const Index hi = candidates[q];
      if (o.low >= 0 && lo != o.low) continue;
      if (o.high >= 0 && hi != o.high) continue;
      if (!(ms[p] < ms[q])) continue;
      rows.push_back({static_cast<double>(lo), static_cast<double>(hi), ms[p], ms[q],
                      bedrosian_gap(d, lo, hi)});
    }
  }
  if (o.low >= 0 && o.high >= 0 && rows.empty()) {
    // Surfaces the precise precondition failure.
    bedrosian_gap(d, o.low, o.high);
  }
  io::CsvTable table;
  table.header = {"low", "high", "low_smoothness", "high_smoothness", "gap"};
  table.values.resize(static_cast<Index>(rows.size()), 5);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (Index c = 0; c < 5; ++c) table.values(static_cast<Index>(r), c) = rows[r][c];
  }
  if (o.format == "json") {
    json j = json::array();
    for (const auto& row : rows) {
      j.push_back({{"low", static_cast<Index>(row[0])}, {"high", static_cast<Index>(row[1])},
                   {"low_smoothness", row[2]}, {"high_smoothness", row[3]}, {"gap", row[4]}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  io::write_csv_table(out, table);
}

void cmd_theta(const Options& o, std::ostream& out) {
  require(o.n >= 2, "--n must be at least 2");
  require(o.trials >= 1, "--trials must be positive");
  double predicted = 0.0;
  std::function<AdjacencyMatrix(SeededRng&)> make;
  if (o.family == "gaussian") {
    predicted = std::sqrt(2.0 * static_cast<double>(o.n) / std::numbers::pi);
    make = [&](SeededRng& rng) { return gaussian_random(o.n, rng); };
  } else if (o.family == "cycle" || o.family == "jittered-cycle") {
    predicted = o.n % 2 == 0 ? 2.0 : 1.0;
    make = [&](SeededRng& rng) {
      return o.family == "cycle" ? cycle(o.n) : jittered_cycle(o.n, o.sigma, rng);
    };
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown --family '" + o.family + "'");
  }

  std::vector<double> counts;
  std::vector<double> thetas;
  Index parity_failures = 0;
  for (Index t = 0; t < o.trials; ++t) {
    SeededRng rng(o.seed, static_cast<std::uint64_t>(t));
    const auto d = decompose_input(make(rng), o);
    counts.push_back(static_cast<double>(d.k()));
    thetas.push_back(static_cast<double>(d.size() + d.k()) / 2.0);
    try {
      theta_of(d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParityViolation) throw;
      ++parity_failures;
    }
  }
  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const double mean = mean_of(counts);
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var /= static_cast<double>(counts.size());

  json j;
  j["family"] = o.family;
  j["n"] = o.n;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  j["mean_real_eigs"] = mean;
  j["stddev_real_eigs"] = std::sqrt(var);
  j["predicted"] = predicted;
  j["relative_error"] = std::abs(mean - predicted) / predicted;
  j["mean_theta"] = mean_of(thetas);
  j["predicted_theta"] = (static_cast<double>(o.n) + predicted) / 2.0;
  j["parity_failures"] = parity_failures;
  out << j.dump(2) << '\n';
}

void cmd_gen(const Options& o, std::ostream& out) {
  SeededRng rng(o.seed);
  std::optional<AdjacencyMatrix> a;
  if (o.family == "cycle") {
    a = cycle(o.n);
  } else if (o.family == "jittered-cycle") {
    a = jittered_cycle(o.n, o.sigma, rng);
  } else if (o.family == "grid") {
    a = grid2d(o.rows, o.cols);
  } else if (o.family == "weighted-community") {
    a = weighted_community(o.communities, o.members, o.density, rng);
  } else if (o.family == "er-community") {
    a = er_community(o.communities, o.members, o.p_intra, o.inter_edges, rng);
  } else if (o.family == "gaussian") {
    a = gaussian_random(o.n, rng);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown --family '" + o.family + "'");
  }
  io::write_matrix_market(out, a->matrix(),
                          {"seed: " + std::to_string(o.seed), "family: " + o.family});
}

void cmd_learn(const Options& o, std::ostream& out) {
  std::ifstream in(o.input);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + o.input + "'");
  const auto learned = learn_adjacency(io::read_dense_csv(in), o.ridge);
  log::info("objective " + io::format_number(learned.objective) + ", KKT residual " +
            io::format_number(learned.kkt_residual));
  io::write_matrix_market(out, learned.adjacency.matrix(),
                          {"ridge: " + io::format_number(o.ridge),
                           "objective: " + io::format_number(learned.objective),
                           "kkt_residual: " + io::format_number(learned.kkt_residual),
                           "constraint_residual: " + io::format_number(learned.constraint_residual)});
}

void report_error(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
  json j;
  j["error"] = code;
  j["message"] = message;
  j["exit_code"] = exit_code;
  err << j.dump() << '\n';
}

}  // namespace

int run_pipeline(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph Hilbert transform, analytic signal and demodulation toolkit", "spectrograph"};
  app.require_subcommand(1);
  Options o;
  std::function<void(const Options&, std::ostream&)> action;

  auto add = [&](const std::string& name, const std::string& help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--output,-o", o.output, "Write results to this file instead of stdout");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto graph_input = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Adjacency matrix (Matrix Market or dense CSV)")
        ->required();
    sub->add_option("--tolerance", o.tolerance, "Relative tolerance for real eigenvalues")
        ->check(CLI::PositiveNumber);
  };
  auto signal_input = [&](CLI::App* sub) {
    sub->add_option("--signal,-s", o.signal, "Signal, one value per line or a CSV grid")
        ->required();
  };
  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  {
    auto* sub = add("decompose", "Eigenvalues, Gamma sets and theta as JSON", cmd_decompose);
    graph_input(sub);
  }
  {
    auto* sub = add("gft", "Graph Fourier transform of a signal", cmd_gft);
    graph_input(sub);
    signal_input(sub);
    format(sub);
  }
  {
    auto* sub = add("hilbert", "Graph Hilbert transform (spectral, or FIR with --fir)", cmd_hilbert);
    graph_input(sub);
    signal_input(sub);
    format(sub);
    sub->add_option("--fir", o.fir, "Use an order-L polynomial filter")->check(CLI::PositiveNumber);
  }
  {
    auto* sub = add("analytic", "Graph analytic signal", cmd_analytic);
    graph_input(sub);
    signal_input(sub);
    format(sub);
  }
  {
    auto* sub = add("demod", "AM, PM, unwrapped phase and FM per node", cmd_demod);
    graph_input(sub);
    signal_input(sub);
    format(sub);
  }
  {
    auto* sub = add("features", "|GFT(AM)| followed by |GFT(FM)|", cmd_features);
    graph_input(sub);
    signal_input(sub);
    format(sub);
  }
  {
    auto* sub = add("anomaly", "Hilbert-magnitude anomaly scores", cmd_anomaly);
    graph_input(sub);
    signal_input(sub);
    format(sub);
    sub->add_option("--threshold-sigma", o.threshold_sigma, "Flag scores above mean + k stddev");
  }
  {
    auto* sub = add("bedrosian", "Bedrosian gap for Gamma_2 pairs ordered by smoothness", cmd_bedrosian);
    sub->add_option("--input,-i", o.input, "Adjacency matrix; a jittered cycle is generated if absent");
    sub->add_option("--tolerance", o.tolerance)->check(CLI::PositiveNumber);
    sub->add_option("--n", o.n, "Jittered cycle size");
    sub->add_option("--sigma", o.sigma, "Jitter standard deviation")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed);
    sub->add_option("--low", o.low, "Restrict to this low-frequency index");
    sub->add_option("--high", o.high, "Restrict to this high-frequency index");
    format(sub);
  }
  {
    auto* sub = add("theta", "Real-eigenvalue statistics over random draws", cmd_theta);
    sub->add_option("--family", o.family)
        ->required()
        ->check(CLI::IsMember({"gaussian", "cycle", "jittered-cycle"}));
    sub->add_option("--n", o.n)->required();
    sub->add_option("--trials", o.trials);
    sub->add_option("--seed", o.seed);
    sub->add_option("--sigma", o.sigma)->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance", o.tolerance)->check(CLI::PositiveNumber);
  }
  {
    auto* sub = add("gen", "Generate a graph as Matrix Market", cmd_gen);
    sub->add_option("--family", o.family)
        ->required()
        ->check(CLI::IsMember({"cycle", "jittered-cycle", "grid", "weighted-community",
                               "er-community", "gaussian"}));
    sub->add_option("--seed", o.seed);
    sub->add_option("--n", o.n);
    sub->add_option("--rows", o.rows);
    sub->add_option("--cols", o.cols);
    sub->add_option("--sigma", o.sigma)->check(CLI::NonNegativeNumber);
    sub->add_option("--communities", o.communities);
    sub->add_option("--members", o.members);
    sub->add_option("--density", o.density)->check(CLI::Range(0.0, 1.0));
    sub->add_option("--p", o.p_intra)->check(CLI::Range(0.0, 1.0));
    sub->add_option("--inter-edges", o.inter_edges)->check(CLI::NonNegativeNumber);
  }
  {
    auto* sub = add("learn", "Learn an adjacency matrix from CSV exemplars (columns)", cmd_learn);
    sub->add_option("--input,-i", o.input, "Dense CSV, rows = nodes, columns = exemplars")->required();
    sub->add_option("--ridge", o.ridge, "Tikhonov damping")->check(CLI::NonNegativeNumber);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what(), kExitInput);
    return kExitInput;
  }

  try {
    std::ostringstream buffer;
    action(o, buffer);
    if (o.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(o.output);
      if (!file) throw Error(ErrorCode::IoError, "cannot write '" + o.output + "'");
      file << buffer.str();
      if (!file) throw Error(ErrorCode::IoError, "failed writing '" + o.output + "'");
    }
  } catch (const Error& e) {
    const int code = e.numerical() ? kExitNumerical : kExitInput;
    report_error(err, std::string(to_string(e.code())), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what(), kExitNumerical);
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace spectrograph::cli
