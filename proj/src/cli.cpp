#include "lrr/cli.hpp"

#include "lrr/cluster.hpp"
#include "lrr/error.hpp"
#include "lrr/eval.hpp"
#include "lrr/io.hpp"
#include "lrr/recipes.hpp"
#include "lrr/synth.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>

namespace lrr::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

json metric(std::optional<double> value, std::string_view reason) {
  if (value) return json{{"value", *value}};
  return json{{"value", nullptr}, {"reason", reason}};
}

json metric_int(std::optional<int> value, std::string_view reason) {
  if (value) return json{{"value", *value}};
  return json{{"value", nullptr}, {"reason", reason}};
}

json index_array(const std::vector<Eigen::Index>& v) {
  json a = json::array();
  for (auto i : v) a.push_back(i);
  return a;
}

json solver_json(const LrrSolution& s) {
  return json{{"iterations", s.iterations},
              {"converged", s.converged},
              {"residual_constraint", s.residual_constraint},
              {"residual_split", s.residual_split},
              {"objective", s.objective},
              {"objective_trace", s.objective_trace},
              {"used_reduced_dictionary", s.used_reduced_dictionary}};
}

json base_record(const ExperimentConfig& c) {
  json r;
  r["schema_version"] = kSchemaVersion;
  r["command"] = c.command;
  r["config"] = c.to_json();
  r["solver"] = nullptr;
  r["labels"] = nullptr;
  r["outliers"] = nullptr;
  r["artifacts"] = json::array();
  return r;
}

void write_record(const ExperimentConfig& c, json& record, Clock::time_point t0) {
  record["timing"] = json{{"total_seconds", seconds_since(t0)}};
  io::write_atomic(c.out / "result.json", record.dump(2) + "\n");
}

// Writes M to out/name and notes it in the record.
void emit_csv(const ExperimentConfig& c, json& record, const std::string& name,
              const DenseMatrix& M, const std::vector<std::string>& header = {}) {
  io::write_csv(c.out / name, M, header);
  record["artifacts"].push_back(name);
}

DenseMatrix load(const ExperimentConfig& c, const fs::path& path) {
  DenseMatrix M = io::read_csv(path, c.header);
  if (!M.allFinite()) throw ArgumentError(path.string() + ": non-finite entries");
  return c.normalize ? normalize_unit_range(M) : M;
}

DenseMatrix column_norms(const DenseMatrix& E) {
  return E.colwise().norm().transpose();
}

}  // namespace

DenseMatrix normalize_unit_range(const DenseMatrix& M) {
  const double lo = M.minCoeff();
  const double span = M.maxCoeff() - lo;
  if (span == 0.0) return DenseMatrix::Zero(M.rows(), M.cols());
  return (M.array() - lo) / span;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnv);
  if (env == nullptr || *env == '\0') return 0;
  const std::string s(env);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
    throw ArgumentError(std::string(kSeedEnv) + " must be a non-negative integer, got '" + s + "'");
  }
  return std::stoull(s);
}

void ExperimentConfig::validate() {
  if (lambda && !lambda_preset.empty()) {
    throw ArgumentError("--lambda and --lambda-preset are mutually exclusive");
  }
  if (!lambda_preset.empty()) {
    if (lambda_preset != "motion") {
      throw ArgumentError("unknown --lambda-preset '" + lambda_preset + "' (expected motion)");
    }
    lambda = kMotionLambda;
  }
  const bool solves = command == "solve" || command == "segment" || command == "detect-outliers";
  if (solves) {
    if (!lambda) throw ArgumentError("--lambda or --lambda-preset is required");
    solver.lambda = *lambda;
    solver.seed = seed;
    solver.validate();
    if (input.empty()) throw ArgumentError("--input is required");
  }
  if (!(tau > 0.0 && tau < 1.0)) throw ArgumentError("--tau must lie in (0, 1)");
  if (delta && !(*delta > 0.0)) throw ArgumentError("--delta must be positive");
  if (k && *k < 1) throw ArgumentError("--k must be a positive integer or 'auto'");
  if (command == "detect-outliers" && !delta) throw ArgumentError("--delta is required");
}

json ExperimentConfig::to_json() const {
  json j;
  j["input"] = input.string();
  j["dict"] = dict.empty() ? json(nullptr) : json(dict.string());
  j["self"] = dict.empty();
  j["truth"] = truth.empty() ? json(nullptr) : json(truth.string());
  j["header"] = header;
  j["normalize"] = normalize;
  j["lambda"] = lambda ? json(*lambda) : json(nullptr);
  j["lambda_preset"] = lambda_preset.empty() ? json(nullptr) : json(lambda_preset);
  j["error_norm"] = std::string(to_string(model));
  j["solver"] = json{{"mu_init", solver.mu_init}, {"mu_max", solver.mu_max}, {"rho", solver.rho},
                     {"eps", solver.eps},         {"max_iters", solver.max_iters}};
  j["tau"] = tau;
  j["delta"] = delta ? json(*delta) : json(nullptr);
  j["k"] = k ? json(*k) : json("auto");
  j["seed"] = seed;
  if (!figure.empty()) j["figure"] = figure;
  return j;
}

CommandResult cmd_solve(ExperimentConfig c) {
  const auto t0 = Clock::now();
  c.validate();
  const DenseMatrix X = load(c, c.input);

  LrrSolution sol;
  if (c.dict.empty()) {
    sol = solve_lrr_self(X, c.model, c.solver);
  } else {
    const DenseMatrix A = load(c, c.dict);
    if (A.rows() != X.rows()) {
      throw ArgumentError("dimension mismatch: X has " + std::to_string(X.rows()) +
                          " rows but the dictionary has " + std::to_string(A.rows()));
    }
    sol = solve_lrr(X, A, c.model, c.solver);
  }

  json r = base_record(c);
  r["solver"] = solver_json(sol);
  emit_csv(c, r, "Z.csv", sol.Z);
  emit_csv(c, r, "E.csv", sol.E);

  std::optional<double> rec;
  if (!c.v0.empty()) {
    const DenseMatrix V0 = io::read_csv(c.v0, c.header);
    if (V0.rows() != sol.Z.rows()) {
      throw ArgumentError("dimension mismatch: V0 must have one row per dictionary atom");
    }
    rec = eval::recovery_error(sol.Z, V0);
  }
  r["metrics"] = json{{"accuracy", metric(std::nullopt, "not computed by solve")},
                      {"auc", metric(std::nullopt, "not computed by solve")},
                      {"recovery_error", metric(rec, "no ground truth")},
                      {"k_hat", metric_int(std::nullopt, "not computed by solve")}};
  write_record(c, r, t0);
  return {r, sol.converged ? kExitOk : kExitNotConverged};
}

CommandResult cmd_segment(ExperimentConfig c) {
  const auto t0 = Clock::now();
  c.validate();
  const DenseMatrix X = load(c, c.input);
  std::vector<int> truth;
  if (!c.truth.empty()) {
    truth = io::read_labels(c.truth, c.header);
    if (static_cast<Eigen::Index>(truth.size()) != X.cols()) {
      throw ArgumentError("dimension mismatch: truth has " + std::to_string(truth.size()) +
                          " labels for " + std::to_string(X.cols()) + " samples");
    }
  }

  SegmentOptions so;
  so.k = c.k;
  so.model = c.model;
  so.solver = c.solver;
  so.tau = c.tau;
  so.delta = c.delta;
  so.seed = c.seed;
  const SegmentationResult seg = segment(X, so);

  json r = base_record(c);
  r["solver"] = solver_json(seg.solution);
  r["labels"] = seg.labels;
  r["k"] = seg.k;
  if (c.delta) r["outliers"] = index_array(seg.outliers);
  io::write_labels(c.out / "labels.csv", seg.labels);
  r["artifacts"].push_back("labels.csv");
  emit_csv(c, r, "affinity.csv", seg.affinity.W);

  std::optional<double> acc;
  if (!truth.empty()) acc = recipes::authentic_accuracy(seg.labels, truth);
  r["metrics"] = json{{"accuracy", metric(acc, "no ground truth")},
                      {"auc", metric(std::nullopt, "not computed by segment")},
                      {"recovery_error", metric(std::nullopt, "no ground truth")},
                      {"k_hat", metric_int(seg.k_hat, "k given explicitly")}};
  write_record(c, r, t0);
  return {r, seg.solution.converged ? kExitOk : kExitNotConverged};
}

CommandResult cmd_detect_outliers(ExperimentConfig c) {
  const auto t0 = Clock::now();
  c.validate();
  const DenseMatrix X = load(c, c.input);
  std::vector<int> mask;
  if (!c.truth.empty()) {
    mask = io::read_labels(c.truth, c.header);
    if (static_cast<Eigen::Index>(mask.size()) != X.cols()) {
      throw ArgumentError("dimension mismatch: truth mask length differs from sample count");
    }
  }

  const LrrSolution sol = solve_lrr_self(X, c.model, c.solver);
  const std::vector<Eigen::Index> detected = detect_outliers(sol.E, *c.delta);
  const DenseMatrix norms = column_norms(sol.E);

  json r = base_record(c);
  r["solver"] = solver_json(sol);
  r["outliers"] = index_array(detected);
  emit_csv(c, r, "e_column_norms.csv", norms, {"norm"});

  std::optional<double> auc;
  std::string auc_reason = "no ground truth";
  if (!mask.empty()) {
    eval::ScoredBinary sb;
    for (Eigen::Index i = 0; i < norms.rows(); ++i) {
      sb.scores.push_back(norms(i, 0));
      sb.truth.push_back(mask[static_cast<std::size_t>(i)] != 0);
    }
    const auto pos = std::count(sb.truth.begin(), sb.truth.end(), true);
    if (pos == 0 || pos == static_cast<long>(sb.truth.size())) {
      auc_reason = "truth mask has a single class";
    } else {
      auc = eval::auc(sb);
      // ROC by sweeping delta over every distinct column norm, high to low
      std::vector<double> thresholds(sb.scores);
      std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
      thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
      const double P = static_cast<double>(pos);
      const double N = static_cast<double>(sb.truth.size()) - P;
      DenseMatrix roc(static_cast<Eigen::Index>(thresholds.size()) + 1, 3);
      roc.row(0) << thresholds.front() + 1.0, 0.0, 0.0;
      for (std::size_t t = 0; t < thresholds.size(); ++t) {
        double tp = 0, fp = 0;
        for (std::size_t i = 0; i < sb.scores.size(); ++i) {
          if (sb.scores[i] >= thresholds[t]) (sb.truth[i] ? tp : fp) += 1.0;
        }
        roc.row(static_cast<Eigen::Index>(t) + 1) << thresholds[t], fp / N, tp / P;
      }
      emit_csv(c, r, "roc.csv", roc, {"delta", "fpr", "tpr"});
    }
  }
  r["metrics"] = json{{"accuracy", metric(std::nullopt, "not computed by detect-outliers")},
                      {"auc", metric(auc, auc_reason)},
                      {"recovery_error", metric(std::nullopt, "no ground truth")},
                      {"k_hat", metric_int(std::nullopt, "not computed by detect-outliers")}};
  write_record(c, r, t0);
  return {r, sol.converged ? kExitOk : kExitNotConverged};
}

namespace {

json run_json(const recipes::LambdaRun& run) {
  return json{{"lambda", run.lambda},
              {"recovery_error", run.recovery_error},
              {"row_space_exact", run.row_space_exact},
              {"support_exact", run.support_exact},
              {"delta", run.delta},
              {"detected", index_array(run.detected)},
              {"auc", run.auc ? json(*run.auc) : json(nullptr)},
              {"distance_bound_gap", run.distance_bound_gap},
              {"solver", solver_json(run.solution)}};
}

void emit_sweep(const ExperimentConfig& c, json& r, const recipes::Replication& rep) {
  const auto m = static_cast<Eigen::Index>(rep.runs.size());
  DenseMatrix sweep(m, 8);
  DenseMatrix norms(rep.data.samples(), m + 2);
  std::vector<std::string> norm_header{"sample", "planted"};
  std::vector<bool> planted(static_cast<std::size_t>(rep.data.samples()), false);
  for (auto i : recipes::planted_columns(rep.data)) planted[static_cast<std::size_t>(i)] = true;
  for (Eigen::Index i = 0; i < rep.data.samples(); ++i) {
    norms(i, 0) = static_cast<double>(i);
    norms(i, 1) = planted[static_cast<std::size_t>(i)] ? 1.0 : 0.0;
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto& run = rep.runs[static_cast<std::size_t>(j)];
    sweep.row(j) << run.lambda, run.recovery_error, run.row_space_exact ? 1.0 : 0.0,
        run.support_exact ? 1.0 : 0.0, static_cast<double>(run.detected.size()),
        run.auc.value_or(std::nan("")), static_cast<double>(run.solution.iterations),
        run.solution.objective;
    norms.col(j + 2) = column_norms(run.solution.E);
    norm_header.push_back("lambda_" + io::format_double(run.lambda));
  }
  emit_csv(c, r, "lambda_sweep.csv", sweep,
           {"lambda", "recovery_error", "row_space_exact", "support_exact", "n_detected", "auc",
            "iterations", "objective"});
  emit_csv(c, r, "e_column_norms.csv", norms, norm_header);
}

}  // namespace

CommandResult cmd_replicate(ExperimentConfig c) {
  const auto t0 = Clock::now();
  c.validate();
  const recipes::Figure fig = recipes::parse_figure(c.figure);
  const recipes::Replication rep = recipes::replicate(fig, c.seed, c.parallel);

  json r = base_record(c);
  json runs = json::array();
  bool converged = true;
  for (const auto& run : rep.runs) {
    runs.push_back(run_json(run));
    converged = converged && run.solution.converged;
  }
  json repl{{"figure", std::string(recipes::to_string(fig))},
            {"seed", c.seed},
            {"samples", rep.data.samples()},
            {"ambient", rep.data.X.rows()},
            {"rank", rep.data.V0.cols()},
            {"planted", index_array(recipes::planted_columns(rep.data))},
            {"error_ratio", rep.data.error_ratio()},
            {"noise_level", rep.noise_level ? json(*rep.noise_level) : json(nullptr)},
            {"runs", runs}};
  if (!rep.corrupted_affinity_degrees.empty()) {
    repl["corrupted_affinity_degrees"] = rep.corrupted_affinity_degrees;
  }
  r["replication"] = repl;

  if (!rep.runs.empty()) emit_sweep(c, r, rep);
  if (rep.segmentation) {
    r["solver"] = solver_json(rep.segmentation->solution);
    r["labels"] = rep.segmentation->labels;
    io::write_labels(c.out / "labels.csv", rep.segmentation->labels);
    r["artifacts"].push_back("labels.csv");
    emit_csv(c, r, "affinity.csv", rep.segmentation->affinity.W);
  } else if (!rep.runs.empty()) {
    emit_csv(c, r, "affinity.csv", build_affinity(rep.runs.front().solution.Z).W);
  }
  if (!rep.corrupted_affinity_degrees.empty()) {
    DenseMatrix deg(static_cast<Eigen::Index>(rep.corrupted_affinity_degrees.size()), 2);
    for (std::size_t i = 0; i < rep.corrupted_affinity_degrees.size(); ++i) {
      deg.row(static_cast<Eigen::Index>(i)) << static_cast<double>(rep.data.corrupted_indices[i]),
          rep.corrupted_affinity_degrees[i];
    }
    emit_csv(c, r, "affinity_degrees.csv", deg, {"sample", "degree"});
  }

  std::optional<double> auc;
  std::optional<double> rec;
  if (rep.runs.size() == 1) {
    auc = rep.runs.front().auc;
    rec = rep.runs.front().recovery_error;
  }
  const char* per_run = "per-lambda values under replication.runs";
  r["metrics"] = json{
      {"accuracy", metric(rep.accuracy, rep.runs.size() > 1 ? per_run : "figure has no segmentation")},
      {"auc", metric(auc, rep.runs.size() > 1 ? per_run : "no planted errors")},
      {"recovery_error", metric(rec, rep.runs.size() > 1 ? per_run : "not computed for this figure")},
      {"k_hat", metric_int(std::nullopt, "figure fixes k")}};
  write_record(c, r, t0);
  return {r, converged ? kExitOk : kExitNotConverged};
}

CommandResult cmd_generate(ExperimentConfig c) {
  const auto t0 = Clock::now();
  c.validate();
  synth::SyntheticDataset ds;
  if (!c.figure.empty()) {
    switch (recipes::parse_figure(c.figure)) {
      case recipes::Figure::fig3: ds = recipes::fig3_dataset(c.seed); break;
      case recipes::Figure::fig4: ds = recipes::fig4_dataset(c.seed); break;
      case recipes::Figure::fig5a: ds = recipes::fig5_dataset(c.seed, 0.7); break;
      case recipes::Figure::fig5b: ds = recipes::fig5_dataset(c.seed, 3.5); break;
      case recipes::Figure::fig6: ds = recipes::fig6_dataset(c.seed).data; break;
    }
  } else {
    if (c.subspaces < 1 || c.dim < 1 || c.ambient < 1 || c.per_subspace < 1) {
      throw ArgumentError("generate needs --figure or positive --subspaces, --dim, --ambient, --per");
    }
    const auto mode = c.disjoint ? synth::SubspaceMode::disjoint : synth::SubspaceMode::independent;
    ds = synth::sample(synth::gen_ensemble(c.subspaces, c.dim, c.ambient, mode, c.seed),
                       c.per_subspace, c.seed + 1);
  }

  json r = base_record(c);
  emit_csv(c, r, "X.csv", ds.X);
  emit_csv(c, r, "V0.csv", ds.V0);
  io::write_labels(c.out / "labels.csv", ds.true_labels);
  std::vector<int> mask(static_cast<std::size_t>(ds.samples()), 0);
  for (auto i : recipes::planted_columns(ds)) mask[static_cast<std::size_t>(i)] = 1;
  io::write_labels(c.out / "planted.csv", mask);
  r["artifacts"].push_back("labels.csv");
  r["artifacts"].push_back("planted.csv");
  r["labels"] = ds.true_labels;
  r["outliers"] = index_array(recipes::planted_columns(ds));
  r["dataset"] = json{{"samples", ds.samples()},
                      {"ambient", ds.X.rows()},
                      {"rank", ds.V0.cols()},
                      {"error_ratio", ds.error_ratio()}};
  r["metrics"] = json{{"accuracy", metric(std::nullopt, "generate does not evaluate")},
                      {"auc", metric(std::nullopt, "generate does not evaluate")},
                      {"recovery_error", metric(std::nullopt, "generate does not evaluate")},
                      {"k_hat", metric_int(std::nullopt, "generate does not evaluate")}};
  write_record(c, r, t0);
  return {r, kExitOk};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  ExperimentConfig c;
  try {
    c.seed = default_seed();
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Low-rank representation: subspace recovery, segmentation and outlier detection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lrr 1.0.0");

  std::string error_norm = "l21";
  std::string k_text = "auto";
  std::string out_dir = ".";
  std::string input, dict, truth, v0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
    sub->add_option("--seed", c.seed, "Random seed (default from LRR_SEED, else 0)");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Data matrix X as CSV (d rows, n samples as columns)")
        ->required();
    sub->add_option("--lambda", c.lambda, "Error penalty weight");
    sub->add_option("--lambda-preset", c.lambda_preset, "Named lambda: motion (4)");
    sub->add_option("--error-norm", error_norm, "l21, l1 or fro")->capture_default_str();
    sub->add_flag("--normalize", c.normalize, "Rescale entries onto [0, 1] before solving");
    sub->add_flag("--header", c.header, "Input CSV files carry a header line");
    sub->add_option("--mu", c.solver.mu_init, "Initial penalty")->capture_default_str();
    sub->add_option("--mu-max", c.solver.mu_max, "Penalty cap")->capture_default_str();
    sub->add_option("--rho", c.solver.rho, "Penalty growth factor")->capture_default_str();
    sub->add_option("--eps", c.solver.eps, "Stopping tolerance")->capture_default_str();
    sub->add_option("--max-iters", c.solver.max_iters, "Iteration cap")->capture_default_str();
    add_common(sub);
  };

  auto* solve = app.add_subcommand("solve", "Solve for Z*, E*; writes Z.csv, E.csv, result.json");
  add_solver(solve);
  auto* dict_opt = solve->add_option("--dict", dict, "Dictionary A as CSV");
  solve->add_flag("--self", "Use X as its own dictionary (default)")->excludes(dict_opt);
  solve->add_option("--v0", v0, "Row-space basis of the clean data, for recovery_error");

  auto* seg = app.add_subcommand("segment", "Segment samples by spectral clustering of Z*");
  add_solver(seg);
  seg->add_option("--k", k_text, "Number of subspaces, or auto")->capture_default_str();
  seg->add_option("--tau", c.tau, "Soft threshold for --k auto")->capture_default_str();
  seg->add_option("--delta", c.delta, "Also flag outliers with ||E*_:,i|| > delta");
  seg->add_option("--truth", truth, "Ground-truth labels CSV (negative = outlier, ignored)");

  auto* det = app.add_subcommand("detect-outliers", "Flag columns of E* above delta");
  add_solver(det);
  det->add_option("--delta", c.delta, "Column-norm threshold")->required();
  det->add_option("--truth", truth, "0/1 outlier mask CSV; enables the ROC sweep and AUC");

  auto* rep = app.add_subcommand("replicate", "Run a synthetic experiment recipe");
  rep->add_option("figure", c.figure, "fig3, fig4, fig5a, fig5b or fig6")->required();
  rep->add_flag("!--serial", c.parallel, "Solve lambda grid points one at a time");
  add_common(rep);

  auto* gen = app.add_subcommand("generate", "Write a synthetic dataset as CSV");
  gen->add_option("--figure", c.figure, "Recipe dataset: fig3, fig4, fig5a, fig5b or fig6");
  gen->add_option("--subspaces", c.subspaces, "Number of subspaces");
  gen->add_option("--dim", c.dim, "Subspace dimension");
  gen->add_option("--ambient", c.ambient, "Ambient dimension");
  gen->add_option("--per", c.per_subspace, "Samples per subspace");
  gen->add_flag("--disjoint", c.disjoint, "Disjoint rather than independent subspaces");
  add_common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    c.input = input;
    c.dict = dict;
    c.truth = truth;
    c.v0 = v0;
    c.out = out_dir;
    c.model = parse_error_model(error_norm);
    if (k_text != "auto") {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(k_text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != k_text.size()) {
        throw ArgumentError("--k must be a positive integer or 'auto'");
      }
      c.k = k;
    }

    CommandResult res;
    const CLI::App* chosen = app.get_subcommands().front();
    c.command = chosen->get_name();
    if (chosen == solve) res = cmd_solve(c);
    else if (chosen == seg) res = cmd_segment(c);
    else if (chosen == det) res = cmd_detect_outliers(c);
    else if (chosen == rep) res = cmd_replicate(c);
    else res = cmd_generate(c);

    if (res.exit_code == kExitNotConverged) {
      err << "warning: solver did not converge; results written to " << c.out.string() << "\n";
    }
    out << (c.out / "result.json").string() << "\n";
    return res.exit_code;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FeasibilityError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace lrr::cli
