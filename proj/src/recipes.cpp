#include "lrr/recipes.hpp"

#include "lrr/error.hpp"
#include "lrr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

namespace lrr::recipes {

namespace {

// Independent stream per generator stage.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stage) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + stage;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

enum Stage : std::uint64_t { kEnsemble = 1, kSample, kCorrupt, kNoise, kOutlier };

std::vector<LambdaRun> run_grid(const synth::SyntheticDataset& ds,
                                const std::vector<double>& grid, bool parallel) {
  std::vector<LambdaRun> runs;
  if (!parallel) {
    for (double lambda : grid) runs.push_back(run_lambda(ds, lambda));
    return runs;
  }
  std::vector<std::future<LambdaRun>> jobs;
  for (double lambda : grid) {
    jobs.push_back(std::async(std::launch::async, [&ds, lambda] { return run_lambda(ds, lambda); }));
  }
  for (auto& j : jobs) runs.push_back(j.get());
  return runs;
}

}  // namespace

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::fig5a: return "fig5a";
    case Figure::fig5b: return "fig5b";
    case Figure::fig6: return "fig6";
  }
  return "unknown";
}

Figure parse_figure(std::string_view name) {
  for (auto f : {Figure::fig3, Figure::fig4, Figure::fig5a, Figure::fig5b, Figure::fig6}) {
    if (to_string(f) == name) return f;
  }
  throw ArgumentError("unknown figure '" + std::string(name) +
                      "' (expected fig3, fig4, fig5a, fig5b or fig6)");
}

synth::SyntheticDataset fig3_dataset(std::uint64_t seed) {
  const auto ens =
      synth::gen_ensemble(11, 20, 200, synth::SubspaceMode::disjoint, sub_seed(seed, kEnsemble));
  return synth::normalize_columns(synth::sample(ens, 20, sub_seed(seed, kSample)));
}

synth::SyntheticDataset fig4_dataset(std::uint64_t seed) {
  const auto ens =
      synth::gen_ensemble(5, 4, 200, synth::SubspaceMode::disjoint, sub_seed(seed, kEnsemble));
  auto ds = synth::sample(ens, 40, sub_seed(seed, kSample));
  ds = synth::add_outliers(std::move(ds), 50, 3.0, sub_seed(seed, kOutlier));
  return synth::normalize_columns(std::move(ds));
}

synth::SyntheticDataset fig5_dataset(std::uint64_t seed, double magnitude_scale) {
  const auto ens =
      synth::gen_ensemble(5, 4, 200, synth::SubspaceMode::disjoint, sub_seed(seed, kEnsemble));
  auto ds = synth::sample(ens, 40, sub_seed(seed, kSample));
  ds = synth::corrupt_samples(std::move(ds), 0.1, magnitude_scale, sub_seed(seed, kCorrupt));
  return synth::normalize_columns(std::move(ds));
}

double calibrate_noise_level(const synth::SyntheticDataset& base, std::uint64_t noise_seed,
                             double target, double tol) {
  auto ratio_at = [&](double level) {
    return synth::normalized_error_ratio(synth::add_noise(base, level, noise_seed));
  };
  if (ratio_at(0.0) >= target) return 0.0;
  double lo = 0.0;
  double hi = 0.25;
  while (ratio_at(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e3) throw ArgumentError("calibrate_noise_level: target error ratio unreachable");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (ratio_at(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Fig6Dataset fig6_dataset(std::uint64_t seed, const Fig6Params& p) {
  const auto ens = synth::gen_ensemble(p.subspaces, p.dim, p.ambient, synth::SubspaceMode::disjoint,
                                       sub_seed(seed, kEnsemble));
  auto ds = synth::sample(ens, p.per_subspace, sub_seed(seed, kSample));
  ds = synth::corrupt_samples(std::move(ds), p.corrupted_fraction, p.corruption_scale,
                              sub_seed(seed, kCorrupt));
  ds = synth::add_outliers(std::move(ds), p.outliers, p.outlier_scale, sub_seed(seed, kOutlier));

  Fig6Dataset out;
  out.noise_level = calibrate_noise_level(ds, sub_seed(seed, kNoise), p.target_error_ratio);
  ds = synth::add_noise(std::move(ds), out.noise_level, sub_seed(seed, kNoise));
  out.data = synth::normalize_columns(std::move(ds));
  return out;
}

std::vector<Eigen::Index> planted_columns(const synth::SyntheticDataset& ds) {
  std::vector<Eigen::Index> out = ds.outlier_indices;
  out.insert(out.end(), ds.corrupted_indices.begin(), ds.corrupted_indices.end());
  std::sort(out.begin(), out.end());
  return out;
}

LambdaRun run_lambda(const synth::SyntheticDataset& ds, double lambda, const SolverOptions& base) {
  SolverOptions opts = base;
  opts.lambda = lambda;

  LambdaRun run;
  run.lambda = lambda;
  run.solution = solve_lrr_self(ds.X, ErrorModel::l21, opts);
  run.recovery_error = eval::recovery_error(run.solution.Z, ds.V0);
  run.row_space_exact = run.recovery_error <= kExactRecoveryTol;
  run.delta = kRecipeDelta;
  run.detected = detect_outliers(run.solution.E, run.delta);
  const auto planted = planted_columns(ds);
  run.support_exact = run.detected == planted;

  const auto n = ds.samples();
  if (!planted.empty() && static_cast<Eigen::Index>(planted.size()) < n) {
    eval::ScoredBinary scored;
    std::vector<bool> truth(static_cast<std::size_t>(n), false);
    for (auto i : planted) truth[static_cast<std::size_t>(i)] = true;
    for (Eigen::Index i = 0; i < n; ++i) scored.scores.push_back(run.solution.E.col(i).norm());
    scored.truth = std::move(truth);
    run.auc = eval::auc(scored);
  }

  const double bound = static_cast<double>(std::min(ds.X.rows(), n) + ds.V0.cols());
  run.distance_bound_gap = bound - (run.solution.Z - ds.V0 * ds.V0.transpose()).norm();
  return run;
}

double authentic_accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
  std::vector<int> p;
  std::vector<int> t;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] < 0) continue;
    p.push_back(predicted[i]);
    t.push_back(truth[i]);
  }
  return eval::segmentation_accuracy(eval::LabeledPrediction::from_labels(p, t),
                                     eval::MatchStrategy::automatic);
}

std::vector<double> affinity_degrees(const DenseMatrix& Z_star,
                                     const std::vector<Eigen::Index>& samples, double rel_tol) {
  const SkinnySvd f = skinny_svd(Z_star, kSolutionRankTol);
  const DenseMatrix S = (f.U * f.U.transpose()).cwiseAbs();
  const double cutoff = rel_tol * S.maxCoeff();
  std::vector<double> out;
  for (auto i : samples) {
    // the diagonal entry is the sample itself
    const auto row = S.row(i);
    double degree = static_cast<double>((row.array() > cutoff).count());
    if (S(i, i) > cutoff) degree -= 1.0;
    out.push_back(degree);
  }
  return out;
}

Replication replicate(Figure figure, std::uint64_t seed, bool parallel) {
  Replication rep;
  rep.figure = figure;
  rep.seed = seed;

  switch (figure) {
    case Figure::fig3: {
      rep.data = fig3_dataset(seed);
      rep.runs.push_back(run_lambda(rep.data, kFig3Lambda));
      SegmentOptions so;
      so.k = 11;
      so.seed = seed;
      rep.segmentation = segment_solution(rep.runs.front().solution, so);
      rep.accuracy = authentic_accuracy(rep.segmentation->labels, rep.data.true_labels);
      break;
    }
    case Figure::fig4: {
      rep.data = fig4_dataset(seed);
      rep.runs = run_grid(rep.data, kFig4LambdaGrid, parallel);
      break;
    }
    case Figure::fig5a:
    case Figure::fig5b: {
      rep.data = fig5_dataset(seed, figure == Figure::fig5a ? 0.7 : 3.5);
      rep.runs = run_grid(rep.data, kFig5LambdaGrid, parallel);
      // lambda chosen so that the support of E* best identifies the corrupted samples
      const auto best = std::max_element(rep.runs.begin(), rep.runs.end(),
                                         [](const LambdaRun& a, const LambdaRun& b) {
                                           return a.auc.value_or(0) < b.auc.value_or(0);
                                         });
      rep.corrupted_affinity_degrees =
          affinity_degrees(best->solution.Z, rep.data.corrupted_indices);
      break;
    }
    case Figure::fig6: {
      auto f6 = fig6_dataset(seed);
      rep.data = std::move(f6.data);
      rep.noise_level = f6.noise_level;
      rep.runs.push_back(run_lambda(rep.data, kFig6Lambda));
      SegmentOptions so;
      so.k = 10;
      so.seed = seed;
      rep.segmentation = segment_solution(rep.runs.front().solution, so);
      rep.accuracy = authentic_accuracy(rep.segmentation->labels, rep.data.true_labels);
      break;
    }
  }
  return rep;
}

}  // namespace lrr::recipes
