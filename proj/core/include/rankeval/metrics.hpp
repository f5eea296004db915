#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "rankeval/permutation.hpp"

namespace rankeval {

enum class MetricId {
  // confusion-matrix based
  Recall, Fnr, Fallout, Tnr, Precision, Fdr, Npv, For, Accuracy, Ba, F1, Fm,
  Mcc, Jaccard, Markedness, LrMinus, Informedness, Pt, LrPlus,
  // error based
  Mse, Rmse, Mae, Rmae, Mape, Smape, R2,
  // correlation based
  KendallTau, KendallDistance, SpearmanRho, Ndpm,
  // cumulative-gain based
  Dcg, Ndcg, Mrr, Gmr, MeanRank,
};

inline constexpr int kMetricCount = 35;

enum class Family { Cmb, Eb, Cb, Cgb };
enum class Arity { One, Two };
enum class Orientation { HigherIsMoreSimilar, LowerIsMoreSimilar };

struct MetricDescriptor {
  MetricId id;
  std::string_view name;  // lower_snake_case, used verbatim in CLI and CSV
  Family family;
  Arity arity;
  Orientation orientation;
  bool supports_at_k;
  /// Closed value range when one exists independently of n; used to
  /// normalize differences in the empirical protocols.
  std::optional<std::pair<double, double>> bounded_range;
  /// True for the two registry extensions that Table-style reproduction
  /// outputs exclude by default.
  bool registry_extension;
  std::string_view note;
};

std::span<const MetricDescriptor, kMetricCount> registry();
const MetricDescriptor& descriptor(MetricId id);
std::string_view metric_name(MetricId id);
std::optional<MetricId> metric_from_name(std::string_view name);

std::string_view family_name(Family f);
std::string_view orientation_name(Orientation o);

/// A metric value: disengaged when the metric is undefined on its input
/// (zero denominators and the degenerate pair-count cases).  Serialized as
/// the literal token "undef".
using MetricValue = std::optional<double>;

/// Relevant/retrieved set sizes for the confusion-count substrate.
/// The relevant set comes from the first argument, the retrieved set from
/// the second; relevance scores follow the fixed rel_i = sigma(i) rule.
struct RelevanceConfig {
  int relevant_j = 0;
  int retrieved_k = 0;

  static RelevanceConfig even(int j) { return {j, j}; }
};

/// Shrinks an out-of-range relevance request to floor(n/2) (minimum 1) so
/// protocol defaults sized for long rankings stay usable on small ones.
RelevanceConfig effective_relevance(RelevanceConfig cfg, int n);

struct EvalOptions {
  double f_beta = 1.0;
  /// Off by default: error sums are kept literal (no 1/n).  When set, MSE,
  /// MAE and their rooted forms divide by the evaluated length first.
  bool normalize_errors = false;
};

struct ConfusionCounts {
  std::int64_t tp = 0, fp = 0, fn = 0, tn = 0;
  std::int64_t total() const { return tp + fp + fn + tn; }
  std::int64_t relevant() const { return tp + fn; }
  std::int64_t retrieved() const { return tp + fp; }
};

ConfusionCounts confusion_counts(const Permutation& sigma,
                                 const Permutation& tau, RelevanceConfig cfg);

MetricValue cmb_metric(MetricId id, const ConfusionCounts& counts,
                       double f_beta = 1.0);

MetricValue error_metric(MetricId id, const Permutation& sigma,
                         const Permutation& tau, EvalOptions opts = {});

MetricValue kendall_tau(const Permutation& sigma, const Permutation& tau);
std::int64_t kendall_distance(const Permutation& sigma, const Permutation& tau);
MetricValue spearman_rho(const Permutation& sigma, const Permutation& tau);
MetricValue ndpm(const Permutation& sigma, const Permutation& tau);

double dcg(const Permutation& sigma);
double ndcg(const Permutation& sigma);
/// Largest DCG achievable with the first k discount slots of a length-n
/// ranking; ndcg divides by idcg(n, n).
double idcg(int k, int n);

MetricValue positional_metric(MetricId id, const Permutation& sigma,
                              int relevant_j);

/// Uniform dispatch.  Arity-one metrics are applied to `tau`; `sigma` acts
/// as the reference for the two-input families.
MetricValue evaluate(MetricId id, const Permutation& sigma,
                     const Permutation& tau, RelevanceConfig cfg,
                     EvalOptions opts = {});

/// Restriction to the first k positions.  CMB metrics rebuild confusion
/// counts with j = k on both prefixes; error metrics treat the prefixes as
/// score vectors (denominators use k); correlation metrics work on the
/// prefix pairs (Spearman on within-prefix ranks); cumulative-gain metrics
/// truncate their sums.  Pair-based metrics are undefined at k = 1.
MetricValue evaluate_at_k(MetricId id, const Permutation& sigma,
                          const Permutation& tau, int k,
                          EvalOptions opts = {});

/// Monotone value of `raw` under the metric's orientation: after this
/// transform, larger always means "closer to the reference".
double orient(MetricId id, double raw);

/// Width of the descriptor's bounded range (1.0 when unbounded); empirical
/// protocols measure value differences relative to it.
double range_width(MetricId id);

}  // namespace rankeval
