#pragma once

#include <string>
#include <vector>

#include "geoclust/dissimilarity.hpp"
#include "geoclust/hierarchy.hpp"
#include "geoclust/validity.hpp"

namespace geoclust {

/// Search grid over the mixing parameter and the number of clusters.
/// The alpha sequence is strictly increasing and must include 0 and 1.
struct TuningGrid {
    std::vector<double> alphas;
    int k_min = 2;
    int k_max = 15;

    static TuningGrid with_step(double alpha_step = 0.01, int k_min = 2, int k_max = 15);
    void validate(Index n) const;
};

/// The two per-K alpha selection rules:
///  - balance: argmin |Qn_D0 - Qn_D1| (keeps the feature-space and
///    geographic losses in balance),
///  - weighted: argmax of the total-inertia-weighted mean explained.
enum class AlphaCriterion { balance, weighted };
const char* criterion_name(AlphaCriterion c);

struct AlphaCurveRow {
    double alpha = 0.0;
    double q_d0 = 0.0;       // explained inertia of the cut under D0n
    double q_d1 = 0.0;       // explained inertia of the cut under D1n
    double q_d0_norm = 0.0;  // q_d0 relative to the alpha = 0 cut
    double q_d1_norm = 0.0;  // q_d1 relative to the alpha = 1 cut
    double q_bar = 0.0;      // weighted mean explained
};

/// One row per grid alpha: cluster on D(alpha), cut at k, evaluate the
/// explained-inertia criteria.
std::vector<AlphaCurveRow> alpha_curves(int k, const TuningGrid& grid, const DissimilarityMatrix& d0n,
                                        const DissimilarityMatrix& d1n, const Vector& w);

/// Grid alpha minimizing |q_d0_norm - q_d1_norm|; ties go to the smaller alpha.
double select_alpha_min(const std::vector<AlphaCurveRow>& curves);

/// Grid alpha maximizing q_bar; ties go to the smaller alpha.
double select_alpha_max(const std::vector<AlphaCurveRow>& curves);

/// Percentage change of an index value against its alpha = 0 baseline.
/// A zero or non-finite baseline (or value) is an input error; the tuner
/// records such cells as undefined instead.
double gain_loss(double index_at_alpha_star, double index_at_alpha0);

enum class Improvement { gain, loss, neutral };
const char* improvement_name(Improvement im);

/// Orientation of a percentage change: for minimized indices negative
/// variation is a gain, for maximized indices positive variation is.
Improvement improvement(const std::string& index_name, double gl_percent);

/// Modal value; ties go to the smallest tied element.
int majority_vote(const std::vector<int>& votes);

struct IndexCell {
    std::string index;
    double value = 0.0;     // index at (k, alpha*)
    double baseline = 0.0;  // index at (k, alpha = 0)
    bool gl_defined = false;
    double gl_percent = 0.0;
    std::string improvement;  // "gain" | "loss" | "neutral" | "undefined"
};

struct CriterionCell {
    double alpha_star = 0.0;
    std::vector<IndexCell> indices;  // the five indices, fixed order
};

struct KReport {
    int k = 0;
    double alpha_min_star = 0.0;           // balance criterion
    double alpha_max_star = 0.0;           // weighted criterion
    std::vector<AlphaCurveRow> curve;      // one row per grid alpha
    CriterionCell balance;
    CriterionCell weighted;
};

struct OptimalK {
    std::string criterion;
    std::string index;
    int k = 0;
};

struct GlVote {
    int k = 0;
    std::string criterion;
    int gains = 0;               // per-index gains in the winning cell
    double gain_magnitude = 0.0; // sum of |GL| over those gains
};

struct TuningReport {
    TuningGrid grid;
    std::string index_matrix;  // "mixed" (indices on D(alpha)) or "features" (on D0n)
    std::vector<KReport> per_k;

    std::vector<OptimalK> per_index_optimal_k;  // 2 criteria x 5 indices
    int abs_vote_balance = 0;   // mode over the balance-criterion votes
    int abs_vote_weighted = 0;  // mode over the weighted-criterion votes
    int abs_vote_pooled = 0;    // mode over all ten votes

    GlVote gl_vote_balance;   // best gain/loss cell among balance cells
    GlVote gl_vote_weighted;  // best among weighted cells
    GlVote gl_vote_overall;   // best overall

    int k_star = 0;
    double alpha_star = 0.0;
    std::string rule;  // selection rule that produced (k_star, alpha_star)
};

struct TuneOptions {
    std::string index_matrix = "mixed";  // or "features"
    int threads = 1;                     // never affects the result
};

/// Full grid search: per-K alpha selection under both criteria, the five
/// validity indices with gain/loss against the alpha = 0 baseline, and the
/// majority-vote selections.
TuningReport tune(const DissimilarityMatrix& d0n, const DissimilarityMatrix& d1n, const Vector& w,
                  const TuningGrid& grid, const TuneOptions& opts = {});

struct InertiaCurveRow {
    int k = 0;
    double within = 0.0;
};

/// Within-inertia of nested cuts for k = 1..k_max (elbow-plot data).
std::vector<InertiaCurveRow> inertia_curve(const DissimilarityMatrix& d, const Vector& w, int k_max);

}  // namespace geoclust
