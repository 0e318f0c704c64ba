#pragma once

#include <vector>

#include "geoclust/dissimilarity.hpp"
#include "geoclust/types.hpp"

namespace geoclust {

/// One agglomeration step. Nodes carry creation indices: leaves are
/// 0..n-1, the cluster created by merge m has index n+m.
struct Merge {
    int left = 0;         // smaller creation index of the merged pair
    int right = 0;        // larger creation index
    double height = 0.0;  // Ward cost of this merge (not cumulative)
    double weight = 0.0;  // total weight of the merged cluster
};

struct Dendrogram {
    int n_leaves = 0;
    std::vector<Merge> merges;    // n_leaves - 1 entries, heights nondecreasing
    std::vector<int> leaf_order;  // left-to-right plotting order of leaf indices
};

/// Cluster labels 1..k; label 1 contains the observation with the smallest index.
struct Partition {
    std::vector<int> labels;
    int k = 0;

    Index n() const { return static_cast<Index>(labels.size()); }
    void validate() const;
};

using IndexSet = std::vector<Index>;

/// Members of each cluster, indexed by label-1.
std::vector<IndexSet> partition_members(const Partition& p);

/// Pseudo-inertia of an index set under a single matrix:
///   I(C) = sum_{i,j in C} w_i w_j d_ij^2 / (2 mu),  mu = sum_{i in C} w_i.
double pseudo_inertia(const IndexSet& c, const DissimilarityMatrix& d, const Vector& w);

/// Mixed pseudo-inertia: (1-alpha) * I_{D0n}(C) + alpha * I_{D1n}(C).
double cluster_pseudo_inertia(const IndexSet& c, const DissimilarityMatrix& d0n,
                              const DissimilarityMatrix& d1n, double alpha, const Vector& w);

/// Ward cost of joining two disjoint nonempty clusters: I(A u B) - I(A) - I(B).
double ward_merge_cost(const IndexSet& a, const IndexSet& b, const DissimilarityMatrix& d,
                       const Vector& w);

/// Weighted Ward agglomeration via the Lance-Williams update on the stored
/// pair costs. Equal costs are resolved toward the lexicographically smallest
/// pair of cluster creation indices, so results are platform independent.
Dendrogram agglomerate(const DissimilarityMatrix& d, const Vector& w);

/// Partition into k clusters by removing the k-1 highest (= last) merges.
Partition cut(const Dendrogram& dend, int k);

/// Mixed within-cluster pseudo-inertia, summed over the partition's clusters.
double within_inertia(const Partition& p, const DissimilarityMatrix& d0n,
                      const DissimilarityMatrix& d1n, double alpha, const Vector& w);

/// Single-matrix within-cluster pseudo-inertia.
double within_inertia(const Partition& p, const DissimilarityMatrix& d, const Vector& w);

/// Pseudo-inertia of the whole observation set under one matrix.
double total_inertia(const DissimilarityMatrix& d, const Vector& w);

/// Share of total pseudo-inertia explained by a partition:
///   Q_D(P) = 1 - W_D(P) / I_D(whole set), in [0, 1] for nested Ward cuts.
double explained_inertia(const Partition& p, const DissimilarityMatrix& d, const Vector& w);

struct NormalizedExplained {
    double q_d0 = 0.0;  // Q_D0(P) / Q_D0(reference partition at alpha = 0)
    double q_d1 = 0.0;  // Q_D1(P) / Q_D1(reference partition at alpha = 1)
};

/// Explained inertias normalized against the single-matrix reference
/// partitions (the cuts of the alpha = 0 and alpha = 1 dendrograms).
NormalizedExplained normalized_explained(const Partition& p, const Partition& ref_alpha0,
                                         const Partition& ref_alpha1, const DissimilarityMatrix& d0n,
                                         const DissimilarityMatrix& d1n, const Vector& w);

/// Total-inertia-weighted mean of the two explained inertias:
///   (T0 * Q_D0(P) + T1 * Q_D1(P)) / (T0 + T1).
double weighted_explained(const Partition& p, const DissimilarityMatrix& d0n,
                          const DissimilarityMatrix& d1n, const Vector& w);

}  // namespace geoclust
