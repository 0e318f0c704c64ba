#pragma once

#include <string>
#include <vector>

#include "geoclust/dissimilarity.hpp"
#include "geoclust/hierarchy.hpp"

namespace geoclust {

/// Matched leaf positions of two dendrograms over the same label set:
/// v1 holds the 1..n positions on the left plot, v2 the positions of the
/// same labels on the right plot.
struct LabelAlignment {
    std::vector<int> v1;
    std::vector<int> v2;
    double norm_exponent = 1.5;  // L > 0
};

/// Normalized L-norm distance between the two position vectors, in [0, 1]:
/// 0 for identical orders, 1 when one order is the reverse of the other.
double entanglement(const LabelAlignment& alignment);

/// Entanglement of two dendrograms' leaf orders, matching leaves by label.
double dendrogram_entanglement(const Dendrogram& d1, const std::vector<std::string>& labels1,
                               const Dendrogram& d2, const std::vector<std::string>& labels2,
                               double norm_exponent = 1.5);

/// Chance-corrected pair-counting agreement between two partitions of the
/// same observations; 1 for identical partitions up to label renaming,
/// expected 0 under random labeling.
double adjusted_rand_index(const Partition& p1, const Partition& p2);

/// Pairwise ARI of a list of partitions; symmetric with unit diagonal.
Matrix ari_matrix(const std::vector<Partition>& partitions);

/// Pairwise Pearson correlation of feature columns (sample normalization);
/// a constant column is an error naming the column.
Matrix pearson_matrix(const FeatureTable& table);

}  // namespace geoclust
