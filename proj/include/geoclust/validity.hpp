#pragma once

#include <array>

#include "geoclust/dissimilarity.hpp"
#include "geoclust/hierarchy.hpp"

namespace geoclust {

// All five indices use pairwise-distance formulations, so they evaluate
// directly on any dissimilarity matrix. Each requires k >= 2.

/// Mean silhouette width. Singleton clusters contribute 0, as does the
/// degenerate 0/0 case.
double silhouette(const DissimilarityMatrix& d, const Partition& p);

/// Minimum between-cluster distance over maximum within-cluster distance.
/// Returns +infinity when all within distances are zero but clusters are
/// separated.
double dunn(const DissimilarityMatrix& d, const Partition& p);

/// (S - Smin) / (Smax - Smin) where S sums the within-cluster pair
/// distances and Smin/Smax sum the p smallest/largest distances overall.
double c_index(const DissimilarityMatrix& d, const Partition& p);

/// Between/within variance ratio computed from pairwise distances with unit
/// weights; equals the classical centroid form for Euclidean input.
/// Returns +infinity when the within term vanishes.
double calinski_harabasz(const DissimilarityMatrix& d, const Partition& p);

/// Mean within-cluster pair distance over mean between-cluster pair distance.
double mcclain_rao(const DissimilarityMatrix& d, const Partition& p);

enum class IndexDirection { maximize, minimize };

struct ValidityIndex {
    const char* name;
    IndexDirection direction;
    double (*compute)(const DissimilarityMatrix&, const Partition&);
};

/// The five indices in fixed reporting order with their optimization
/// direction (silhouette, dunn, calinski_harabasz maximized; c_index,
/// mcclain_rao minimized).
const std::array<ValidityIndex, 5>& validity_indices();

/// Direction for one index by name; unknown names are an error.
IndexDirection index_direction(const std::string& index_name);

}  // namespace geoclust
