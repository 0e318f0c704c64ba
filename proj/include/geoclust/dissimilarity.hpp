#pragma once

#include <string>
#include <vector>

#include "geoclust/types.hpp"

namespace geoclust {

/// Symmetric nonnegative n x n matrix with zero diagonal, validated on
/// construction. The construction cost is O(n^2); instances are immutable.
class DissimilarityMatrix {
public:
    explicit DissimilarityMatrix(Matrix values);

    Index size() const { return values_.rows(); }
    const Matrix& values() const { return values_; }
    double operator()(Index i, Index j) const { return values_(i, j); }
    double max_entry() const { return values_.maxCoeff(); }

private:
    Matrix values_;
};

/// n observations x p named features, plus per-observation weights.
struct FeatureTable {
    std::vector<std::string> ids;            // unique observation identifiers
    std::vector<std::string> feature_names;  // p column names
    Matrix values;                           // n x p, no missing values
    Vector weights;                          // n, nonnegative, sums to 1

    Index n() const { return values.rows(); }
    Index p() const { return values.cols(); }

    void validate() const;
};

/// Center and scale every column to mean 0 and sample standard deviation 1.
/// A zero-variance column is an error naming the column.
FeatureTable standardize_features(const FeatureTable& table);

/// Pairwise Euclidean distance between observation rows.
DissimilarityMatrix feature_dissimilarity(const FeatureTable& table);

/// Divide all entries by the maximum entry, so the result has maximum 1.
DissimilarityMatrix normalize_matrix(const DissimilarityMatrix& d);

/// Entrywise convex combination (1-alpha)*d0n + alpha*d1n.
/// At alpha 0 or 1 the result is bit-identical to the corresponding input.
DissimilarityMatrix mix_dissimilarities(const DissimilarityMatrix& d0n, const DissimilarityMatrix& d1n,
                                        double alpha);

}  // namespace geoclust
