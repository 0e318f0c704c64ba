#include "geoclust/dissimilarity.hpp"

#include <cmath>
#include <set>

namespace geoclust {

DissimilarityMatrix::DissimilarityMatrix(Matrix values) : values_(std::move(values)) {
    const Index n = values_.rows();
    if (n == 0 || values_.cols() != n)
        throw input_error("dissimilarity matrix: expected a nonempty square matrix");
    for (Index i = 0; i < n; ++i) {
        if (values_(i, i) != 0.0)
            throw input_error("dissimilarity matrix: nonzero diagonal at " + std::to_string(i));
        for (Index j = i + 1; j < n; ++j) {
            const double v = values_(i, j);
            if (!std::isfinite(v) || v < 0.0)
                throw input_error("dissimilarity matrix: negative or non-finite entry at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            if (v != values_(j, i))
                throw input_error("dissimilarity matrix: asymmetry at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
        }
    }
}

void FeatureTable::validate() const {
    const Index rows = values.rows();
    if (static_cast<Index>(ids.size()) != rows)
        throw input_error("feature table: id count does not match row count");
    if (static_cast<Index>(feature_names.size()) != values.cols())
        throw input_error("feature table: name count does not match column count");
    std::set<std::string> seen;
    for (const auto& id : ids)
        if (!seen.insert(id).second) throw input_error("feature table: duplicate id '" + id + "'");
    if (!values.allFinite()) throw input_error("feature table: missing or non-finite values");
    validate_weights(weights);
    if (weights.size() != rows) throw input_error("feature table: weight count does not match row count");
}

FeatureTable standardize_features(const FeatureTable& table) {
    table.validate();
    const Index n = table.n();
    if (n < 2) throw input_error("standardize: need at least 2 observations");
    FeatureTable out = table;
    for (Index c = 0; c < table.p(); ++c) {
        const double mean = table.values.col(c).mean();
        const double ss = (table.values.col(c).array() - mean).square().sum();
        const double sd = std::sqrt(ss / static_cast<double>(n - 1));
        if (sd == 0.0)
            throw data_error("standardize: column '" + table.feature_names[c] + "' has zero variance");
        out.values.col(c) = (table.values.col(c).array() - mean) / sd;
    }
    return out;
}

DissimilarityMatrix feature_dissimilarity(const FeatureTable& table) {
    table.validate();
    const Index n = table.n();
    Matrix d = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double v = (table.values.row(i) - table.values.row(j)).norm();
            d(i, j) = v;
            d(j, i) = v;
        }
    return DissimilarityMatrix(std::move(d));
}

DissimilarityMatrix normalize_matrix(const DissimilarityMatrix& d) {
    const double m = d.max_entry();
    if (m == 0.0) throw data_error("normalize: all dissimilarities are zero");
    return DissimilarityMatrix(d.values() / m);
}

DissimilarityMatrix mix_dissimilarities(const DissimilarityMatrix& d0n, const DissimilarityMatrix& d1n,
                                        double alpha) {
    if (d0n.size() != d1n.size())
        throw input_error("mix: matrices have different sizes (" + std::to_string(d0n.size()) + " vs " +
                          std::to_string(d1n.size()) + ")");
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
        throw input_error("mix: alpha must lie in [0, 1]");
    return DissimilarityMatrix((1.0 - alpha) * d0n.values() + alpha * d1n.values());
}

}  // namespace geoclust
