#include "geoclust/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geoclust {

namespace {

void check_inputs(const DissimilarityMatrix& d, const Partition& p, const char* what) {
    p.validate();
    if (p.n() != d.size()) throw input_error(std::string(what) + ": partition size mismatch");
    if (p.k < 2) throw input_error(std::string(what) + ": need at least 2 clusters");
}

}  // namespace

double silhouette(const DissimilarityMatrix& d, const Partition& p) {
    check_inputs(d, p, "silhouette");
    const auto members = partition_members(p);
    const Index n = d.size();
    double sum = 0.0;
    for (Index i = 0; i < n; ++i) {
        const int own = p.labels[static_cast<size_t>(i)] - 1;
        const size_t own_size = members[static_cast<size_t>(own)].size();
        if (own_size == 1) continue;  // singleton contributes 0

        double a = 0.0;
        for (Index j : members[static_cast<size_t>(own)])
            if (j != i) a += d(i, j);
        a /= static_cast<double>(own_size - 1);

        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < p.k; ++c) {
            if (c == own) continue;
            double mean = 0.0;
            for (Index j : members[static_cast<size_t>(c)]) mean += d(i, j);
            mean /= static_cast<double>(members[static_cast<size_t>(c)].size());
            b = std::min(b, mean);
        }

        const double denom = std::max(a, b);
        if (denom > 0.0) sum += (b - a) / denom;  // 0/0 counts as 0
    }
    return sum / static_cast<double>(n);
}

double dunn(const DissimilarityMatrix& d, const Partition& p) {
    check_inputs(d, p, "dunn");
    const Index n = d.size();
    double min_between = std::numeric_limits<double>::infinity();
    double max_within = 0.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            if (p.labels[static_cast<size_t>(i)] == p.labels[static_cast<size_t>(j)])
                max_within = std::max(max_within, d(i, j));
            else
                min_between = std::min(min_between, d(i, j));
        }
    if (max_within == 0.0)
        return min_between > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    return min_between / max_within;
}

double c_index(const DissimilarityMatrix& d, const Partition& p) {
    check_inputs(d, p, "c_index");
    const Index n = d.size();
    std::vector<double> all;
    all.reserve(static_cast<size_t>(n * (n - 1) / 2));
    double s = 0.0;
    size_t within_pairs = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            all.push_back(d(i, j));
            if (p.labels[static_cast<size_t>(i)] == p.labels[static_cast<size_t>(j)]) {
                s += d(i, j);
                ++within_pairs;
            }
        }
    if (within_pairs == 0) throw input_error("c_index: no within-cluster pairs");
    std::sort(all.begin(), all.end());
    double s_min = 0.0, s_max = 0.0;
    for (size_t t = 0; t < within_pairs; ++t) {
        s_min += all[t];
        s_max += all[all.size() - 1 - t];
    }
    if (s_max == s_min) throw data_error("c_index: all pairwise distances are equal");
    return (s - s_min) / (s_max - s_min);
}

double calinski_harabasz(const DissimilarityMatrix& d, const Partition& p) {
    check_inputs(d, p, "calinski_harabasz");
    const Index n = d.size();
    if (p.k > static_cast<int>(n) - 1)
        throw input_error("calinski_harabasz: k must lie in 2..n-1");

    // Pairwise-distance formulation with unit weights.
    const auto members = partition_members(p);
    double within = 0.0;
    for (const IndexSet& c : members) {
        double s = 0.0;
        for (Index i : c)
            for (Index j : c) s += d(i, j) * d(i, j);
        within += s / (2.0 * static_cast<double>(c.size()));
    }
    double total = 0.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) total += d(i, j) * d(i, j);
    total /= 2.0 * static_cast<double>(n);

    if (within == 0.0) return std::numeric_limits<double>::infinity();
    const double between = total - within;
    return (between / static_cast<double>(p.k - 1)) /
           (within / static_cast<double>(n - static_cast<Index>(p.k)));
}

double mcclain_rao(const DissimilarityMatrix& d, const Partition& p) {
    check_inputs(d, p, "mcclain_rao");
    const Index n = d.size();
    double within_sum = 0.0, between_sum = 0.0;
    size_t within_count = 0, between_count = 0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            if (p.labels[static_cast<size_t>(i)] == p.labels[static_cast<size_t>(j)]) {
                within_sum += d(i, j);
                ++within_count;
            } else {
                between_sum += d(i, j);
                ++between_count;
            }
        }
    if (within_count == 0) throw input_error("mcclain_rao: no within-cluster pairs");
    const double between_mean = between_sum / static_cast<double>(between_count);
    if (between_mean == 0.0) throw data_error("mcclain_rao: mean between-cluster distance is zero");
    return (within_sum / static_cast<double>(within_count)) / between_mean;
}

const std::array<ValidityIndex, 5>& validity_indices() {
    static const std::array<ValidityIndex, 5> registry = {{
        {"silhouette", IndexDirection::maximize, &silhouette},
        {"dunn", IndexDirection::maximize, &dunn},
        {"c_index", IndexDirection::minimize, &c_index},
        {"calinski_harabasz", IndexDirection::maximize, &calinski_harabasz},
        {"mcclain_rao", IndexDirection::minimize, &mcclain_rao},
    }};
    return registry;
}

IndexDirection index_direction(const std::string& index_name) {
    for (const ValidityIndex& idx : validity_indices())
        if (index_name == idx.name) return idx.direction;
    throw input_error("unknown validity index '" + index_name + "'");
}

}  // namespace geoclust
