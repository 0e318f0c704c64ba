#include "geoclust/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geoclust {

void Partition::validate() const {
    if (labels.empty()) throw input_error("partition: empty label vector");
    if (k < 1) throw input_error("partition: k must be at least 1");
    std::vector<bool> seen(static_cast<size_t>(k), false);
    for (int lab : labels) {
        if (lab < 1 || lab > k) throw input_error("partition: label out of 1..k");
        seen[static_cast<size_t>(lab - 1)] = true;
    }
    for (int c = 0; c < k; ++c)
        if (!seen[static_cast<size_t>(c)])
            throw input_error("partition: empty cluster " + std::to_string(c + 1));
}

std::vector<IndexSet> partition_members(const Partition& p) {
    p.validate();
    std::vector<IndexSet> members(static_cast<size_t>(p.k));
    for (Index i = 0; i < p.n(); ++i)
        members[static_cast<size_t>(p.labels[static_cast<size_t>(i)] - 1)].push_back(i);
    return members;
}

namespace {

void check_member_indices(const IndexSet& c, Index n, const char* what) {
    if (c.empty()) throw input_error(std::string(what) + ": empty cluster");
    for (Index i : c)
        if (i < 0 || i >= n) throw input_error(std::string(what) + ": member index out of range");
}

}  // namespace

double pseudo_inertia(const IndexSet& c, const DissimilarityMatrix& d, const Vector& w) {
    check_member_indices(c, d.size(), "pseudo_inertia");
    if (w.size() != d.size()) throw input_error("pseudo_inertia: weight count mismatch");
    double mu = 0.0;
    for (Index i : c) mu += w[i];
    if (mu <= 0.0) return 0.0;
    double s = 0.0;
    for (Index i : c)
        for (Index j : c) {
            const double dij = d(i, j);
            s += w[i] * w[j] * dij * dij;
        }
    return s / (2.0 * mu);
}

double cluster_pseudo_inertia(const IndexSet& c, const DissimilarityMatrix& d0n,
                              const DissimilarityMatrix& d1n, double alpha, const Vector& w) {
    if (d0n.size() != d1n.size()) throw input_error("cluster_pseudo_inertia: matrix size mismatch");
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
        throw input_error("cluster_pseudo_inertia: alpha must lie in [0, 1]");
    return (1.0 - alpha) * pseudo_inertia(c, d0n, w) + alpha * pseudo_inertia(c, d1n, w);
}

double ward_merge_cost(const IndexSet& a, const IndexSet& b, const DissimilarityMatrix& d,
                       const Vector& w) {
    check_member_indices(a, d.size(), "ward_merge_cost");
    check_member_indices(b, d.size(), "ward_merge_cost");
    IndexSet sorted_a = a, sorted_b = b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    IndexSet overlap;
    std::set_intersection(sorted_a.begin(), sorted_a.end(), sorted_b.begin(), sorted_b.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty())
        throw input_error("ward_merge_cost: clusters overlap at index " + std::to_string(overlap[0]));
    IndexSet both = a;
    both.insert(both.end(), b.begin(), b.end());
    return pseudo_inertia(both, d, w) - pseudo_inertia(a, d, w) - pseudo_inertia(b, d, w);
}

Dendrogram agglomerate(const DissimilarityMatrix& d, const Vector& w) {
    const Index n = d.size();
    if (n < 2) throw input_error("agglomerate: need at least 2 observations");
    validate_weights(w);
    if (w.size() != n) throw input_error("agglomerate: weight count mismatch");

    const int total = 2 * static_cast<int>(n) - 1;  // creation indices of all nodes
    // cost(i, j) for active nodes, addressed by creation index (i < j).
    Matrix cost = Matrix::Zero(total, total);
    Vector mass(total);
    std::vector<bool> active(static_cast<size_t>(total), false);

    for (Index i = 0; i < n; ++i) {
        mass[i] = w[i];
        active[static_cast<size_t>(i)] = true;
    }
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double dij = d(i, j);
            cost(i, j) = w[i] * w[j] * dij * dij / (w[i] + w[j]);
        }

    Dendrogram out;
    out.n_leaves = static_cast<int>(n);
    out.merges.reserve(static_cast<size_t>(n - 1));

    int created = static_cast<int>(n);
    for (Index step = 0; step < n - 1; ++step) {
        // Strict < scan in ascending creation order realizes the
        // lexicographic-smallest-pair tie rule.
        int best_i = -1, best_j = -1;
        double best = 0.0;
        for (int i = 0; i < created; ++i) {
            if (!active[static_cast<size_t>(i)]) continue;
            for (int j = i + 1; j < created; ++j) {
                if (!active[static_cast<size_t>(j)]) continue;
                const double c = cost(i, j);
                if (best_i < 0 || c < best) {
                    best = c;
                    best_i = i;
                    best_j = j;
                }
            }
        }

        const int u = created++;
        const double mu_i = mass[best_i], mu_j = mass[best_j];
        mass[u] = mu_i + mu_j;
        active[static_cast<size_t>(best_i)] = false;
        active[static_cast<size_t>(best_j)] = false;

        // Lance-Williams update for the weighted Ward cost; exact for the
        // pseudo-inertia definition on arbitrary dissimilarities.
        for (int c = 0; c < u; ++c) {
            if (!active[static_cast<size_t>(c)]) continue;
            const double mu_c = mass[c];
            const double d_ic = c < best_i ? cost(c, best_i) : cost(best_i, c);
            const double d_jc = c < best_j ? cost(c, best_j) : cost(best_j, c);
            cost(c, u) = ((mu_i + mu_c) * d_ic + (mu_j + mu_c) * d_jc - mu_c * best) /
                         (mu_i + mu_j + mu_c);
        }
        active[static_cast<size_t>(u)] = true;

        out.merges.push_back(Merge{best_i, best_j, best, mass[u]});
    }

    // Leaf order: depth-first from the root, lower creation index first.
    out.leaf_order.reserve(static_cast<size_t>(n));
    std::vector<int> stack{total - 1};
    while (!stack.empty()) {
        const int node = stack.back();
        stack.pop_back();
        if (node < n) {
            out.leaf_order.push_back(node);
        } else {
            const Merge& m = out.merges[static_cast<size_t>(node - n)];
            stack.push_back(m.right);
            stack.push_back(m.left);
        }
    }
    return out;
}

Partition cut(const Dendrogram& dend, int k) {
    const int n = dend.n_leaves;
    if (n < 1 || static_cast<int>(dend.merges.size()) != n - 1)
        throw input_error("cut: malformed dendrogram");
    if (k < 1 || k > n) throw input_error("cut: k must lie in 1.." + std::to_string(n));

    // Heights are nondecreasing, so dropping the k-1 highest merges means
    // applying only the first n-k.
    std::vector<int> parent(static_cast<size_t>(2 * n - 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (int m = 0; m < n - k; ++m) {
        const Merge& mg = dend.merges[static_cast<size_t>(m)];
        const int u = n + m;
        parent[static_cast<size_t>(find(mg.left))] = u;
        parent[static_cast<size_t>(find(mg.right))] = u;
    }

    Partition p;
    p.labels.resize(static_cast<size_t>(n), 0);
    p.k = k;
    std::vector<int> root_label(static_cast<size_t>(2 * n - 1), 0);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (root_label[static_cast<size_t>(r)] == 0) root_label[static_cast<size_t>(r)] = ++next;
        p.labels[static_cast<size_t>(i)] = root_label[static_cast<size_t>(r)];
    }
    return p;
}

double within_inertia(const Partition& p, const DissimilarityMatrix& d0n,
                      const DissimilarityMatrix& d1n, double alpha, const Vector& w) {
    double s = 0.0;
    for (const IndexSet& c : partition_members(p)) s += cluster_pseudo_inertia(c, d0n, d1n, alpha, w);
    return s;
}

double within_inertia(const Partition& p, const DissimilarityMatrix& d, const Vector& w) {
    double s = 0.0;
    for (const IndexSet& c : partition_members(p)) s += pseudo_inertia(c, d, w);
    return s;
}

double total_inertia(const DissimilarityMatrix& d, const Vector& w) {
    IndexSet all(static_cast<size_t>(d.size()));
    std::iota(all.begin(), all.end(), Index{0});
    return pseudo_inertia(all, d, w);
}

double explained_inertia(const Partition& p, const DissimilarityMatrix& d, const Vector& w) {
    const double total = total_inertia(d, w);
    if (total == 0.0) throw data_error("explained_inertia: total pseudo-inertia is zero");
    return 1.0 - within_inertia(p, d, w) / total;
}

NormalizedExplained normalized_explained(const Partition& p, const Partition& ref_alpha0,
                                         const Partition& ref_alpha1, const DissimilarityMatrix& d0n,
                                         const DissimilarityMatrix& d1n, const Vector& w) {
    const double q0_ref = explained_inertia(ref_alpha0, d0n, w);
    const double q1_ref = explained_inertia(ref_alpha1, d1n, w);
    if (q0_ref == 0.0 || q1_ref == 0.0)
        throw data_error("normalized_explained: degenerate reference clustering with zero explained inertia");
    NormalizedExplained out;
    out.q_d0 = explained_inertia(p, d0n, w) / q0_ref;
    out.q_d1 = explained_inertia(p, d1n, w) / q1_ref;
    return out;
}

double weighted_explained(const Partition& p, const DissimilarityMatrix& d0n,
                          const DissimilarityMatrix& d1n, const Vector& w) {
    const double t0 = total_inertia(d0n, w);
    const double t1 = total_inertia(d1n, w);
    if (t0 + t1 == 0.0) throw data_error("weighted_explained: both total pseudo-inertias are zero");
    return (t0 * explained_inertia(p, d0n, w) + t1 * explained_inertia(p, d1n, w)) / (t0 + t1);
}

}  // namespace geoclust
