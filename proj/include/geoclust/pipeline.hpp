#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geoclust/dissimilarity.hpp"
#include "geoclust/geometry.hpp"
#include "geoclust/hierarchy.hpp"
#include "geoclust/tuner.hpp"

namespace geoclust {

/// One clustering run: either a fixed (alpha, k) pair or a tuning grid.
struct Scenario {
    std::string name = "main";
    std::vector<std::string> feature_columns;  // empty = all ingested features
    std::optional<double> alpha;
    std::optional<int> k;
    std::optional<TuningGrid> grid;
    std::string index_matrix = "mixed";  // "mixed" or "features"

    bool is_fixed() const { return alpha.has_value() && k.has_value(); }
    void validate() const;
};

struct IngestOptions {
    std::string id_col = "id";
    std::string lat_col = "lat";
    std::string lon_col = "lon";
    std::string weight_col;                    // optional; normalized to sum 1
    std::vector<std::string> feature_columns;  // empty = every other numeric column
};

struct Dataset {
    FeatureTable table;  // raw (unstandardized) feature values
    std::vector<GeoPoint> points;
};

/// Read observations from CSV. With a separate coordinates file the rows are
/// joined by id; otherwise lat/lon columns are taken from the features file.
Dataset ingest(const std::string& features_path, const std::string& coords_path,
               const IngestOptions& opts);

/// Parse scenario sections from a key-value configuration file.
std::vector<Scenario> scenarios_from_config(const std::string& path);

struct RunOptions {
    std::string out_dir = ".";
    std::set<std::string> formats = {"csv", "json", "geojson"};
    int threads = 1;
    std::string summary_variable;  // default: first feature column
};

struct RunResult {
    double alpha = 0.0;
    int k = 0;
    Partition partition;
    Dendrogram dendrogram;
    std::optional<TuningReport> tuning;
    std::vector<std::string> written;  // artifact paths, in emission order
};

/// Execute one scenario and emit its artifacts (report, assignments,
/// GeoJSON, dendrogram exports, curve tables, cluster summary).
RunResult run(const Scenario& scenario, const Dataset& data, const RunOptions& opts);

/// Pairwise ARI of assignment CSV files; requires identical id sets.
Matrix compare_runs(const std::vector<std::string>& assignment_files,
                    std::vector<std::string>& names_out);

struct ClusterSummaryRow {
    int cluster = 0;
    int count = 0;
    double mean = 0.0;
    double sd = 0.0;  // sample sd; 0 for singleton clusters
    double min = 0.0;
    double median = 0.0;
    double max = 0.0;
};

/// Per-cluster descriptive statistics of one variable.
std::vector<ClusterSummaryRow> cluster_summary(const Partition& p, const Vector& values);

/// Assignment CSV (id,label) -> partition with labels compacted to 1..k
/// in order of first appearance by id order of the file.
Partition read_assignments(const std::string& path, std::vector<std::string>* ids_out = nullptr);

}  // namespace geoclust
