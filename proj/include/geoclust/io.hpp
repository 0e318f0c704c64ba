#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "geoclust/hierarchy.hpp"
#include "geoclust/types.hpp"

namespace geoclust::io {

// ---------------------------------------------------------------- numbers

/// Format with 12 significant digits; all emitted artifacts use this.
std::string fmt12(double x);

/// The double that fmt12 round-trips to.
double round12(double x);

// ------------------------------------------------------------------- CSV

/// Comma-delimited, header row, UTF-8; quoted fields with "" escapes.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    /// Column position or -1 when absent.
    int column_index(const std::string& name) const;
};

CsvTable parse_csv(std::istream& in, const std::string& origin);
CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);
std::string csv_to_string(const CsvTable& table);

// ---------------------------------------------------------------- config

/// Key-value configuration with one [section] per scenario.
struct ConfigSection {
    std::string name;
    std::map<std::string, std::string> entries;
};

std::vector<ConfigSection> read_config(const std::string& path);
std::vector<ConfigSection> parse_config(std::istream& in, const std::string& origin);

// ------------------------------------------------------------ dendrogram

/// Newick string with branch lengths derived from merge heights
/// (parent height minus child height).
std::string to_newick(const Dendrogram& d, const std::vector<std::string>& labels);

/// Indented text rendering of the merge tree.
std::string to_indented_text(const Dendrogram& d, const std::vector<std::string>& labels);

/// Leaf labels of a Newick string in left-to-right order.
std::vector<std::string> newick_leaf_labels(const std::string& newick, const std::string& origin);

// ------------------------------------------------------------ filesystem

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// CSV with a leading name column and named columns, for square matrices.
void write_named_matrix_csv(const std::string& path, const std::vector<std::string>& names,
                            const Matrix& m);

}  // namespace geoclust::io
