#pragma once

#include "lrr/linalg.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lrr::io {

/// CSV matrix: one line per row, ',' separated, '.' decimal. With
/// has_header the first line is skipped. Throws ArgumentError on ragged
/// rows or unparsable fields.
DenseMatrix parse_csv(std::string_view text, bool has_header = false);
DenseMatrix read_csv(const std::filesystem::path& path, bool has_header = false);

/// 17 significant digits, so read_csv(write_csv(M)) == M bit for bit.
std::string format_csv(const DenseMatrix& M, const std::vector<std::string>& header = {});
void write_csv(const std::filesystem::path& path, const DenseMatrix& M,
               const std::vector<std::string>& header = {});

/// Integer label vector from a one-column (or one-row) CSV.
std::vector<int> read_labels(const std::filesystem::path& path, bool has_header = false);
void write_labels(const std::filesystem::path& path, const std::vector<int>& labels);

/// Writes to a sibling temp file, then renames over `path`.
void write_atomic(const std::filesystem::path& path, std::string_view contents);

std::string format_double(double v);

}  // namespace lrr::io
