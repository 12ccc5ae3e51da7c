/**
 * Plain-text matrix I/O.
 *
 * Format: one row per line, cells separated by ',' or '\t' (detected per
 * file), '.' decimal separator, UTF-8. Lines starting with '#' and blank
 * lines are ignored. Values are written with enough digits to round-trip
 * exactly through the decimal representation.
 */

#pragma once

#include "grwscmf/types.hpp"

#include <string>
#include <vector>

namespace grwscmf {

/// Formats a double so that reading it back yields the identical bits.
std::string format_double(double v);

/// Reads a dense matrix. Throws std::runtime_error naming the offending
/// line for ragged rows, unparsable cells, or non-finite values.
Matrix read_csv_matrix(const std::string& path);

/// Writes a matrix as comma-separated rows. header_comments are emitted
/// first, one per line, prefixed with "# ".
void write_csv_matrix(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header_comments = {});

/// Manifest files carry a single `label_count=<int>` line (comments allowed).
int read_label_count_manifest(const std::string& path);

}  // namespace grwscmf
