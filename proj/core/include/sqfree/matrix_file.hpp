#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "sqfree/grading.hpp"

namespace sqfree {

/// One `entry` line. Rows and columns are 1-based as in the file.
struct FileEntry {
  std::size_t row;
  std::size_t col;
  Rational coefficient;
  ExponentVector exponent;
  friend bool operator==(const FileEntry&, const FileEntry&) = default;
};

/// Line-based matrix description:
///
///   n 4
///   vars x y z w        # optional
///   size 2 2            # s l
///   entry 1 1 1    1 1 0 0
///
/// Entries keep their file order.
struct MatrixFile {
  int n = 0;
  std::vector<std::string> vars;
  std::size_t s = 0;
  std::size_t l = 0;
  std::vector<FileEntry> entries;
  friend bool operator==(const MatrixFile&, const MatrixFile&) = default;
};

/// Throws InputError naming `source` and the offending line.
MatrixFile parse_matrix_file(std::istream& in, const std::string& source = "<input>");
MatrixFile load_matrix_file(const std::filesystem::path& path);
std::string serialize(const MatrixFile& file);

MultigradedMatrix to_matrix(const MatrixFile& file);
/// Entries in row-major order.
MatrixFile from_matrix(const MultigradedMatrix& matrix, std::vector<std::string> vars = {});

/// Comma-separated integers, e.g. "1,0,-1,0".
ExponentVector parse_degree(const std::string& text, int n);
/// Comma-separated 1-based indices, e.g. "2,1,3".
std::vector<std::size_t> parse_index_list(const std::string& text);

}  // namespace sqfree
