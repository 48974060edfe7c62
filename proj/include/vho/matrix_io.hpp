#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vho/madm.hpp"

namespace vho::io {

struct matrix_file {
  madm::decision_matrix matrix;
  madm::weight_vector weights;
};

// Comma-separated matrix format, UTF-8, '#' starts a comment line:
//   line 1: criterion names
//   line 2: per-criterion direction, `benefit` or `cost` (case-insensitive)
//   line 3: weights, must sum to one
//   lines 4+: alternative id followed by one value per criterion
// Structural problems raise error{parse_error} with the line number; bad
// weights raise the weight_vector errors untouched.
matrix_file load_matrix(std::istream& in, const std::string& origin);
matrix_file load_matrix_file(const std::filesystem::path& path);

}  // namespace vho::io
