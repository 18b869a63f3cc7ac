#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "flatspin/defining_matrix.hpp"

namespace flatspin {

/// Stages of the built-in minimal non-spin family, each a defining matrix
/// whose shape depends only on the holonomy rank d:
///   A0  d x (d-1), column l has half turns at rows l and d
///   A1  d x d(d-1)/2, one column per row pair i < j (lexicographic order)
///       with a 2 at row i and a 3 at row j
///   A   [A0, A1]
///   B   single all-2 column
///   C   single column with a 2 at row 1
///   E   [A,B,C,C] for even d, [A,B,B] for d = 1 mod 4, A for d = 3 mod 4
///   F   E, except [E,C,C,C,C] for d = 3 mod 4
enum class Stage { A0, A1, A, B, C, E, F };

std::optional<Stage> stage_from_name(std::string_view name);
const char* stage_name(Stage stage);

/// Torus dimension of the rank-d family member:
/// C(d+1,2) plus 2, 1 or 3 according to d mod 4. Requires d >= 2.
std::size_t n_of_d(std::size_t d);

/// Builds the requested stage for rank d >= 2.
DefiningMatrix build_stage(Stage stage, std::size_t d);

}  // namespace flatspin
