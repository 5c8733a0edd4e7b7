#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mga/lp.hpp"

namespace mga::test {

// Brute-force optimum of a small LP by scanning the vertex set from
// enumerate_vertices. Independent of the simplex path: relies only on the
// fact that a bounded LP with a nonempty vertex set attains its optimum at
// a vertex. Returns nullopt when the vertex set is empty.
std::optional<double> brute_force_optimum(const LinearProgram& lp);

// true if x matches some vertex of `vertices` within L-inf `tol`
bool matches_some_vertex(std::span<const double> x,
                         const std::vector<std::vector<double>>& vertices, double tol);

}  // namespace mga::test
