#pragma once

#include <cstdint>
#include <vector>

#include "ihs/hyperspace.hpp"
#include "ihs/set_system.hpp"

namespace ihs {

/// A product structure together with the coordinate tuple behind each
/// abstract element id.
struct Cube {
    Hyperspace space;
    std::vector<std::vector<std::uint64_t>> coordinates;  // element -> tuple
};

/// The tuple <{0},{1},...,{n-1}> whose cube over X is the plain n-cube.
SetTuple n_cube_tuple(int n);

/// Product of the factors with one relation per tuple entry: two tuples are
/// related under relation i iff they agree on every coordinate outside S_i.
/// Element ids enumerate coordinate tuples in colexicographic order
/// (coordinate 0 varies fastest). Factors must be nonempty and match the
/// tuple's codomain.
Cube make_cube(const SetTuple& tuple, const std::vector<std::uint64_t>& factors);

/// The cube over {0..k-1} restricted to strictly increasing coordinate
/// tuples, ids in lexicographic tuple order. Requires k >= codomain unless
/// allow_empty is set.
Cube make_halfcube(const SetTuple& tuple, std::uint64_t k, bool allow_empty = false);

Cube make_n_halfcube(int n, std::uint64_t k);

struct ParbeddingConstruction {
    Cube domain;                  // d-cube over X, d = transversal number
    Cube target;                  // tuple-cube over X
    std::vector<int> map;         // domain element -> target element
    std::vector<int> beta;        // target relation -> domain relation
    std::vector<int> transversal; // chosen minimum transversal, ascending
};

/// Builds the canonical parbedding of the d-cube over X into the tuple's
/// cube over X, where d is the tuple's transversal number: a coordinate map
/// that routes domain coordinate j to target coordinate t_j of the
/// lexicographically least minimum transversal T = {t_0 < ... < t_{d-1}}
/// and pins every other coordinate to the constant c. beta sends relation i
/// to the least j with t_j in S_i.
///
/// Every entry of the tuple must be nonempty (this makes d finite);
/// X = {0..x_size-1} and c must lie in X.
ParbeddingConstruction min_transversal_parbedding(const SetTuple& tuple, std::uint64_t x_size, std::uint64_t c);

}  // namespace ihs
