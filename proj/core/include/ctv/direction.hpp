#pragma once

#include "ctv/family.hpp"
#include "ctv/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ctv {

/// Relatively open cell of the central arrangement of a normal list,
/// encoded by its sign vector and an exact nonzero representative.
struct DirectionCell {
  std::vector<int8_t> signs;  // one of -1, 0, +1 per normal
  IntVec rep;                 // integer direction vector reproducing signs
};

/// Canonicalizes (primitive, first nonzero positive) and deduplicates,
/// dropping zero vectors. Order of first appearance is kept.
std::vector<IntVec> canonical_normals(const std::vector<IntVec>& raw);

/// Vertex-difference normals of a member list: {u - v} over all pairs of
/// distinct vertices, canonical and deduplicated.
std::vector<IntVec> difference_normals(const std::vector<Polytope>& members);

/// Counterclockwise angular order on nonzero integer 2-vectors, angles in
/// [0, 2*pi) measured from (1, 0).
bool angle_ccw_less(const IntVec& u, const IntVec& v);

/// Sign evaluation of rep against every normal.
std::vector<int8_t> sign_vector(const std::vector<IntVec>& normals, const IntVec& rep);

/// All nonempty cells (faces of every dimension) of the central arrangement
/// on S^{d-1}. d = 2 uses an exact circular sweep; d >= 3 an LP-pruned
/// depth-first search over sign vectors. The all-zero sign vector yields two
/// antipodal cells when the common kernel is a line.
std::vector<DirectionCell> enumerate_direction_cells(const std::vector<IntVec>& normals,
                                                     size_t d);

/// Circular sweep on S^1: cells in counterclockwise angular order, points
/// and arcs alternating (even index = 0-cell) when normals exist. Cell
/// (i + n/2) mod n is the antipode of cell i.
std::vector<DirectionCell> sweep_circle_cells(const std::vector<IntVec>& normals);

/// Candidate directions that are guaranteed to meet every face-closure of
/// the arrangement: kernel directions of all corank-1 normal subsets, plus
/// a common-kernel direction when the normals do not span. Every nonempty
/// closed union of faces contains one of these.
std::vector<IntVec> minimal_face_candidates(const std::vector<IntVec>& normals, size_t d);

/// Exact hyperplane-transversal decision over the candidate directions of
/// the vertex-difference arrangement.
std::optional<OrientedHyperplane> find_hyperplane_transversal(
    const std::vector<Polytope>& members, size_t d);

/// Smallest color whose class has a hyperplane transversal.
std::optional<std::pair<int, OrientedHyperplane>> find_monochromatic_transversal(
    const ColoredFamily& family);

}  // namespace ctv
