#pragma once

#include "ctv/direction.hpp"
#include "ctv/family.hpp"
#include "ctv/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ctv {

/// Cell of the central sphere arrangement, with combinatorial structure.
struct ComplexCell {
  std::vector<int8_t> signs;
  IntVec rep;
  size_t dim = 0;                   // dimension on the sphere, 0..d-1
  size_t antipode = 0;              // id of the antipodal cell (may be self)
  std::vector<size_t> boundary_of;  // ids of cells whose boundary contains this one
};

/// Antipodal cell decomposition of S^{d-1} induced by the pairwise
/// difference directions of the vertex set together with its midpoints.
struct SphereComplex {
  size_t d = 0;
  std::vector<IntVec> normals;
  std::vector<ComplexCell> cells;
};

/// Exact construction for d in {2, 3}: circular sweep on S^1, great-circle
/// arrangement on S^2. Throws std::invalid_argument for other d.
SphereComplex build_complex(const ColoredFamily& F);

/// The two sweep hyperplanes orthogonal to x: H1 = (x, t1) with t1 the
/// smallest t whose closed lower side contains members of at least
/// ceil(r/2) distinct colors; H2 symmetric from above.
std::pair<OrientedHyperplane, OrientedHyperplane> sweep_pair(const ColoredFamily& F,
                                                             const Point& x);

/// The hyperplane halfway between the sweep pair.
OrientedHyperplane central_hyperplane(const ColoredFamily& F, const Point& x);

/// Separated subfamilies of the central hyperplane at one direction.
struct CentralData {
  OrientedHyperplane H1, H2, H;
  std::vector<size_t> F_minus, F_plus;  // member indices, strictly below / above H
  bool separated_order = false;         // t1 < t2
};

CentralData annotate_direction(const ColoredFamily& F, const Point& x);

/// Per-cell annotation at the representative. With test_mode set, the
/// annotation is recomputed at up to 5 further interior points of each cell
/// and must agree; disagreement throws std::logic_error.
std::vector<CentralData> annotate_cells(const SphereComplex& C, const ColoredFamily& F,
                                        bool test_mode = false);

/// Boundary-monotonicity report: for every boundary pair tau in bd(sigma),
/// whether (F_tau^-, F_tau^+) is contained componentwise in sigma's pair.
struct MonotonicityReport {
  struct Entry {
    size_t tau = 0, sigma = 0;
    bool holds = false;
  };
  std::vector<Entry> pairs;
  bool all_hold = true;
};

MonotonicityReport verify_monotonicity(const SphereComplex& C,
                                       const std::vector<CentralData>& data);

}  // namespace ctv
