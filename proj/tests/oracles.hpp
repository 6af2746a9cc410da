#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately share no code paths with the implementations under
// test: feasibility by Fourier-Motzkin elimination, hull membership by
// Caratheodory subset enumeration with Gaussian elimination, circuits by
// brute force over subset pairs, consistency by the exhaustive pair
// quantifier and by the monochromatic-copies reduction, and transversals
// by a dense rational direction sweep.

#include "ctv/family.hpp"
#include "ctv/hull.hpp"
#include "ctv/lp.hpp"
#include "ctv/ordering.hpp"

#include <optional>
#include <vector>

namespace ctv::oracle {

/// Feasibility of a mixed strict/non-strict linear system by
/// Fourier-Motzkin elimination.
bool fm_feasible(const LinearSystem& sys);

/// q in conv(S) by enumerating affinely independent subsets of size at
/// most d+1 and solving the barycentric system exactly.
bool cara_in_hull(const Point& q, const std::vector<Point>& S);

/// Circuits as inclusion-minimal supports admitting an intersecting Radon
/// split, found by brute force over all subsets and splits with
/// hulls_intersect. Output matches the affine_circuits normal form.
std::vector<Circuit> brute_circuits(const std::vector<Point>& P);

/// The definition's quantifier: every pair of disjoint subfamilies whose
/// union is oracle-independent and whose phi-image hulls intersect must
/// have intersecting member hulls.
bool exhaustive_rainbow_consistent(const ColoredFamily& family, const KOrdering& ordering,
                                   const IndependenceOracle& oracle);

/// Plain consistency via rainbow consistency of r monochromatic copies.
bool copies_consistent(const ColoredFamily& family, const KOrdering& ordering);

/// Dense exact direction sweep on S^1 (tan-half-angle rationalization,
/// 2*(2n+1) directions). Sound: any returned hyperplane meets every
/// member; at desk scale it also finds every robust transversal.
std::optional<OrientedHyperplane> sweep_transversal_2d(const std::vector<Polytope>& members,
                                                       long n = 900);

}  // namespace ctv::oracle
