#pragma once

#include "ctv/complex.hpp"
#include "ctv/family.hpp"
#include "ctv/instance.hpp"
#include "ctv/join.hpp"
#include "ctv/ordering.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ctv {

/// Exact point of a member on the witness hyperplane, as a convex
/// combination of the member's extreme vertices in the normal direction:
/// p = lambda * V[vmin] + (1 - lambda) * V[vmax].
struct IncidenceProof {
  size_t member = 0;
  size_t vmin = 0, vmax = 0;
  Rational lambda;
};

struct TransversalWitness {
  int color = 0;
  OrientedHyperplane h;
  std::vector<IncidenceProof> incidence;  // one entry per member of the class
};

struct RadonViolation {
  RadonPair pair;
  OrientedHyperplane separator;
};

/// Neither certificate exists: candidate counterexample or r below the
/// true threshold. Records the exhausted searches.
struct OpenCase {
  long colors_checked = 0;
  long circuits_checked = 0;
  std::string note;
};

using Certificate = std::variant<TransversalWitness, RadonViolation, OpenCase>;

/// Packages a found class transversal with per-member incidence proofs.
TransversalWitness make_transversal_witness(const ColoredFamily& family, int color,
                                            const OrientedHyperplane& h);

/// The dichotomy pipeline: monochromatic transversal search first, then
/// the rainbow-consistency check; OpenCase only when both are exhausted.
Certificate verify_theorem(const ColoredFamily& family, const KOrdering& ordering,
                           const IndependenceOracle& oracle);

/// Independent re-verification of an emitted certificate by plain
/// substitution into exact-core primitives; shares no code with the
/// searches. OpenCase is not a certificate and always fails validation.
bool validate_certificate(const Certificate& cert, const ColoredFamily& family,
                          const KOrdering& ordering, const IndependenceOracle& oracle);

struct ZeroCellHit {
  size_t cell = 0;
  SWitness witness;
  CentralData data;  // annotation of the hit cell (carries H_sigma)
};

/// Scans every cell of the complex for 0 in S(sigma). Requires d in {2,3}
/// and no monochromatic transversal (std::invalid_argument otherwise).
std::optional<ZeroCellHit> scan_zero_cell(const ColoredFamily& family, const KOrdering& ordering,
                                          SVariant variant);

struct ProbeRow {
  long r = 0;
  int seeds = 0;
  int open_cases = 0;
  int generation_failures = 0;
  std::vector<std::uint64_t> open_seeds;
};

/// d=3, k=2 sweep of verify_theorem over r in [rmin, rmax] and the given
/// number of seeds per r; base carries the remaining generation knobs.
std::vector<ProbeRow> probe_r32(long rmin, long rmax, int seeds, const InstanceSpec& base);

}  // namespace ctv
