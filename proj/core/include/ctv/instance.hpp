#pragma once

#include "ctv/family.hpp"
#include "ctv/ordering.hpp"
#include "ctv/rational.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>

namespace ctv {

enum class PolyKind { Segments, Simplices, VPoly };

/// Everything needed to regenerate an instance; generation is a pure
/// function of this record.
struct InstanceSpec {
  long d = 2;
  long k = 1;
  long r = 3;
  long members_per_color = 3;
  PolyKind kind = PolyKind::Segments;
  long vpoly_vertices = 3;  // only for VPoly
  long coord_bound = 12;    // numerators and denominators bounded by this
  long spread = 4;          // member diameter ~ box size / spread
  std::uint64_t seed = 1;
  bool hard = false;  // resample classes that admit a hyperplane transversal
  std::string oracle = "partition";

  void validate() const;  // throws std::invalid_argument
};

struct Instance {
  InstanceSpec spec;
  ColoredFamily family;
  KOrdering ordering;
};

/// Deterministic bounded sampler on top of mt19937_64 (the raw generator
/// is standardized; distributions are not, so rejection sampling is done
/// by hand).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  /// Uniform integer in [lo, hi].
  long range(long lo, long hi);
  /// Rational with |numerator| <= b and 1 <= denominator <= b.
  Rational coord(long b);

 private:
  std::mt19937_64 g_;
};

/// Deterministic instance generation. Hard mode retries each color class
/// up to 50 times until it has no hyperplane transversal, and throws
/// std::runtime_error when the budget is exhausted. The ordering is
/// resampled (up to 50 times) until it is a valid general-position
/// k-ordering.
Instance generate_instance(const InstanceSpec& spec);

/// Oracle selected by the spec: the family's partition matroid, or a free
/// matroid for plain consistency.
std::unique_ptr<IndependenceOracle> make_oracle(const Instance& inst);

}  // namespace ctv
