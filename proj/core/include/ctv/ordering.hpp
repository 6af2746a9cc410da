#pragma once

#include "ctv/hull.hpp"
#include "ctv/hyperplane.hpp"
#include "ctv/rational.hpp"

#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace ctv {

struct ColoredFamily;

/// r-coloring of member indices; colors are 1..r and every class is
/// non-empty.
struct Coloring {
  std::vector<int> color;
  int r = 0;

  bool valid() const;
  /// True if the index set uses each color at most once.
  bool is_colorful(const std::vector<size_t>& members) const;
};

/// Matroid independence interface; the partition-matroid instance recovers
/// the colorful notions.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual bool is_independent(const std::vector<size_t>& members) const = 0;
  virtual int rank() const = 0;
};

class PartitionMatroid final : public IndependenceOracle {
 public:
  explicit PartitionMatroid(Coloring c) : c_(std::move(c)) {}
  bool is_independent(const std::vector<size_t>& members) const override {
    return c_.is_colorful(members);
  }
  int rank() const override { return c_.r; }

 private:
  Coloring c_;
};

/// Everything is independent; turns the rainbow check into the plain
/// consistency check.
class FreeMatroid final : public IndependenceOracle {
 public:
  explicit FreeMatroid(int rank) : rank_(rank) {}
  bool is_independent(const std::vector<size_t>&) const override { return true; }
  int rank() const override { return rank_; }

 private:
  int rank_;
};

/// Explicit table of independent sets (hereditary closure is the caller's
/// responsibility; queried sets are matched as sorted index tuples).
class TableMatroid final : public IndependenceOracle {
 public:
  TableMatroid(int rank, std::set<std::vector<size_t>> independent)
      : rank_(rank), independent_(std::move(independent)) {}
  bool is_independent(const std::vector<size_t>& members) const override;
  int rank() const override { return rank_; }

 private:
  int rank_;
  std::set<std::vector<size_t>> independent_;
};

/// Bijection from member indices to a point configuration affinely
/// spanning R^k.
struct KOrdering {
  size_t k = 0;
  std::vector<Point> points;  // indexed by member

  bool valid(size_t num_members) const;
};

/// Radon pair of member index sets whose phi-images' hulls meet at witness.
struct RadonPair {
  std::vector<size_t> part1, part2;
  Point witness;
  std::vector<Rational> weights1, weights2;  // hull weights for the witness
};

/// All circuits of the ordering's point image whose support is independent
/// under the oracle, sorted by support.
std::vector<RadonPair> enumerate_colorful_circuits(const KOrdering& ordering,
                                                   const IndependenceOracle& oracle);

struct Consistent {};
struct ConsistencyViolation {
  RadonPair pair;                // colorful Radon pair in phi-space
  OrientedHyperplane separator;  // strictly separates the set hulls in R^d
};
using ConsistencyResult = std::variant<Consistent, ConsistencyViolation>;

ConsistencyResult is_rainbow_consistent(const ColoredFamily& family, const KOrdering& ordering,
                                        const IndependenceOracle& oracle);
ConsistencyResult is_consistent_ordering(const ColoredFamily& family, const KOrdering& ordering);

/// Best known bounds on the smallest number of colors r(d, k) that forces
/// the monochromatic-transversal / rainbow-consistency dichotomy.
struct RBound {
  long lower = 0;
  std::optional<long> upper;  // nullopt = unknown
  bool exact = false;
};
RBound r_bound(long d, long k);

}  // namespace ctv
