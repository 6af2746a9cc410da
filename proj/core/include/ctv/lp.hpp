#pragma once

#include "ctv/rational.hpp"

#include <variant>
#include <vector>

namespace ctv {

enum class Rel { EQ, LE, LT };

struct LinRow {
  std::vector<Rational> a;
  Rational b;
  Rel rel = Rel::LE;
};

/// A system of linear equalities and (possibly strict) inequalities a.x ? b.
struct LinearSystem {
  size_t num_vars = 0;
  std::vector<LinRow> rows;

  void add(std::vector<Rational> a, Rational b, Rel rel) {
    rows.push_back({std::move(a), std::move(b), rel});
  }
};

/// One multiplier per row of the refuted system. Multipliers on LE/LT rows
/// are nonnegative, on EQ rows unrestricted. The combination of rows zeroes
/// out all variables and produces either a negative right-hand side, or a
/// nonpositive one with positive weight on some strict row.
struct FarkasCertificate {
  std::vector<Rational> multipliers;
};

struct LpFeasible {
  std::vector<Rational> x;
};

using FeasResult = std::variant<LpFeasible, FarkasCertificate>;

/// Decides exact feasibility by two-phase rational simplex with Bland's
/// rule. Strict rows are handled by maximizing a shared slack margin and
/// requiring it to come out positive. Every returned answer has already
/// been re-verified exactly.
FeasResult solve_feasibility(const LinearSystem& sys);

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x);
bool verify_farkas(const LinearSystem& sys, const FarkasCertificate& cert);

}  // namespace ctv
