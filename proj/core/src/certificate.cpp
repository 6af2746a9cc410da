#include "ctv/certificate.hpp"

#include "ctv/direction.hpp"
#include "ctv/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctv {

TransversalWitness make_transversal_witness(const ColoredFamily& family, int color,
                                            const OrientedHyperplane& h) {
  TransversalWitness w;
  w.color = color;
  w.h = h;
  for (size_t i : family.color_class(color)) {
    auto iv = projection_interval(family.members[i], h.normal);
    IncidenceProof p;
    p.member = i;
    p.vmin = iv.argmin;
    p.vmax = iv.argmax;
    // lambda * lo + (1 - lambda) * hi = t
    p.lambda = (iv.lo == iv.hi) ? Rational(1) : (iv.hi - h.offset) / (iv.hi - iv.lo);
    w.incidence.push_back(std::move(p));
  }
  return w;
}

Certificate verify_theorem(const ColoredFamily& family, const KOrdering& ordering,
                           const IndependenceOracle& oracle) {
  family.validate();
  if (ordering.points.size() != family.size())
    throw std::invalid_argument("verify_theorem: ordering does not cover the family");

  if (auto t = find_monochromatic_transversal(family)) {
    return make_transversal_witness(family, t->first, t->second);
  }

  auto res = is_rainbow_consistent(family, ordering, oracle);
  if (auto* v = std::get_if<ConsistencyViolation>(&res)) {
    return RadonViolation{std::move(v->pair), std::move(v->separator)};
  }

  OpenCase open;
  open.colors_checked = family.coloring.r;
  open.circuits_checked =
      static_cast<long>(enumerate_colorful_circuits(ordering, oracle).size());
  open.note = "no monochromatic transversal; ordering is rainbow consistent";
  return open;
}

namespace {

bool validate_transversal(const TransversalWitness& w, const ColoredFamily& family) {
  if (w.color < 1 || w.color > family.coloring.r) return false;
  if (w.h.normal.size() != family.d) return false;
  bool nonzero = false;
  for (const auto& c : w.h.normal)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) return false;

  auto cls = family.color_class(w.color);
  if (w.incidence.size() != cls.size()) return false;
  std::vector<size_t> covered;
  for (const auto& p : w.incidence) {
    if (p.member >= family.size()) return false;
    const auto& verts = family.members[p.member].vertices;
    if (p.vmin >= verts.size() || p.vmax >= verts.size()) return false;
    if (p.lambda < Rational(0) || p.lambda > Rational(1)) return false;
    Point pt = add(scale(p.lambda, verts[p.vmin]),
                   scale(Rational(1) - p.lambda, verts[p.vmax]));
    if (dot(w.h.normal, pt) != w.h.offset) return false;
    covered.push_back(p.member);
  }
  std::sort(covered.begin(), covered.end());
  return covered == cls;
}

bool validate_radon(const RadonViolation& v, const ColoredFamily& family,
                    const KOrdering& ordering, const IndependenceOracle& oracle) {
  const RadonPair& p = v.pair;
  if (p.part1.empty() || p.part2.empty()) return false;
  if (p.part1.size() != p.weights1.size() || p.part2.size() != p.weights2.size()) return false;

  std::vector<size_t> all = p.part1;
  all.insert(all.end(), p.part2.begin(), p.part2.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (size_t m : all)
    if (m >= family.size()) return false;
  if (!oracle.is_independent(all)) return false;

  // Both weight systems reproduce the phi-space witness.
  auto check_side = [&](const std::vector<size_t>& part, const std::vector<Rational>& wts) {
    Rational total(0);
    Point acc(ordering.k, Rational(0));
    for (size_t t = 0; t < part.size(); ++t) {
      if (wts[t] < Rational(0)) return false;
      total += wts[t];
      for (size_t j = 0; j < ordering.k; ++j) acc[j] += wts[t] * ordering.points[part[t]][j];
    }
    return total == Rational(1) && acc == p.witness;
  };
  if (!check_side(p.part1, p.weights1) || !check_side(p.part2, p.weights2)) return false;

  // The separator strictly separates the polytope hulls in R^d.
  for (size_t m : p.part1)
    for (const auto& vert : family.members[m].vertices)
      if (v.separator.side(vert) >= 0) return false;
  for (size_t m : p.part2)
    for (const auto& vert : family.members[m].vertices)
      if (v.separator.side(vert) <= 0) return false;
  return true;
}

}  // namespace

bool validate_certificate(const Certificate& cert, const ColoredFamily& family,
                          const KOrdering& ordering, const IndependenceOracle& oracle) {
  if (const auto* t = std::get_if<TransversalWitness>(&cert))
    return validate_transversal(*t, family);
  if (const auto* r = std::get_if<RadonViolation>(&cert))
    return validate_radon(*r, family, ordering, oracle);
  return false;  // OpenCase carries no claim to validate
}

std::optional<ZeroCellHit> scan_zero_cell(const ColoredFamily& family, const KOrdering& ordering,
                                          SVariant variant) {
  if (family.d != 2 && family.d != 3)
    throw std::invalid_argument("scan_zero_cell: only d = 2 or 3");
  if (find_monochromatic_transversal(family))
    throw std::invalid_argument("scan_zero_cell: instance has a monochromatic transversal");

  auto C = build_complex(family);
  auto data = annotate_cells(C, family);
  int r = family.coloring.r;
  for (size_t id = 0; id < C.cells.size(); ++id) {
    auto q = lift(ordering, family.coloring, data[id].F_minus, data[id].F_plus);
    auto S = SSigma::make(variant, std::move(q));
    if (auto w = origin_in_s_sigma(S, r)) {
      return ZeroCellHit{id, std::move(*w), std::move(data[id])};
    }
  }
  return std::nullopt;
}

std::vector<ProbeRow> probe_r32(long rmin, long rmax, int seeds, const InstanceSpec& base) {
  if (rmin < 1 || rmax < rmin) throw std::invalid_argument("probe_r32: bad r range");
  std::vector<ProbeRow> rows;
  for (long r = rmin; r <= rmax; ++r) {
    ProbeRow row;
    row.r = r;
    row.seeds = seeds;
    for (int s = 1; s <= seeds; ++s) {
      InstanceSpec spec = base;
      spec.d = 3;
      spec.k = 2;
      spec.r = r;
      spec.seed = static_cast<std::uint64_t>(s);
      try {
        Instance inst = generate_instance(spec);
        auto oracle = make_oracle(inst);
        auto cert = verify_theorem(inst.family, inst.ordering, *oracle);
        if (std::holds_alternative<OpenCase>(cert)) {
          ++row.open_cases;
          row.open_seeds.push_back(spec.seed);
        }
      } catch (const std::runtime_error&) {
        ++row.generation_failures;  // hard-mode budget exhausted
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ctv
