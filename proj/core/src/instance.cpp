#include "ctv/instance.hpp"

#include "ctv/direction.hpp"
#include "ctv/linalg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace ctv {

void InstanceSpec::validate() const {
  if (k < 0 || d <= k) throw std::invalid_argument("spec: requires d > k >= 0");
  if (r < 1) throw std::invalid_argument("spec: r must be at least 1");
  if (members_per_color < 1) throw std::invalid_argument("spec: members_per_color must be >= 1");
  if (coord_bound < 1) throw std::invalid_argument("spec: coord_bound must be >= 1");
  if (spread < 1) throw std::invalid_argument("spec: spread must be >= 1");
  if (kind == PolyKind::VPoly && vpoly_vertices < 1)
    throw std::invalid_argument("spec: vpoly_vertices must be >= 1");
  if (oracle != "partition" && oracle != "free")
    throw std::invalid_argument("spec: oracle must be 'partition' or 'free'");
  long n = r * members_per_color;
  if (n < k + 1) throw std::invalid_argument("spec: too few members to span an ordering in R^k");
}

long Rng::range(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::range: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t lim = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = g_();
  } while (x >= lim);
  return lo + static_cast<long>(x % span);
}

Rational Rng::coord(long b) {
  long num = range(-b, b);
  long den = range(1, b);
  return Rational(num, den);
}

namespace {

Point random_point(Rng& rng, long dim, long b) {
  Point p(dim);
  for (long j = 0; j < dim; ++j) p[j] = rng.coord(b);
  return p;
}

Polytope random_member(Rng& rng, const InstanceSpec& spec) {
  long nv = 2;
  if (spec.kind == PolyKind::Simplices) nv = spec.d + 1;
  else if (spec.kind == PolyKind::VPoly) nv = spec.vpoly_vertices;
  // Vertices are sampled around a common center with extent shrunk by
  // `spread`, so members stay small relative to the bounding box; large
  // members in a shared box nearly always admit a common hyperplane.
  Point center = random_point(rng, spec.d, spec.coord_bound);
  Rational shrink(Int(1), Int(spec.spread));
  std::vector<Point> verts;
  for (long v = 0; v < nv; ++v) {
    Point p(spec.d);
    for (long j = 0; j < spec.d; ++j) p[j] = center[j] + rng.coord(spec.coord_bound) * shrink;
    verts.push_back(std::move(p));
  }
  return Polytope::make(std::move(verts));
}

}  // namespace

Instance generate_instance(const InstanceSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  size_t n = static_cast<size_t>(spec.r * spec.members_per_color);
  Instance inst;
  inst.spec = spec;
  inst.family.d = static_cast<size_t>(spec.d);
  inst.family.coloring.r = static_cast<int>(spec.r);

  for (long c = 1; c <= spec.r; ++c) {
    std::vector<Polytope> cls;
    for (int attempt = 0;; ++attempt) {
      cls.clear();
      for (long m = 0; m < spec.members_per_color; ++m) cls.push_back(random_member(rng, spec));
      if (!spec.hard) break;
      if (!find_hyperplane_transversal(cls, inst.family.d)) break;
      if (attempt + 1 >= 50)
        throw std::runtime_error(
            "generate_instance: hard mode could not produce a transversal-free class " +
            std::to_string(c) + " within 50 retries (seed " + std::to_string(spec.seed) + ")");
    }
    for (auto& m : cls) {
      inst.family.members.push_back(std::move(m));
      inst.family.coloring.color.push_back(static_cast<int>(c));
    }
  }

  char buf[16];
  for (size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "m%03zu", i);
    inst.family.ids.emplace_back(buf);
  }
  inst.family.validate();

  inst.ordering.k = static_cast<size_t>(spec.k);
  for (int attempt = 0;; ++attempt) {
    inst.ordering.points.clear();
    for (size_t i = 0; i < n; ++i)
      inst.ordering.points.push_back(random_point(rng, spec.k, spec.coord_bound));
    if (inst.ordering.valid(n) &&
        (spec.k == 0 || is_general_position(inst.ordering.points, inst.ordering.k)))
      break;
    if (attempt + 1 >= 50)
      throw std::runtime_error("generate_instance: no general-position ordering in 50 retries");
  }
  return inst;
}

std::unique_ptr<IndependenceOracle> make_oracle(const Instance& inst) {
  if (inst.spec.oracle == "free")
    return std::make_unique<FreeMatroid>(static_cast<int>(inst.family.size()));
  return std::make_unique<PartitionMatroid>(inst.family.coloring);
}

}  // namespace ctv
