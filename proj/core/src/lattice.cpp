#include "ndsig/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace ndsig {

std::int64_t gcd3(IntVec3 v) {
  return std::gcd(std::gcd(std::llabs(v.x), std::llabs(v.y)), std::llabs(v.z));
}

IntVec3 primitive(IntVec3 v) {
  const std::int64_t g = gcd3(v);
  if (g == 0) return v;
  return {v.x / g, v.y / g, v.z / g};
}

std::int64_t segment_lattice_count(IntVec3 a, IntVec3 b) { return gcd3(b - a) + 1; }

std::vector<IntVec3> segment_lattice_points(IntVec3 a, IntVec3 b) {
  const std::int64_t g = gcd3(b - a);
  if (g == 0) return {a};
  const IntVec3 step = primitive(b - a);
  std::vector<IntVec3> out;
  out.reserve(static_cast<std::size_t>(g + 1));
  for (std::int64_t i = 0; i <= g; ++i) out.push_back(a + i * step);
  return out;
}

std::string format(IntVec3 v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, IntVec3 v) {
  return os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
}

IntVec3 permute(IntVec3 v, std::array<int, 3> perm) {
  return {v[static_cast<std::size_t>(perm[0])], v[static_cast<std::size_t>(perm[1])],
          v[static_cast<std::size_t>(perm[2])]};
}

Support::Support(std::initializer_list<ExponentVector> pts)
    : Support(std::vector<ExponentVector>(pts)) {}

Support::Support(std::vector<ExponentVector> pts) : points_(std::move(pts)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Support::contains(const ExponentVector& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Support Support::with(const ExponentVector& p) const {
  auto pts = points_;
  pts.push_back(p);
  return Support(std::move(pts));
}

Support Support::without(const ExponentVector& p) const {
  auto pts = points_;
  std::erase(pts, p);
  return Support(std::move(pts));
}

std::int64_t Support::max_coordinate() const {
  std::int64_t m = 0;
  for (const auto& p : points_) m = std::max({m, p.x, p.y, p.z});
  return m;
}

Support Support::permuted(std::array<int, 3> perm) const {
  std::vector<ExponentVector> pts;
  pts.reserve(points_.size());
  for (const auto& p : points_) pts.push_back(permute(p, perm));
  return Support(std::move(pts));
}

}  // namespace ndsig
