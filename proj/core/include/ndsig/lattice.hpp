#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace ndsig {

/// Integer point or vector in Z^3. Exponent vectors, lattice points and
/// edge directions all use this type; exponent vectors are the nonnegative ones.
struct IntVec3 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  constexpr std::int64_t operator[](std::size_t i) const {
    return i == 0 ? x : (i == 1 ? y : z);
  }
  constexpr std::int64_t& operator[](std::size_t i) {
    return i == 0 ? x : (i == 1 ? y : z);
  }

  friend constexpr auto operator<=>(const IntVec3&, const IntVec3&) = default;
  friend constexpr bool operator==(const IntVec3&, const IntVec3&) = default;

  friend constexpr IntVec3 operator+(IntVec3 a, IntVec3 b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr IntVec3 operator-(IntVec3 a, IntVec3 b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr IntVec3 operator-(IntVec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr IntVec3 operator*(std::int64_t s, IntVec3 a) {
    return {s * a.x, s * a.y, s * a.z};
  }
};

/// Exponents (a, b, c) of the monomial x^a y^b z^c.
using ExponentVector = IntVec3;

constexpr std::int64_t dot(IntVec3 a, IntVec3 b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr IntVec3 cross(IntVec3 a, IntVec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr std::int64_t det3(IntVec3 a, IntVec3 b, IntVec3 c) {
  return dot(a, cross(b, c));
}

constexpr bool is_zero(IntVec3 v) { return v.x == 0 && v.y == 0 && v.z == 0; }

constexpr bool is_nonnegative(IntVec3 v) { return v.x >= 0 && v.y >= 0 && v.z >= 0; }

constexpr bool is_positive(IntVec3 v) { return v.x > 0 && v.y > 0 && v.z > 0; }

/// Componentwise a <= b.
constexpr bool dominated_by(IntVec3 a, IntVec3 b) {
  return a.x <= b.x && a.y <= b.y && a.z <= b.z;
}

std::int64_t gcd3(IntVec3 v);

/// v divided by the gcd of its components; zero stays zero.
IntVec3 primitive(IntVec3 v);

/// Number of lattice points on the closed segment [a, b].
std::int64_t segment_lattice_count(IntVec3 a, IntVec3 b);

/// Lattice points of the closed segment [a, b], ordered from a to b.
std::vector<IntVec3> segment_lattice_points(IntVec3 a, IntVec3 b);

std::string format(IntVec3 v);  // "(a,b,c)"
std::ostream& operator<<(std::ostream& os, IntVec3 v);

/// Finite set of exponent vectors, kept sorted and duplicate free.
class Support {
 public:
  Support() = default;
  Support(std::initializer_list<ExponentVector> pts);
  explicit Support(std::vector<ExponentVector> pts);

  const std::vector<ExponentVector>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  bool contains(const ExponentVector& p) const;

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  Support with(const ExponentVector& p) const;
  Support without(const ExponentVector& p) const;

  /// Largest coordinate over all points (0 for the empty set).
  std::int64_t max_coordinate() const;

  /// Applies the coordinate permutation (i0,i1,i2): new[k] = old[perm[k]].
  Support permuted(std::array<int, 3> perm) const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::vector<ExponentVector> points_;
};

IntVec3 permute(IntVec3 v, std::array<int, 3> perm);

}  // namespace ndsig
