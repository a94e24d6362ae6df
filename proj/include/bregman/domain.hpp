#ifndef BREGMAN_DOMAIN_HPP
#define BREGMAN_DOMAIN_HPP

#include <optional>
#include <vector>

#include "bregman/common.hpp"

namespace bregman {

enum class DomainKind { Polytope, Ball, Box, Simplex };

const char* to_string(DomainKind kind);

/// One inequality <a, x> <= b of an H-representation.
struct HalfSpace {
  Vec a;
  double b = 0.0;
};

/// Compact convex domain C with nonempty interior (relative to its affine
/// hull for the simplex, which lives on the hyperplane sum(x) = 1).
///
/// Immutable after construction; all predicates are pure.
class Domain {
 public:
  static Domain polytope(std::vector<HalfSpace> faces, Vec interior_witness);
  static Domain ball(int dim, double radius = 1.0);
  static Domain box(Vec lo, Vec hi);
  static Domain unit_box(int dim);
  /// Standard simplex in ambient coordinates: x_i >= 0, sum(x) = 1.
  static Domain simplex(int dim);

  DomainKind kind() const { return kind_; }
  int dim() const { return dim_; }
  const Vec& interior_witness() const { return witness_; }
  double radius() const { return radius_; }
  const Vec& box_lo() const { return lo_; }
  const Vec& box_hi() const { return hi_; }
  const std::vector<HalfSpace>& half_spaces() const { return faces_; }

  bool contains(const Vec& x) const;
  bool is_interior(const Vec& x) const;

  /// Distance from x to the boundary (exact for ball/box/simplex, min
  /// normalized slack for polytopes). Negative outside C.
  double boundary_distance(const Vec& x) const;

  /// Whether the point reflected through x, i.e. 2x - y, stays in C.
  bool reflection_stays(const Vec& y, const Vec& x) const;

  /// Half the minimum normalized slack of the inactive constraints at y.
  /// Every x in C with |x - y| below this radius reflects inside C.
  /// Empty for the ball: curved boundaries admit no such radius.
  std::optional<double> reflection_radius(const Vec& y) const;

  /// Farthest point of C on the ray from y through b (the chord endpoint
  /// beyond b). Closed form over half-spaces; bisection for the ball.
  Vec chord_exit(const Vec& y, const Vec& b) const;

  /// H-representation of this domain. Box converts in ambient coordinates;
  /// the simplex converts in its affine chart (see chart_dim / to_chart).
  /// Throws for the ball.
  Domain to_polytope() const;

  /// Dimension of the affine chart (dim - 1 for the simplex, dim otherwise).
  int chart_dim() const;
  Vec to_chart(const Vec& x) const;
  Vec from_chart(const Vec& y) const;

  /// Nudge x to boundary distance >= margin, preserving the simplex sum.
  Vec clamp_interior(Vec x, double margin = kInteriorMargin) const;

 private:
  Domain() = default;

  DomainKind kind_ = DomainKind::Box;
  int dim_ = 0;
  Vec witness_;
  std::vector<HalfSpace> faces_;  // Polytope; derived faces for Box/Simplex
  double radius_ = 0.0;           // Ball
  Vec lo_, hi_;                   // Box
};

/// A point certified to lie on bd C at membership tolerance.
struct BoundaryPoint {
  Vec point;
  bool certified = false;
};

BoundaryPoint boundary_point(const Domain& d, const Vec& x);

}  // namespace bregman

#endif  // BREGMAN_DOMAIN_HPP
