#ifndef UFD_GEOMETRY_HPP
#define UFD_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "ufd/common.hpp"

namespace ufd {

// A point in R^d.  The dimension is a runtime property; all points taking
// part in one operation must share it.
struct point {
  std::vector<double> x;

  point() = default;
  point(double px, double py) : x{px, py} {}
  explicit point(std::vector<double> coords) : x(std::move(coords)) {}

  std::size_t dim() const { return x.size(); }
  double operator[](std::size_t i) const { return x[i]; }
  double& operator[](std::size_t i) { return x[i]; }

  friend bool operator==(const point& a, const point& b) { return a.x == b.x; }
};

point operator+(const point& a, const point& b);
point operator-(const point& a, const point& b);
point operator*(double s, const point& a);

double dot(const point& a, const point& b);
double norm(const point& a);

struct segment {
  point a;
  point b;

  point at(double t) const;  // a + t (b - a), t in [0, 1]
  double length() const;
};

struct disk {
  point center;
  double radius = 0.0;
};

// Closed interval; empty iff lo > hi.
struct interval {
  double lo = 1.0;
  double hi = 0.0;

  static interval empty() { return {1.0, 0.0}; }
  bool is_empty() const { return lo > hi; }
};

interval intersect(const interval& p, const interval& q);

double point_point_distance(const point& p, const point& q);
double point_segment_distance(const point& p, const segment& s);
double segment_segment_distance(const segment& s, const segment& t);

// Parameter t in [0, 1] of the point of s closest to p.
double point_segment_closest_param(const point& p, const segment& s);

// {t in [0,1] : |p - s.at(t)| <= delta + kTol}, clipped to [0, 1].
// Empty when the segment stays farther than delta from p.
interval free_space_interval(const point& p, const segment& s, double delta);

// One vertex of an uncertain curve: a finite option set (kind point is the
// one-option special case), a closed disk, or a closed line segment.
enum class region_kind { point, options, disk, segment };

struct uncertain_region {
  region_kind kind = region_kind::point;
  std::vector<point> points;  // point / options
  point center;               // disk
  double radius = 0.0;        // disk
  point seg_a, seg_b;         // segment

  static uncertain_region make_point(point p);
  static uncertain_region make_options(std::vector<point> pts);
  static uncertain_region make_disk(point c, double r);
  static uncertain_region make_segment(point a, point b);

  std::size_t dim() const;
  bool is_indecisive() const {
    return kind == region_kind::point || kind == region_kind::options;
  }
  std::size_t option_count() const;        // indecisive kinds only
  const point& option(std::size_t i) const;

  double diameter() const;
  bool contains(const point& p, double tol = kTol) const;
};

// Closest point of U to x (for option sets: the first option attaining the
// minimum, so the choice is deterministic).
point nearest_point_in_region(const point& x, const uncertain_region& u);

double region_point_distance(const uncertain_region& u, const point& x);

// Distance between two regions (0 when they intersect).  Option sets use the
// minimum over options.
double region_region_distance(const uncertain_region& u,
                              const uncertain_region& v);

// Parameter intervals {t : dist(s.at(t), u) <= tol}, sorted by lo.  Point
// options yield degenerate intervals.  Used by the zero test to stab regions
// with a curve segment.
std::vector<interval> region_segment_params(const uncertain_region& u,
                                            const segment& s,
                                            double tol = kTol);

// Parameter interval {t : dist(s.at(t), u) <= r}; u must be convex (point,
// one-option set, disk or segment).  The distance along s to a convex set is
// convex, so the feasible set is one interval, located numerically.
interval inflated_region_segment_params(const uncertain_region& u,
                                        const segment& s, double r);

// Furthest point along `target` (by its a->b parameter) hit by a ray from
// `origin` that passes through every disk in order first.  2D only.
// Candidate directions: tangents from origin to each disk, directions through
// each disk center and through both endpoints of target.  Returns the hit
// point and its parameter on target, or nullopt when no ray works.
struct stab_result {
  point hit;
  double target_param = 0.0;
};
std::optional<stab_result> stab_ordered_disks_from_point(
    const point& origin, const std::vector<disk>& disks, const segment& target);

}  // namespace ufd

#endif
