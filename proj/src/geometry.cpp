#include "ufd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ufd {

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw argument_error(std::string(what) + ": dimension mismatch");
}

}  // namespace

point operator+(const point& a, const point& b) {
  check_same_dim(a.dim(), b.dim(), "point+point");
  point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
  return r;
}

point operator-(const point& a, const point& b) {
  check_same_dim(a.dim(), b.dim(), "point-point");
  point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
  return r;
}

point operator*(double s, const point& a) {
  point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] *= s;
  return r;
}

double dot(const point& a, const point& b) {
  check_same_dim(a.dim(), b.dim(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const point& a) { return std::sqrt(dot(a, a)); }

point segment::at(double t) const {
  point r = a;
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] += t * (b[i] - a[i]);
  return r;
}

double segment::length() const { return point_point_distance(a, b); }

interval intersect(const interval& p, const interval& q) {
  return {std::max(p.lo, q.lo), std::min(p.hi, q.hi)};
}

double point_point_distance(const point& p, const point& q) {
  return norm(p - q);
}

double point_segment_closest_param(const point& p, const segment& s) {
  point d = s.b - s.a;
  double len2 = dot(d, d);
  if (len2 == 0.0) return 0.0;
  double t = dot(p - s.a, d) / len2;
  return std::clamp(t, 0.0, 1.0);
}

double point_segment_distance(const point& p, const segment& s) {
  return point_point_distance(p, s.at(point_segment_closest_param(p, s)));
}

double segment_segment_distance(const segment& s, const segment& t) {
  // Minimum of the four point-to-segment distances; correct unless the
  // segments properly cross, which the 2D orientation test detects.
  double d = std::min(
      std::min(point_segment_distance(s.a, t), point_segment_distance(s.b, t)),
      std::min(point_segment_distance(t.a, s), point_segment_distance(t.b, s)));
  if (s.a.dim() == 2) {
    auto orient = [](const point& a, const point& b, const point& c) {
      return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    };
    double o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
    double o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return 0.0;
  }
  return d;
}

interval free_space_interval(const point& p, const segment& s, double delta) {
  check_same_dim(p.dim(), s.a.dim(), "free_space_interval");
  double de = delta + kTol;
  if (de < 0.0) return interval::empty();
  point d = s.b - s.a;
  point w = s.a - p;
  double a = dot(d, d);
  double b = 2.0 * dot(w, d);
  double c = dot(w, w) - de * de;
  if (a == 0.0) {
    // Degenerate segment: either all of [0,1] or nothing.
    return c <= 0.0 ? interval{0.0, 1.0} : interval::empty();
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return interval::empty();
  double sq = std::sqrt(disc);
  double t0 = (-b - sq) / (2.0 * a);
  double t1 = (-b + sq) / (2.0 * a);
  interval r{std::max(t0, 0.0), std::min(t1, 1.0)};
  if (r.is_empty()) return interval::empty();
  return r;
}

uncertain_region uncertain_region::make_point(point p) {
  uncertain_region r;
  r.kind = region_kind::point;
  r.points.push_back(std::move(p));
  return r;
}

uncertain_region uncertain_region::make_options(std::vector<point> pts) {
  if (pts.empty()) throw argument_error("options region needs >= 1 point");
  uncertain_region r;
  r.kind = region_kind::options;
  r.points = std::move(pts);
  return r;
}

uncertain_region uncertain_region::make_disk(point c, double rad) {
  if (rad < 0.0) throw argument_error("disk radius must be >= 0");
  uncertain_region r;
  r.kind = region_kind::disk;
  r.center = std::move(c);
  r.radius = rad;
  return r;
}

uncertain_region uncertain_region::make_segment(point a, point b) {
  check_same_dim(a.dim(), b.dim(), "segment region");
  uncertain_region r;
  r.kind = region_kind::segment;
  r.seg_a = std::move(a);
  r.seg_b = std::move(b);
  return r;
}

std::size_t uncertain_region::dim() const {
  switch (kind) {
    case region_kind::point:
    case region_kind::options:
      return points.front().dim();
    case region_kind::disk:
      return center.dim();
    case region_kind::segment:
      return seg_a.dim();
  }
  return 0;
}

std::size_t uncertain_region::option_count() const {
  if (!is_indecisive())
    throw argument_error("option_count: region is not an option set");
  return points.size();
}

const point& uncertain_region::option(std::size_t i) const {
  if (!is_indecisive())
    throw argument_error("option: region is not an option set");
  return points.at(i);
}

double uncertain_region::diameter() const {
  switch (kind) {
    case region_kind::point:
      return 0.0;
    case region_kind::options: {
      double d = 0.0;
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          d = std::max(d, point_point_distance(points[i], points[j]));
      return d;
    }
    case region_kind::disk:
      return 2.0 * radius;
    case region_kind::segment:
      return point_point_distance(seg_a, seg_b);
  }
  return 0.0;
}

bool uncertain_region::contains(const point& p, double tol) const {
  return region_point_distance(*this, p) <= tol;
}

point nearest_point_in_region(const point& x, const uncertain_region& u) {
  switch (u.kind) {
    case region_kind::point:
      return u.points.front();
    case region_kind::options: {
      std::size_t best = 0;
      double bd = point_point_distance(x, u.points.front());
      for (std::size_t i = 1; i < u.points.size(); ++i) {
        double d = point_point_distance(x, u.points[i]);
        if (d < bd) {
          bd = d;
          best = i;
        }
      }
      return u.points[best];
    }
    case region_kind::disk: {
      point v = x - u.center;
      double d = norm(v);
      if (d <= u.radius) return x;
      return u.center + (u.radius / d) * v;
    }
    case region_kind::segment: {
      segment s{u.seg_a, u.seg_b};
      return s.at(point_segment_closest_param(x, s));
    }
  }
  return x;
}

double region_point_distance(const uncertain_region& u, const point& x) {
  switch (u.kind) {
    case region_kind::point:
      return point_point_distance(x, u.points.front());
    case region_kind::options: {
      double d = std::numeric_limits<double>::infinity();
      for (const point& p : u.points)
        d = std::min(d, point_point_distance(x, p));
      return d;
    }
    case region_kind::disk:
      return std::max(0.0, point_point_distance(x, u.center) - u.radius);
    case region_kind::segment:
      return point_segment_distance(x, segment{u.seg_a, u.seg_b});
  }
  return 0.0;
}

double region_region_distance(const uncertain_region& u,
                              const uncertain_region& v) {
  if (u.kind == region_kind::point || u.kind == region_kind::options) {
    double d = std::numeric_limits<double>::infinity();
    for (const point& p : u.points) d = std::min(d, region_point_distance(v, p));
    return d;
  }
  if (v.kind == region_kind::point || v.kind == region_kind::options)
    return region_region_distance(v, u);
  if (u.kind == region_kind::disk && v.kind == region_kind::disk)
    return std::max(0.0, point_point_distance(u.center, v.center) - u.radius -
                             v.radius);
  if (u.kind == region_kind::disk && v.kind == region_kind::segment)
    return std::max(0.0, point_segment_distance(
                             u.center, segment{v.seg_a, v.seg_b}) -
                             u.radius);
  if (u.kind == region_kind::segment && v.kind == region_kind::disk)
    return region_region_distance(v, u);
  return segment_segment_distance(segment{u.seg_a, u.seg_b},
                                  segment{v.seg_a, v.seg_b});
}

std::vector<interval> region_segment_params(const uncertain_region& u,
                                            const segment& s, double tol) {
  std::vector<interval> out;
  switch (u.kind) {
    case region_kind::point:
    case region_kind::options: {
      for (const point& p : u.points) {
        double t = point_segment_closest_param(p, s);
        if (point_point_distance(p, s.at(t)) <= tol) out.push_back({t, t});
      }
      break;
    }
    case region_kind::disk: {
      interval r = free_space_interval(u.center, s, u.radius + tol - kTol);
      if (!r.is_empty()) out.push_back(r);
      break;
    }
    case region_kind::segment: {
      interval r = inflated_region_segment_params(u, s, tol);
      if (!r.is_empty()) out.push_back(r);
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const interval& a, const interval& b) { return a.lo < b.lo; });
  return out;
}

interval inflated_region_segment_params(const uncertain_region& u,
                                        const segment& s, double r) {
  if (u.kind == region_kind::options && u.points.size() > 1)
    throw unsupported_model_error(
        "inflated_region_segment_params: region must be convex");
  if (u.kind == region_kind::point ||
      (u.kind == region_kind::options && u.points.size() == 1))
    return free_space_interval(u.points.front(), s, r);
  if (u.kind == region_kind::disk)
    return free_space_interval(u.center, s, u.radius + r);

  // Segment region: dist(s.at(t), u) is convex in t.  Locate the minimum by
  // ternary search, then bisect outward for the two crossings of level r.
  auto f = [&](double t) { return region_point_distance(u, s.at(t)); };
  double re = r + kTol;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2))
      hi = m2;
    else
      lo = m1;
  }
  double tmin = 0.5 * (lo + hi);
  if (f(tmin) > re) return interval::empty();
  auto cross = [&](double inside, double outside) {
    // f(inside) <= re; find the boundary toward `outside`.
    if (f(outside) <= re) return outside;
    for (int it = 0; it < 100; ++it) {
      double m = 0.5 * (inside + outside);
      if (f(m) <= re)
        inside = m;
      else
        outside = m;
    }
    return inside;
  };
  return {cross(tmin, 0.0), cross(tmin, 1.0)};
}

namespace {

// Intersection of the ray origin + t * dir (t >= 0) with a disk, as a t
// interval; empty when the ray misses the disk.
interval ray_disk_interval(const point& origin, const point& dir,
                           const disk& dk) {
  point w = origin - dk.center;
  double a = dot(dir, dir);
  double b = 2.0 * dot(w, dir);
  double c = dot(w, w) - (dk.radius + kTol) * (dk.radius + kTol);
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0 || a == 0.0) return interval::empty();
  double sq = std::sqrt(disc);
  double t0 = (-b - sq) / (2.0 * a);
  double t1 = (-b + sq) / (2.0 * a);
  if (t1 < 0.0) return interval::empty();
  return {std::max(t0, 0.0), t1};
}

}  // namespace

std::optional<stab_result> stab_ordered_disks_from_point(
    const point& origin, const std::vector<disk>& disks,
    const segment& target) {
  if (origin.dim() != 2)
    throw unsupported_model_error("stab_ordered_disks_from_point: 2D only");

  std::vector<point> dirs;
  auto add_dir = [&](double dx, double dy) {
    double n = std::hypot(dx, dy);
    if (n > 0.0) dirs.push_back(point(dx / n, dy / n));
  };
  for (const disk& dk : disks) {
    point v = dk.center - origin;
    double d = norm(v);
    add_dir(v[0], v[1]);
    if (d > dk.radius + kTol) {
      double phi = std::atan2(v[1], v[0]);
      double alpha = std::asin(std::min(1.0, dk.radius / d));
      add_dir(std::cos(phi + alpha), std::sin(phi + alpha));
      add_dir(std::cos(phi - alpha), std::sin(phi - alpha));
    }
  }
  add_dir(target.a[0] - origin[0], target.a[1] - origin[1]);
  add_dir(target.b[0] - origin[0], target.b[1] - origin[1]);
  add_dir(0.5 * (target.a[0] + target.b[0]) - origin[0],
          0.5 * (target.a[1] + target.b[1]) - origin[1]);

  std::optional<stab_result> best;
  for (const point& dir : dirs) {
    double reach = 0.0;  // running lower bound on the ray parameter
    bool ok = true;
    for (const disk& dk : disks) {
      interval iv = ray_disk_interval(origin, dir, dk);
      if (iv.is_empty() || iv.hi + kTol < reach) {
        ok = false;
        break;
      }
      reach = std::max(reach, iv.lo);
    }
    if (!ok) continue;

    // Intersect the ray with the target segment.
    point sd = target.b - target.a;
    double a11 = dir[0], a12 = -(sd[0]);
    double a21 = dir[1], a22 = -(sd[1]);
    double rhs1 = target.a[0] - origin[0];
    double rhs2 = target.a[1] - origin[1];
    double D = a11 * a22 - a12 * a21;
    if (std::abs(D) > 1e-14) {
      double t = (rhs1 * a22 - a12 * rhs2) / D;
      double s = (a11 * rhs2 - rhs1 * a21) / D;
      if (t + kTol >= reach && s >= -kTol && s <= 1.0 + kTol) {
        s = std::clamp(s, 0.0, 1.0);
        if (!best || s > best->target_param)
          best = stab_result{target.at(s), s};
      }
    } else {
      // Ray parallel to target: usable only when collinear.
      if (std::abs(dir[0] * rhs2 - dir[1] * rhs1) <= 1e-12) {
        double len = norm(sd);
        if (len > 0.0) {
          // Parameters of target endpoints along the ray.
          double ta = dot(target.a - origin, dir);
          double tb = dot(target.b - origin, dir);
          // Furthest target param s with ray param >= reach and s in [0,1].
          for (double s : {1.0, 0.0}) {
            double t = ta + s * (tb - ta);
            if (t + kTol >= reach && t >= -kTol) {
              if (!best || s > best->target_param)
                best = stab_result{target.at(s), s};
              break;
            }
          }
          // Interior boundary point where ray param equals reach.
          if (tb != ta) {
            double s = (reach - ta) / (tb - ta);
            if (s >= -kTol && s <= 1.0 + kTol) {
              s = std::clamp(s, 0.0, 1.0);
              if (!best || s > best->target_param)
                best = stab_result{target.at(s), s};
            }
          }
        }
      }
    }
  }
  return best;
}

}  // namespace ufd
