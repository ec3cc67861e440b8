#include "ufd/curves.hpp"

#include <cmath>

namespace ufd {

bool uncertain_curve::all_indecisive() const {
  for (const auto& r : regions)
    if (!r.is_indecisive()) return false;
  return true;
}

double uncertain_curve::max_diameter() const {
  double d = 0.0;
  for (const auto& r : regions) d = std::max(d, r.diameter());
  return d;
}

std::size_t uncertain_curve::realisation_count() const {
  if (!all_indecisive())
    throw unsupported_model_error(
        "realisation_count: only option-set curves enumerate");
  std::size_t n = 1;
  for (const auto& r : regions) {
    std::size_t k = r.option_count();
    if (k == 0 || n > kEnumerationCap / k)
      throw size_error("realisation_count: enumeration cap exceeded");
    n *= k;
  }
  return n;
}

uncertain_curve uncertain_curve::from_precise(const poly_curve& c) {
  uncertain_curve u;
  u.regions.reserve(c.size());
  for (const point& p : c.v)
    u.regions.push_back(uncertain_region::make_point(p));
  return u;
}

bool realisation::consistent_with(const uncertain_curve& u, double tol) const {
  if (curve.size() != u.size() || option_index.size() != u.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].contains(curve[i], tol)) return false;
    int oi = option_index[i];
    if (oi >= 0) {
      if (!u[i].is_indecisive()) return false;
      if (static_cast<std::size_t>(oi) >= u[i].option_count()) return false;
      if (point_point_distance(u[i].option(oi), curve[i]) > tol) return false;
    }
  }
  return true;
}

std::vector<realisation> enumerate_realisations(const uncertain_curve& u) {
  std::size_t total = u.realisation_count();
  std::size_t n = u.size();
  std::vector<realisation> out;
  out.reserve(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t r = 0; r < total; ++r) {
    realisation re;
    re.curve.v.reserve(n);
    re.option_index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      re.curve.v.push_back(u[i].option(idx[i]));
      re.option_index.push_back(static_cast<int>(idx[i]));
    }
    out.push_back(std::move(re));
    // Advance lexicographically, vertex 0 slowest.
    for (std::size_t i = n; i-- > 0;) {
      if (++idx[i] < u[i].option_count()) break;
      idx[i] = 0;
    }
  }
  return out;
}

double realisation_sampler::unit() {
  // Top 53 bits give a uniform double in [0, 1); identical across platforms.
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

realisation realisation_sampler::sample(const uncertain_curve& u) {
  realisation re;
  re.curve.v.reserve(u.size());
  re.option_index.reserve(u.size());
  for (const auto& reg : u.regions) {
    switch (reg.kind) {
      case region_kind::point:
        re.curve.v.push_back(reg.points.front());
        re.option_index.push_back(0);
        break;
      case region_kind::options: {
        std::size_t k = reg.points.size();
        auto i = static_cast<std::size_t>(unit() * static_cast<double>(k));
        if (i >= k) i = k - 1;
        re.curve.v.push_back(reg.points[i]);
        re.option_index.push_back(static_cast<int>(i));
        break;
      }
      case region_kind::disk: {
        if (reg.center.dim() != 2)
          throw unsupported_model_error("sample: disk sampling is 2D");
        double r = reg.radius * std::sqrt(unit());
        double theta = 2.0 * M_PI * unit();
        point p = reg.center;
        p[0] += r * std::cos(theta);
        p[1] += r * std::sin(theta);
        re.curve.v.push_back(p);
        re.option_index.push_back(-1);
        break;
      }
      case region_kind::segment: {
        segment s{reg.seg_a, reg.seg_b};
        re.curve.v.push_back(s.at(unit()));
        re.option_index.push_back(-1);
        break;
      }
    }
  }
  return re;
}

realisation sample_realisation(const uncertain_curve& u, std::uint64_t seed) {
  realisation_sampler s(seed);
  return s.sample(u);
}

}  // namespace ufd
