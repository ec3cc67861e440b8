#ifndef UFD_CURVES_HPP
#define UFD_CURVES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ufd/geometry.hpp"

namespace ufd {

// Precise polygonal curve: the polyline through v[0], ..., v.back().
struct poly_curve {
  std::vector<point> v;

  std::size_t size() const { return v.size(); }
  std::size_t dim() const { return v.empty() ? 0 : v.front().dim(); }
  const point& operator[](std::size_t i) const { return v[i]; }
};

// Uncertain polygonal curve: one region per vertex.
struct uncertain_curve {
  std::vector<uncertain_region> regions;

  std::size_t size() const { return regions.size(); }
  std::size_t dim() const { return regions.empty() ? 0 : regions.front().dim(); }
  const uncertain_region& operator[](std::size_t i) const { return regions[i]; }

  bool all_indecisive() const;
  // Largest region diameter.
  double max_diameter() const;
  // Product of option counts; throws size_error above kEnumerationCap and
  // unsupported_model_error for non-indecisive regions.
  std::size_t realisation_count() const;

  static uncertain_curve from_precise(const poly_curve& c);
};

// One realisation: the selected curve plus, per vertex, the option index that
// produced it (-1 when the vertex is a free point of a disk or segment).
struct realisation {
  poly_curve curve;
  std::vector<int> option_index;

  // Every vertex lies in its region (within tol) and every recorded option
  // index reproduces the vertex exactly.
  bool consistent_with(const uncertain_curve& u, double tol = kTol) const;
};

// All realisations of an indecisive curve, in lexicographic option order
// (vertex 0 slowest).  Throws size_error above kEnumerationCap.
std::vector<realisation> enumerate_realisations(const uncertain_curve& u);

// Deterministic uniform sampler: options uniformly, segments uniform in
// length, disks uniform in area.  Draws are independent across vertices.
struct realisation_sampler {
  explicit realisation_sampler(std::uint64_t seed) : eng(seed) {}
  realisation sample(const uncertain_curve& u);

 private:
  std::mt19937_64 eng;
  double unit();  // uniform in [0, 1)
};

realisation sample_realisation(const uncertain_curve& u, std::uint64_t seed);

}  // namespace ufd

#endif
