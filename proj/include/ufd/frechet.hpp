#ifndef UFD_FRECHET_HPP
#define UFD_FRECHET_HPP

#include <string>
#include <utility>
#include <vector>

#include "ufd/curves.hpp"

namespace ufd {

// Monotone coupling: index pairs from (0,0) to (m-1,n-1), each step advancing
// one or both indices by one.
using coupling = std::vector<std::pair<std::size_t, std::size_t>>;

struct discrete_frechet_result {
  double value = 0.0;
  coupling witness;
};

// Discrete Frechet distance with an optimal coupling.
discrete_frechet_result discrete_frechet(const poly_curve& a,
                                         const poly_curve& b);

// True iff the continuous Frechet distance is at most delta (+ kTol), by
// monotone reachability propagation through the free-space diagram.
bool continuous_frechet_decide(const poly_curve& a, const poly_curve& b,
                               double delta);

// Continuous Frechet distance by bisection of the decision procedure down to
// absolute gap `tol`.
double continuous_frechet_value(const poly_curve& a, const poly_curve& b,
                                double tol = 1e-7);

// Free-space diagram at threshold delta as an SVG drawing: cell grid, free
// boundary intervals, and one monotone path when the decision holds.
// Display-only helper for the CLI.
std::string free_space_svg(const poly_curve& a, const poly_curve& b,
                           double delta);

}  // namespace ufd

#endif
