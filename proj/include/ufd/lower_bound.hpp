#ifndef UFD_LOWER_BOUND_HPP
#define UFD_LOWER_BOUND_HPP

#include <optional>
#include <vector>

#include "ufd/curves.hpp"

namespace ufd {

// All operations here concern the smallest continuous Frechet distance any
// realisation of an uncertain curve can achieve against a reference curve.

// True iff some realisation of u traces exactly the same path as pi, i.e.
// the minimum over realisations is exactly zero.  Works for every region
// kind.
bool min_frechet_is_zero(const poly_curve& pi, const uncertain_curve& u);

struct lb_decision {
  bool yes = false;
  std::optional<realisation> witness;  // set on yes
};

// Exact decision "does some realisation of v come within delta of pi" for
// indecisive curves, with a witness realisation.  O(len(pi) len(v) k^2) for
// k options per vertex.
lb_decision lb_decide_indecisive(const poly_curve& pi,
                                 const uncertain_curve& v, double delta);

// Exact decision for two indecisive curves: do realisations u of a and v of
// b exist with d_F(u, v) <= delta?  O(m n k^4); no witness.
bool lb_decide_indecisive_pair(const uncertain_curve& a,
                               const uncertain_curve& b, double delta);

// Finite r-net of a region: grid vertices with spacing r within distance
// sqrt(d) r of the region, projected onto it.  Every point of the region is
// within sqrt(d) r of some returned point.
std::vector<point> expanded_grid_points(const uncertain_region& u, double r);

// Approximate decision: `yes` comes with a realisation within (1+eps) delta
// of pi; `no` certifies that no realisation is within delta.
lb_decision grid_decider(const poly_curve& pi, const uncertain_curve& u,
                         double delta, double eps);

struct lb_optimum {
  double value = 0.0;  // exact distance of the returned realisation
  realisation witness;
};

// Realisation within factor (1+eps) of the minimum achievable distance.
// Throws zero_distance_error when the minimum is exactly zero (no
// multiplicative guarantee exists there).
lb_optimum lb_optimize(const poly_curve& pi, const uncertain_curve& u,
                       double eps);

// Greedy decision for planar curves whose regions are convex (points,
// one-option sets, disks, segments) and pairwise at distance >= 10 delta.
// Returns the prefix targets along pi (one per region) when the greedy
// matching succeeds.
std::optional<std::vector<point>> greedy_sequence(const poly_curve& pi,
                                                  const uncertain_curve& u,
                                                  double delta);

// Wraps greedy_sequence: `yes` returns a realisation within 3 delta of pi;
// nullopt certifies that no realisation is within delta.
std::optional<realisation> greedy_3_decide(const poly_curve& pi,
                                           const uncertain_curve& u,
                                           double delta);

}  // namespace ufd

#endif
