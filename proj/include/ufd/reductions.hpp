#ifndef UFD_REDUCTIONS_HPP
#define UFD_REDUCTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ufd/curves.hpp"

namespace ufd {

// CNF formula over variables 1..num_vars; clauses hold signed DIMACS
// literals (+v / -v, never 0).
struct cnf_formula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

// DIMACS CNF parser; reports the 1-based line and token of the first error.
cnf_formula parse_dimacs(const std::string& text);

// Region model of the variable gadgets in the CNF-to-curves construction.
enum class reduction_model { indecisive, disk, segment };

// epsilon is valid for the discrete construction on (0, 0.25); the
// continuous distance gap additionally needs epsilon >= 0.12.
bool eps_valid(double eps);
bool eps_valid_for_continuous(double eps);

struct cnf_curves {
  uncertain_curve vc;  // variable curve, one uncertain gadget per variable
  poly_curve cc;       // clause curve, one precise gadget per clause
  double eps = 0.0;
};

// Builds the two curves whose max Frechet distance over realisations
// separates satisfiable from unsatisfiable formulas:
//   discrete:   max d_dF = 1 + eps iff satisfiable, else 1
//   continuous: max d_F  = (1 + eps) * 2/sqrt(5) iff satisfiable, else 1
// |vc| = 2m + 3 and |cc| = n(2m + 1) for m variables, n clauses.
cnf_curves cnf_to_curves(const cnf_formula& f, double eps,
                         reduction_model model);

// Segment-model variant whose clause curve gains one catch gadget per
// variable, making the expected discrete distance count satisfying
// assignments:  mu = 1 + N eps^{m+1} / ((1+m)(1+2 eps)^m).
// |cc| = n(2m + 1) + m(2m + 2).
cnf_curves cnf_to_curves_expected_segment(const cnf_formula& f, double eps);

enum class expected_variant {
  discrete_indecisive,
  continuous_indecisive,
  discrete_segment,
};

// Inverts the expected-distance formula of the chosen variant, returning the
// (unrounded) number of satisfying assignments recovered from mean mu.
double count_from_expected(expected_variant variant, double mu, int num_vars,
                           double eps);

// Subset-Sum instance (positive integer values, target tau) turned into a
// lower-bound Frechet instance: dF^min(pi, u) <= delta iff some subset of
// the values sums to tau.
struct lb_instance {
  poly_curve pi;
  uncertain_curve u;  // 4n + 1 vertical segments
  double delta = 0.0;
};

lb_instance subsetsum_to_lb_instance(const std::vector<long long>& values,
                                     long long target);

// Realisation of the instance's uncertain curve witnessing the subset with
// 1-based indices `index_set` (whose values must sum to target).
realisation rr_witness(const std::vector<long long>& values, long long target,
                       const std::vector<std::size_t>& index_set);

// All 2^n candidate realisations, one per subset, ordered by subset bitmask
// (bit i-1 set = index i chosen).  Rejects n > 20.
std::vector<realisation> rr_candidates(const std::vector<long long>& values);

}  // namespace ufd

#endif
