#pragma once

#include <cstdint>
#include <vector>

#include "curves.hpp"

namespace ufd {

// Band-restricted comparisons for equal-length curves whose vertices carry
// finitely many position options.  Couplings (discrete) and monotone paths
// (continuous) are confined to |i - j| <= w with 0 <= w < n.

// True iff every realisation of u admits a banded coupling with sigma of
// cost <= delta.  With prune_dominated, reachability vectors that are
// bitwise supersets of another surviving vector are dropped; this is sound
// for the decision but incompatible with multiplicity counting.
bool ub_discrete_banded(const uncertain_curve& u, const poly_curve& sigma,
                        std::size_t w, double delta,
                        bool prune_dominated = false);

// True iff the maximum over realisation pairs of the banded discrete
// Fréchet distance is <= delta.  Reachability vectors are keyed by the
// window of fixed options on v.
bool ub_discrete_banded_pair(const uncertain_curve& u,
                             const uncertain_curve& v, std::size_t w,
                             double delta, bool prune_dominated = false);

// All pairwise option distances ||u_i^a - v_j^b|| with |i - j| <= w, sorted
// and deduplicated.  The banded discrete distance of every realisation pair
// is one of these values.
std::vector<double> critical_values_discrete(const uncertain_curve& u,
                                             const uncertain_curve& v,
                                             std::size_t w);

struct banded_counts {
  std::uint64_t above = 0;  // realisation pairs with banded distance > delta
  std::uint64_t total = 0;  // number of realisation pairs
  // Sum of state multiplicities after each processed column.  For the
  // discrete variant, entry i equals the number of option prefixes fixed by
  // then: options of u[0..i] times options of v[0..min(i+w, n-1)].  The
  // continuous variant's window reaches one v-vertex further.
  std::vector<std::uint64_t> column_totals;
};

// Exact tail count of the banded discrete Fréchet distribution at delta,
// under independent uniform options.
banded_counts count_discrete_banded_above(const uncertain_curve& u,
                                          const uncertain_curve& v,
                                          std::size_t w, double delta);

// Expectation of the banded discrete Fréchet distance under independent
// uniform options, computed exactly from the critical-value step function.
double expected_discrete_banded(const uncertain_curve& u,
                                const uncertain_curve& v, std::size_t w);

// True iff the maximum over realisation pairs of the banded continuous
// Fréchet distance is <= delta.  The monotone path through the free-space
// diagram is clipped against the two band border lines.
bool ub_continuous_banded(const uncertain_curve& u, const uncertain_curve& v,
                          std::size_t w, double delta);

// Exact tail count for the banded continuous distance at delta.
banded_counts count_continuous_banded_above(const uncertain_curve& u,
                                            const uncertain_curve& v,
                                            std::size_t w, double delta);

// Expectation of the banded continuous Fréchet distance under independent
// uniform options.
double expected_continuous_banded(const uncertain_curve& u,
                                  const uncertain_curve& v, std::size_t w);

}  // namespace ufd
