#ifndef UFD_ORACLE_HPP
#define UFD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ufd/curves.hpp"
#include "ufd/frechet.hpp"
#include "ufd/reductions.hpp"

namespace ufd {

// Ground-truth statistics over the full realisation grid of two uncertain
// curves, computed by exhaustive enumeration.  Every realisation pair is
// weighted uniformly.  Throws size_error when the grid exceeds the
// enumeration cap.
struct enumeration_stats {
  double min = 0.0;
  double max = 0.0;
  double expected = 0.0;
  std::uint64_t pairs = 0;
};

// Discrete Frechet distance per pair; `band` restricts couplings to
// |i - j| <= band (vertex indices), which requires equal curve lengths.
enumeration_stats oracle_min_max_expected_discrete(
    const uncertain_curve& u, const uncertain_curve& v,
    std::optional<std::size_t> band = std::nullopt);

// Continuous Frechet distance per pair, each value bisected to `tol`.
// `band` restricts matchings to |x - y| <= band in vertex parameter space.
enumeration_stats oracle_min_max_expected_continuous(
    const uncertain_curve& u, const uncertain_curve& v, double tol = 1e-7,
    std::optional<std::size_t> band = std::nullopt);

// Discrete Frechet distance of a precise pair under the band constraint
// (equal lengths required unless band is absent).
double banded_discrete_frechet(const poly_curve& a, const poly_curve& b,
                               std::optional<std::size_t> band = std::nullopt);

// Continuous Frechet decision for a precise pair restricted to matchings
// with |x - y| <= band in vertex parameter space (equal lengths required).
bool banded_continuous_decide(const poly_curve& a, const poly_curve& b,
                              std::size_t band, double delta);

double banded_continuous_value(const poly_curve& a, const poly_curve& b,
                               std::size_t band, double tol = 1e-7);

// Exhaustive satisfying-assignment count (num_vars <= 30).
std::uint64_t count_satisfying_assignments(const cnf_formula& f);

struct subset_sum_result {
  bool satisfiable = false;
  std::vector<std::size_t> witness;  // 1-based indices, empty when tau = 0
};

// Exhaustive Subset-Sum over positive integer values (n <= 30).  The empty
// subset makes target 0 trivially reachable.
subset_sum_result subset_sum_brute(const std::vector<long long>& values,
                                   long long target);

}  // namespace ufd

#endif
