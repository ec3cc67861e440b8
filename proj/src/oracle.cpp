#include "ufd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "ufd/common.hpp"
#include "ufd/geometry.hpp"

namespace ufd {

namespace {

constexpr double keps = 1e-12;  // contiguity slack on top of the kTol widening

// Merges [lo, hi] into the hull kept at iv.  Hull end points are always
// genuinely reachable; interior gaps are never queried by the propagation.
void merge_hull(interval& iv, double lo, double hi) {
  if (lo > hi) return;
  if (iv.is_empty()) {
    iv = {lo, hi};
  } else {
    iv.lo = std::min(iv.lo, lo);
    iv.hi = std::max(iv.hi, hi);
  }
}

bool in_band(std::size_t i, std::size_t j, std::size_t w) {
  return (i >= j ? i - j : j - i) <= w;
}

}  // namespace

double banded_discrete_frechet(const poly_curve& a, const poly_curve& b,
                               std::optional<std::size_t> band) {
  if (a.size() == 0 || b.size() == 0) throw precondition_error("empty curve");
  if (band && a.size() != b.size())
    throw precondition_error("band constraint requires equal curve lengths");
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> prev(n, inf);
  std::vector<double> cur(n, inf);
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(cur.begin(), cur.end(), inf);
    for (std::size_t j = 0; j < n; ++j) {
      if (band && !in_band(i, j, *band)) continue;
      double best;
      if (i == 0 && j == 0) {
        best = 0.0;
      } else {
        best = inf;
        if (i > 0) best = std::min(best, prev[j]);
        if (j > 0) best = std::min(best, cur[j - 1]);
        if (i > 0 && j > 0) best = std::min(best, prev[j - 1]);
      }
      if (best == inf) continue;
      cur[j] = std::max(best, point_point_distance(a[i], b[j]));
    }
    std::swap(prev, cur);
  }
  const double out = prev[n - 1];
  if (out == inf) throw precondition_error("band admits no coupling");
  return out;
}

bool banded_continuous_decide(const poly_curve& a, const poly_curve& b,
                              std::size_t w, double delta) {
  if (a.size() == 0 || b.size() == 0) throw precondition_error("empty curve");
  if (a.size() != b.size())
    throw precondition_error("band constraint requires equal curve lengths");
  const std::size_t n = a.size();
  if (point_point_distance(a[0], b[0]) > delta + kTol) return false;
  if (point_point_distance(a[n - 1], b[n - 1]) > delta + kTol) return false;
  if (n == 1) return true;

  const std::size_t c = n - 1;  // cells per axis; x follows a, y follows b
  std::vector<std::vector<interval>> lr(c, std::vector<interval>(c));
  std::vector<std::vector<interval>> br(c, std::vector<interval>(c));

  // Bottom edge y = 0: band clips it to x <= w; reach must stay contiguous
  // from the start corner.
  bool chain = true;
  for (std::size_t i = 0; i < c && i <= w && chain; ++i) {
    interval f = free_space_interval(b[0], segment{a[i], a[i + 1]}, delta);
    if (f.is_empty() || static_cast<double>(i) + f.lo > i + keps) break;
    double hi = std::min(i + f.hi, static_cast<double>(w));
    if (hi < i - keps) break;
    br[i][0] = {static_cast<double>(i), hi};
    chain = i + f.hi >= i + 1 - keps && i + 1 <= w;
  }
  // Left edge x = 0, clipped to y <= w.
  chain = true;
  for (std::size_t j = 0; j < c && j <= w && chain; ++j) {
    interval f = free_space_interval(a[0], segment{b[j], b[j + 1]}, delta);
    if (f.is_empty() || static_cast<double>(j) + f.lo > j + keps) break;
    double hi = std::min(j + f.hi, static_cast<double>(w));
    if (hi < j - keps) break;
    lr[0][j] = {static_cast<double>(j), hi};
    chain = j + f.hi >= j + 1 - keps && j + 1 <= w;
  }

  bool final_corner = false;
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t jlo = i > w ? i - w : 0;
    const std::size_t jhi = std::min(c - 1, i + w);
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const interval L = lr[i][j];
      const interval B = br[i][j];
      if (L.is_empty() && B.is_empty()) continue;

      interval rf = free_space_interval(a[i + 1], segment{b[j], b[j + 1]},
                                        delta);
      interval rr = interval::empty();
      if (!rf.is_empty()) {
        double lo = j + rf.lo;
        double hi = j + rf.hi;
        lo = std::max(lo, static_cast<double>(i + 1) - static_cast<double>(w));
        if (lo <= hi + keps) {
          if (!B.is_empty()) {
            rr = {lo, hi};
          } else {
            double rlo = std::max(lo, L.lo);
            if (rlo <= hi + keps) rr = {rlo, hi};
          }
        }
      }

      interval tf = free_space_interval(b[j + 1], segment{a[i], a[i + 1]},
                                        delta);
      interval tr = interval::empty();
      if (!tf.is_empty()) {
        double lo = i + tf.lo;
        double hi = i + tf.hi;
        lo = std::max(lo, static_cast<double>(j + 1) - static_cast<double>(w));
        if (lo <= hi + keps) {
          if (!L.is_empty()) {
            tr = {lo, hi};
          } else {
            double tlo = std::max(lo, B.lo);
            if (tlo <= hi + keps) tr = {tlo, hi};
          }
        }
      }

      if (!rr.is_empty() && i + 1 < c && in_band(i + 1, j, w))
        merge_hull(lr[i + 1][j], rr.lo, rr.hi);
      if (!tr.is_empty() && j + 1 < c && in_band(i, j + 1, w))
        merge_hull(br[i][j + 1], tr.lo, tr.hi);

      const bool corner =
          (!rr.is_empty() && rr.hi >= j + 1 - keps) ||
          (!tr.is_empty() && tr.hi >= i + 1 - keps);
      if (!corner) continue;
      if (i + 1 == c && j + 1 == c) {
        final_corner = true;
      } else if (i + 1 < c && j + 1 < c) {
        merge_hull(lr[i + 1][j + 1], j + 1, j + 1);
        merge_hull(br[i + 1][j + 1], i + 1, i + 1);
      } else if (i + 1 == c) {
        merge_hull(br[i][j + 1], i + 1, i + 1);
      } else {
        merge_hull(lr[i + 1][j], j + 1, j + 1);
      }
    }
  }
  return final_corner;
}

double banded_continuous_value(const poly_curve& a, const poly_curve& b,
                               std::size_t band, double tol) {
  if (a.size() == 0 || a.size() != b.size())
    throw precondition_error("band constraint requires equal curve lengths");
  const std::size_t n = a.size();
  double lo = std::max(point_point_distance(a[0], b[0]),
                       point_point_distance(a[n - 1], b[n - 1]));
  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    hi = std::max(hi, point_point_distance(a[i], b[i]));
  hi = std::max(hi, lo);
  if (banded_continuous_decide(a, b, band, lo)) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (banded_continuous_decide(a, b, band, mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

enumeration_stats enumerate_pairs(
    const uncertain_curve& u, const uncertain_curve& v,
    const std::function<double(const poly_curve&, const poly_curve&)>& dist) {
  const auto ru = enumerate_realisations(u);
  const auto rv = enumerate_realisations(v);
  if (ru.size() > kEnumerationCap / rv.size())
    throw size_error("realisation grid exceeds enumeration cap");
  enumeration_stats st;
  st.min = std::numeric_limits<double>::infinity();
  st.max = -std::numeric_limits<double>::infinity();
  long double sum = 0.0L;
  for (const auto& a : ru) {
    for (const auto& b : rv) {
      const double d = dist(a.curve, b.curve);
      st.min = std::min(st.min, d);
      st.max = std::max(st.max, d);
      sum += d;
      ++st.pairs;
    }
  }
  st.expected = static_cast<double>(sum / static_cast<long double>(st.pairs));
  return st;
}

}  // namespace

enumeration_stats oracle_min_max_expected_discrete(
    const uncertain_curve& u, const uncertain_curve& v,
    std::optional<std::size_t> band) {
  return enumerate_pairs(u, v, [&](const poly_curve& a, const poly_curve& b) {
    if (band) return banded_discrete_frechet(a, b, band);
    return discrete_frechet(a, b).value;
  });
}

enumeration_stats oracle_min_max_expected_continuous(
    const uncertain_curve& u, const uncertain_curve& v, double tol,
    std::optional<std::size_t> band) {
  return enumerate_pairs(u, v, [&](const poly_curve& a, const poly_curve& b) {
    if (band) return banded_continuous_value(a, b, *band, tol);
    return continuous_frechet_value(a, b, tol);
  });
}

std::uint64_t count_satisfying_assignments(const cnf_formula& f) {
  if (f.num_vars < 0 || f.num_vars > 30)
    throw size_error("exhaustive count supports at most 30 variables");
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const int var = lit > 0 ? lit : -lit;
        const bool value = (mask >> (var - 1)) & 1;
        if (value == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

subset_sum_result subset_sum_brute(const std::vector<long long>& values,
                                   long long target) {
  for (long long y : values)
    if (y <= 0) throw argument_error("values must be positive");
  if (values.size() > 30)
    throw size_error("exhaustive subset sum supports at most 30 values");
  if (target == 0) return {true, {}};
  if (target < 0) return {false, {}};
  const std::uint64_t total = std::uint64_t{1} << values.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    long long sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
      if ((mask >> i) & 1) sum += values[i];
    if (sum == target) {
      subset_sum_result r;
      r.satisfiable = true;
      for (std::size_t i = 0; i < values.size(); ++i)
        if ((mask >> i) & 1) r.witness.push_back(i + 1);
      return r;
    }
  }
  return {false, {}};
}

}  // namespace ufd
