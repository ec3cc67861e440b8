#include "ufd/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ufd/common.hpp"
#include "ufd/frechet.hpp"
#include "ufd/geometry.hpp"

namespace ufd {

namespace {

constexpr double keps = 1e-12;  // contiguity slack on top of the kTol widening

poly_curve simplify_collinear(const poly_curve& pi) {
  poly_curve out;
  for (const auto& p : pi.v)
    if (out.v.empty() || norm(p - out.v.back()) > kTol) out.v.push_back(p);
  bool changed = true;
  while (changed && out.size() > 2) {
    changed = false;
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
      if (point_segment_distance(out.v[i],
                                 segment{out.v[i - 1], out.v[i + 1]}) <=
          kTol) {
        out.v.erase(out.v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

// Nondecreasing parameters on s hitting regions first..last in order.
bool stab_regions_on_segment(const segment& s, const uncertain_curve& u,
                             std::size_t first, std::size_t last) {
  double cur = 0.0;
  for (std::size_t t = first; t <= last; ++t) {
    const auto ivs = region_segment_params(u[t], s, kTol);
    double best = -1.0;
    for (const auto& iv : ivs) {
      if (iv.hi + keps < cur) continue;
      best = std::max(cur, iv.lo);  // sorted by lo: first hit is earliest
      break;
    }
    if (best < 0.0) return false;
    cur = best;
  }
  return true;
}

}  // namespace

bool min_frechet_is_zero(const poly_curve& pi, const uncertain_curve& u) {
  if (pi.size() == 0 || u.size() == 0) throw precondition_error("empty curve");
  if (pi.dim() != u.dim()) throw precondition_error("dimension mismatch");
  const poly_curve sp = simplify_collinear(pi);
  const std::size_t m = u.size();
  const std::size_t n = sp.size();
  if (n == 1) {
    for (std::size_t j = 0; j < m; ++j)
      if (!u[j].contains(sp[0], kTol)) return false;
    return true;
  }
  // cur[j]: regions 0..j can trace the curve exactly up to the current
  // corner, with region j placed at that corner.
  std::vector<char> cur(m, 0), next(m, 0);
  for (std::size_t j = 0; j < m && u[j].contains(sp[0], kTol); ++j)
    cur[j] = 1;
  if (!cur[0]) return false;
  for (std::size_t i = 1; i < n; ++i) {
    std::fill(next.begin(), next.end(), 0);
    const segment e{sp[i - 1], sp[i]};
    for (std::size_t j = 0; j < m; ++j) {
      if (!u[j].contains(sp[i], kTol)) continue;
      std::size_t k = m;  // largest feasible predecessor below j
      for (std::size_t t = j; t-- > 0;) {
        if (cur[t]) {
          k = t;
          break;
        }
      }
      if (k == m) continue;
      if (k + 1 < j && !stab_regions_on_segment(e, u, k + 1, j - 1)) continue;
      next[j] = 1;
    }
    std::swap(cur, next);
  }
  return cur[m - 1] != 0;
}

namespace {

// Reachability on one vertical boundary of the matching diagram: one
// interval [lo, hi] per curve edge row (absolute y), plus whether the top
// corner of the boundary is reachable.  Unions over predecessor choices
// share each row's upper end, so a single interval per row is exact.
struct strip_state {
  std::vector<interval> rows;
  bool top = false;

  bool alive() const {
    if (top) return true;
    for (const auto& r : rows)
      if (!r.is_empty()) return true;
    return false;
  }
};

// Propagates reachability across one strip of cells.  `e` is the curve edge
// spanning the strip, `w` the vertex forming its right boundary.
strip_state strip_transition(const strip_state& in, const poly_curve& pi,
                             const segment& e, const point& w, double delta) {
  const std::size_t rows = pi.size() - 1;
  strip_state out;
  out.rows.assign(rows, interval::empty());
  std::vector<interval> rf(rows);

  interval b = interval::empty();  // reach on the current cell floor, local x
  {
    const interval bf = free_space_interval(pi[0], e, delta);
    if (!in.rows[0].is_empty() && in.rows[0].lo <= keps && !bf.is_empty() &&
        bf.lo <= keps)
      b = {0.0, bf.hi};
  }
  interval t_last = interval::empty();
  interval tf_top = interval::empty();
  for (std::size_t j = 0; j < rows; ++j) {
    const interval L = in.rows[j];
    const interval f = free_space_interval(w, segment{pi[j], pi[j + 1]},
                                           delta);
    rf[j] = f;
    interval r = interval::empty();
    if (!f.is_empty()) {
      const double lo = static_cast<double>(j) + f.lo;
      const double hi = static_cast<double>(j) + f.hi;
      if (!b.is_empty())
        r = {lo, hi};
      else if (!L.is_empty() && std::max(lo, L.lo) <= hi + keps)
        r = {std::max(lo, L.lo), hi};
    }
    out.rows[j] = r;

    const interval tf = free_space_interval(pi[j + 1], e, delta);
    if (j + 1 == rows) tf_top = tf;
    interval t = interval::empty();
    if (!tf.is_empty()) {
      if (!L.is_empty())
        t = tf;
      else if (!b.is_empty() && std::max(tf.lo, b.lo) <= tf.hi + keps)
        t = {std::max(tf.lo, b.lo), tf.hi};
    }
    b = t;
    t_last = t;
  }
  // Runs continue upward across touching cell corners.
  for (std::size_t j = 0; j + 1 < rows; ++j) {
    if (out.rows[j].is_empty() ||
        out.rows[j].hi < static_cast<double>(j + 1) - keps)
      continue;
    if (rf[j + 1].is_empty() || rf[j + 1].lo > keps) continue;
    const double corner = static_cast<double>(j + 1);
    const double hi = corner + rf[j + 1].hi;
    if (out.rows[j + 1].is_empty())
      out.rows[j + 1] = {corner, hi};
    else
      out.rows[j + 1].lo = std::min(out.rows[j + 1].lo, corner);
  }
  out.top = false;
  if (in.top && !tf_top.is_empty() && tf_top.lo <= keps &&
      tf_top.hi >= 1.0 - keps)
    out.top = true;
  if (!t_last.is_empty() && t_last.hi >= 1.0 - keps) out.top = true;
  if (!out.rows[rows - 1].is_empty() &&
      out.rows[rows - 1].hi >= static_cast<double>(rows) - keps)
    out.top = true;
  return out;
}

void merge_state(strip_state& into, const strip_state& from) {
  for (std::size_t j = 0; j < into.rows.size(); ++j) {
    const interval& f = from.rows[j];
    if (f.is_empty()) continue;
    if (into.rows[j].is_empty())
      into.rows[j] = f;
    else
      into.rows[j] = {std::min(into.rows[j].lo, f.lo),
                      std::max(into.rows[j].hi, f.hi)};
  }
  into.top = into.top || from.top;
}

strip_state start_state(const poly_curve& pi, const point& v0, double delta) {
  strip_state s;
  s.rows.assign(pi.size() - 1, interval::empty());
  if (point_point_distance(v0, pi[0]) <= delta + kTol) s.rows[0] = {0.0, 0.0};
  return s;
}

// Forward reachability tables for every vertex option.
std::vector<std::vector<strip_state>> run_lb_dp(const poly_curve& pi,
                                                const uncertain_curve& v,
                                                double delta) {
  const std::size_t m = v.size();
  std::vector<std::vector<strip_state>> st(m);
  st[0].reserve(v[0].option_count());
  for (std::size_t l = 0; l < v[0].option_count(); ++l)
    st[0].push_back(start_state(pi, v[0].option(l), delta));
  for (std::size_t i = 0; i + 1 < m; ++i) {
    st[i + 1].assign(v[i + 1].option_count(), strip_state{});
    for (auto& s : st[i + 1]) s.rows.assign(pi.size() - 1, interval::empty());
    for (std::size_t l = 0; l < v[i].option_count(); ++l) {
      if (!st[i][l].alive()) continue;
      for (std::size_t l2 = 0; l2 < v[i + 1].option_count(); ++l2) {
        const segment e{v[i].option(l), v[i + 1].option(l2)};
        merge_state(st[i + 1][l2],
                    strip_transition(st[i][l], pi, e, v[i + 1].option(l2),
                                     delta));
      }
    }
  }
  return st;
}

poly_curve reverse_curve(const poly_curve& c) {
  poly_curve r;
  r.v.assign(c.v.rbegin(), c.v.rend());
  return r;
}

uncertain_curve reverse_curve(const uncertain_curve& u) {
  uncertain_curve r;
  r.regions.assign(u.regions.rbegin(), u.regions.rend());
  return r;
}

// Does the committed forward state share a point with the backward-feasible
// set?  `rb` lives in the reversed diagram: row j maps to rows-1-j with
// y -> rows - y.
bool meets_backward(const strip_state& f, const strip_state& rb,
                    std::size_t rows) {
  for (std::size_t j = 0; j < rows; ++j) {
    const interval& a = f.rows[j];
    if (a.is_empty()) continue;
    const interval& r = rb.rows[rows - 1 - j];
    if (r.is_empty()) continue;
    const double blo = static_cast<double>(rows) - r.hi;
    const double bhi = static_cast<double>(rows) - r.lo;
    if (std::max(a.lo, blo) <= std::min(a.hi, bhi) + keps) return true;
  }
  if (f.top && !rb.rows[0].is_empty() && rb.rows[0].lo <= keps) return true;
  if (!f.rows[0].is_empty() && f.rows[0].lo <= keps && rb.top) return true;
  return false;
}

realisation realisation_from_options(const uncertain_curve& v,
                                     const std::vector<int>& choice) {
  realisation r;
  r.curve.v.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r.curve.v.push_back(v[i].option(static_cast<std::size_t>(choice[i])));
  r.option_index = choice;
  return r;
}

}  // namespace

lb_decision lb_decide_indecisive(const poly_curve& pi,
                                 const uncertain_curve& v, double delta) {
  if (pi.size() == 0 || v.size() == 0) throw precondition_error("empty curve");
  if (pi.dim() != v.dim()) throw precondition_error("dimension mismatch");
  if (!v.all_indecisive())
    throw unsupported_model_error(
        "exact decision requires finite option sets");
  const std::size_t m = v.size();
  const std::size_t n = pi.size();

  if (n == 1) {
    std::vector<int> choice(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < v[i].option_count(); ++l) {
        const double d = point_point_distance(v[i].option(l), pi[0]);
        if (d < best) {
          best = d;
          choice[i] = static_cast<int>(l);
        }
      }
      if (best > delta + kTol) return {false, std::nullopt};
    }
    return {true, realisation_from_options(v, choice)};
  }
  if (m == 1) {
    for (std::size_t l = 0; l < v[0].option_count(); ++l) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = point_point_distance(v[0].option(l), pi[j]) <= delta + kTol;
      if (ok)
        return {true, realisation_from_options(v, {static_cast<int>(l)})};
    }
    return {false, std::nullopt};
  }

  const auto fwd = run_lb_dp(pi, v, delta);
  bool yes = false;
  for (const auto& s : fwd[m - 1]) yes = yes || s.top;
  if (!yes) return {false, std::nullopt};

  // Backward feasibility on the reversed instance guides a committed
  // forward walk that fixes one option per vertex.
  const poly_curve rpi = reverse_curve(pi);
  const auto bwd = run_lb_dp(rpi, reverse_curve(v), delta);
  const std::size_t rows = n - 1;
  std::vector<int> choice(m, -1);
  for (std::size_t l = 0; l < v[0].option_count() && choice[0] < 0; ++l)
    if (bwd[m - 1][l].top) choice[0] = static_cast<int>(l);
  bool stuck = choice[0] < 0;
  strip_state s;
  if (!stuck) s = start_state(pi, v[0].option(choice[0]), delta);
  for (std::size_t i = 0; !stuck && i + 1 < m; ++i) {
    choice[i + 1] = -1;
    for (std::size_t l2 = 0; l2 < v[i + 1].option_count(); ++l2) {
      const point w = v[i + 1].option(l2);
      const segment e{v[i].option(static_cast<std::size_t>(choice[i])), w};
      strip_state cand = strip_transition(s, pi, e, w, delta);
      const bool ok = (i + 1 == m - 1)
                          ? cand.top
                          : meets_backward(cand, bwd[m - 2 - i][l2], rows);
      if (ok) {
        choice[i + 1] = static_cast<int>(l2);
        s = std::move(cand);
        break;
      }
    }
    stuck = choice[i + 1] < 0;
  }
  if (!stuck) return {true, realisation_from_options(v, choice)};

  // Tolerance asymmetries can strand the walk on borderline inputs; fall
  // back to enumeration before giving up.
  std::size_t count = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (count > 100000 / v[i].option_count())
      throw std::logic_error("witness reconstruction failed");
    count *= v[i].option_count();
  }
  for (const auto& r : enumerate_realisations(v))
    if (continuous_frechet_decide(pi, r.curve, delta)) return {true, r};
  throw std::logic_error("witness reconstruction failed");
}

bool lb_decide_indecisive_pair(const uncertain_curve& a,
                               const uncertain_curve& b, double delta) {
  if (a.size() == 0 || b.size() == 0) throw precondition_error("empty curve");
  if (a.dim() != b.dim()) throw precondition_error("dimension mismatch");
  if (!a.all_indecisive() || !b.all_indecisive())
    throw unsupported_model_error(
        "exact decision requires finite option sets");
  const std::size_t nu = a.size();
  const std::size_t nv = b.size();

  auto within = [&](const point& p, const point& q) {
    return point_point_distance(p, q) <= delta + kTol;
  };
  if (nu == 1 && nv == 1) {
    for (std::size_t x = 0; x < a[0].option_count(); ++x)
      for (std::size_t y = 0; y < b[0].option_count(); ++y)
        if (within(a[0].option(x), b[0].option(y))) return true;
    return false;
  }
  if (nu == 1 || nv == 1) {
    const uncertain_curve& single = nu == 1 ? a : b;
    const uncertain_curve& other = nu == 1 ? b : a;
    for (std::size_t x = 0; x < single[0].option_count(); ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < other.size() && ok; ++i) {
        bool any = false;
        for (std::size_t y = 0; y < other[i].option_count() && !any; ++y)
          any = within(single[0].option(x), other[i].option(y));
        ok = any;
      }
      if (ok) return true;
    }
    return false;
  }

  // Vertical boundary states keyed by (row, option of a[row], option of
  // a[row+1], option of b[boundary]); row intervals share their upper ends
  // across predecessors, so one interval per key is exact.
  const std::size_t rows = nu - 1;
  using state_t = std::vector<std::vector<std::vector<std::vector<interval>>>>;
  auto make_state = [&](std::size_t vi) {
    state_t s(rows);
    for (std::size_t j = 0; j < rows; ++j)
      s[j].assign(a[j].option_count(),
                  std::vector<std::vector<interval>>(
                      a[j + 1].option_count(),
                      std::vector<interval>(b[vi].option_count(),
                                            interval::empty())));
    return s;
  };
  auto merge = [](interval& into, double lo, double hi) {
    if (into.is_empty())
      into = {lo, hi};
    else
      into = {std::min(into.lo, lo), std::max(into.hi, hi)};
  };

  state_t cur = make_state(0);
  std::vector<std::vector<char>> bottom(
      a[0].option_count(), std::vector<char>(b[0].option_count(), 0));
  std::vector<std::vector<char>> top(
      a[nu - 1].option_count(), std::vector<char>(b[0].option_count(), 0));
  for (std::size_t x = 0; x < a[0].option_count(); ++x)
    for (std::size_t y = 0; y < b[0].option_count(); ++y)
      if (within(a[0].option(x), b[0].option(y))) {
        bottom[x][y] = 1;
        for (std::size_t z = 0; z < a[1].option_count(); ++z)
          cur[0][x][z][y] = {0.0, 0.0};
      }

  for (std::size_t i = 0; i + 1 < nv; ++i) {
    state_t next = make_state(i + 1);
    std::vector<std::vector<char>> nbottom(
        a[0].option_count(),
        std::vector<char>(b[i + 1].option_count(), 0));
    std::vector<std::vector<char>> ntop(
        a[nu - 1].option_count(),
        std::vector<char>(b[i + 1].option_count(), 0));

    for (std::size_t c = 0; c < b[i].option_count(); ++c) {
      for (std::size_t c2 = 0; c2 < b[i + 1].option_count(); ++c2) {
        const segment vseg{b[i].option(c), b[i + 1].option(c2)};
        // floor of the current cell row, local x, keyed by the row's lower
        // vertex option
        std::vector<interval> floor_iv(a[0].option_count(),
                                       interval::empty());
        for (std::size_t x = 0; x < a[0].option_count(); ++x) {
          if (!bottom[x][c]) continue;
          const interval bf =
              free_space_interval(a[0].option(x), vseg, delta);
          if (!bf.is_empty() && bf.lo <= keps) {
            floor_iv[x] = {0.0, bf.hi};
            if (bf.hi >= 1.0 - keps) nbottom[x][c2] = 1;
          }
        }
        for (std::size_t j = 0; j < rows; ++j) {
          const std::size_t ka = a[j].option_count();
          const std::size_t kb = a[j + 1].option_count();
          std::vector<interval> tun(kb, interval::empty());
          for (std::size_t x = 0; x < ka; ++x) {
            const interval fl = floor_iv[x];
            for (std::size_t z = 0; z < kb; ++z) {
              const interval L = cur[j][x][z][c];
              if (fl.is_empty() && L.is_empty()) continue;
              const segment useg{a[j].option(x), a[j + 1].option(z)};
              const interval rfl =
                  free_space_interval(b[i + 1].option(c2), useg, delta);
              if (!rfl.is_empty()) {
                const double lo = static_cast<double>(j) + rfl.lo;
                const double hi = static_cast<double>(j) + rfl.hi;
                if (!fl.is_empty())
                  merge(next[j][x][z][c2], lo, hi);
                else if (std::max(lo, L.lo) <= hi + keps)
                  merge(next[j][x][z][c2], std::max(lo, L.lo), hi);
              }
              const interval tfl =
                  free_space_interval(a[j + 1].option(z), vseg, delta);
              if (!tfl.is_empty()) {
                if (!L.is_empty())
                  merge(tun[z], tfl.lo, tfl.hi);
                else if (!fl.is_empty() &&
                         std::max(tfl.lo, fl.lo) <= tfl.hi + keps)
                  merge(tun[z], std::max(tfl.lo, fl.lo), tfl.hi);
              }
            }
          }
          floor_iv = std::move(tun);
        }
        for (std::size_t z = 0; z < a[nu - 1].option_count(); ++z) {
          if (top[z][c]) {
            const interval tt =
                free_space_interval(a[nu - 1].option(z), vseg, delta);
            if (!tt.is_empty() && tt.lo <= keps && tt.hi >= 1.0 - keps)
              ntop[z][c2] = 1;
          }
          if (!floor_iv[z].is_empty() && floor_iv[z].hi >= 1.0 - keps)
            ntop[z][c2] = 1;
        }
      }
    }

    // Runs continue upward across touching cell corners.
    for (std::size_t c2 = 0; c2 < b[i + 1].option_count(); ++c2) {
      for (std::size_t j = 0; j + 1 < rows; ++j) {
        for (std::size_t x = 0; x < a[j].option_count(); ++x) {
          for (std::size_t z = 0; z < a[j + 1].option_count(); ++z) {
            const interval& iv = next[j][x][z][c2];
            if (iv.is_empty() ||
                iv.hi < static_cast<double>(j + 1) - keps)
              continue;
            for (std::size_t d2 = 0; d2 < a[j + 2].option_count(); ++d2) {
              const segment useg{a[j + 1].option(z), a[j + 2].option(d2)};
              const interval rfl =
                  free_space_interval(b[i + 1].option(c2), useg, delta);
              if (rfl.is_empty() || rfl.lo > keps) continue;
              merge(next[j + 1][z][d2][c2],
                    static_cast<double>(j + 1),
                    static_cast<double>(j + 1) + rfl.hi);
            }
          }
        }
      }
      for (std::size_t x = 0; x < a[rows - 1].option_count(); ++x)
        for (std::size_t z = 0; z < a[rows].option_count(); ++z) {
          const interval& iv = next[rows - 1][x][z][c2];
          if (!iv.is_empty() &&
              iv.hi >= static_cast<double>(rows) - keps)
            ntop[z][c2] = 1;
        }
    }

    cur = std::move(next);
    bottom = std::move(nbottom);
    top = std::move(ntop);
  }

  for (const auto& row : top)
    for (char f : row)
      if (f) return true;
  return false;
}

std::vector<point> expanded_grid_points(const uncertain_region& u, double r) {
  if (!(r > 0.0)) throw argument_error("grid spacing must be positive");
  const std::size_t d = u.dim();
  const double reach = std::sqrt(static_cast<double>(d)) * r;
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  auto absorb = [&](const point& p, double pad) {
    for (std::size_t k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], p[k] - pad);
      hi[k] = std::max(hi[k], p[k] + pad);
    }
  };
  switch (u.kind) {
    case region_kind::point:
    case region_kind::options:
      for (const auto& p : u.points) absorb(p, 0.0);
      break;
    case region_kind::disk:
      absorb(u.center, u.radius);
      break;
    case region_kind::segment:
      absorb(u.seg_a, 0.0);
      absorb(u.seg_b, 0.0);
      break;
  }
  std::vector<long long> kmin(d), kmax(d);
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    kmin[k] = static_cast<long long>(std::ceil((lo[k] - reach) / r - keps));
    kmax[k] = static_cast<long long>(std::floor((hi[k] + reach) / r + keps));
    const std::size_t span =
        static_cast<std::size_t>(std::max<long long>(0, kmax[k] - kmin[k])) +
        1;
    if (total > kEnumerationCap / span)
      throw size_error("grid too fine for this region");
    total *= span;
  }
  std::vector<point> out;
  std::vector<long long> idx(kmin);
  for (std::size_t step = 0; step < total; ++step) {
    std::vector<double> coords(d);
    for (std::size_t k = 0; k < d; ++k)
      coords[k] = static_cast<double>(idx[k]) * r;
    point g(std::move(coords));
    if (region_point_distance(u, g) <= reach + kTol)
      out.push_back(nearest_point_in_region(g, u));
    for (std::size_t k = d; k-- > 0;) {
      if (++idx[k] <= kmax[k]) break;
      idx[k] = kmin[k];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const point& p, const point& q) { return p.x < q.x; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

realisation canonical_realisation(const uncertain_curve& u) {
  realisation r;
  r.curve.v.reserve(u.size());
  r.option_index.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    switch (u[i].kind) {
      case region_kind::point:
      case region_kind::options:
        r.curve.v.push_back(u[i].option(0));
        r.option_index.push_back(0);
        break;
      case region_kind::disk:
        r.curve.v.push_back(u[i].center);
        r.option_index.push_back(-1);
        break;
      case region_kind::segment:
        r.curve.v.push_back(segment{u[i].seg_a, u[i].seg_b}.at(0.5));
        r.option_index.push_back(-1);
        break;
    }
  }
  return r;
}

}  // namespace

lb_decision grid_decider(const poly_curve& pi, const uncertain_curve& u,
                         double delta, double eps) {
  if (pi.size() == 0 || u.size() == 0) throw precondition_error("empty curve");
  if (pi.dim() != u.dim()) throw precondition_error("dimension mismatch");
  if (!(delta > 0.0)) throw argument_error("delta must be positive");
  if (!(eps > 0.0)) throw argument_error("eps must be positive");

  realisation probe = canonical_realisation(u);
  const double bis_tol =
      std::max(1e-12, std::min(1e-7, 1e-3 * eps * delta));
  const double dist0 = continuous_frechet_value(pi, probe.curve, bis_tol);
  if (dist0 <= (1.0 + eps) * delta + kTol) return {true, std::move(probe)};
  const double spread = u.max_diameter();
  // Any two realisations are within the largest diameter of each other, so
  // a probe this far out rules every realisation beyond delta.
  if (dist0 > spread + delta + bis_tol + kTol) return {false, std::nullopt};

  const double r =
      eps * delta / (2.0 * std::sqrt(static_cast<double>(pi.dim())));
  uncertain_curve net;
  net.regions.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_indecisive())
      net.regions.push_back(u[i]);
    else
      net.regions.push_back(
          uncertain_region::make_options(expanded_grid_points(u[i], r)));
  }
  lb_decision dec = lb_decide_indecisive(pi, net, (1.0 + eps) * delta);
  if (!dec.yes) return {false, std::nullopt};
  realisation w;
  w.curve = dec.witness->curve;
  w.option_index.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    w.option_index.push_back(u[i].is_indecisive()
                                 ? dec.witness->option_index[i]
                                 : -1);
  return {true, std::move(w)};
}

lb_optimum lb_optimize(const poly_curve& pi, const uncertain_curve& u,
                       double eps) {
  if (!(eps > 0.0)) throw argument_error("eps must be positive");
  if (min_frechet_is_zero(pi, u))
    throw zero_distance_error("a realisation traces the curve exactly");
  realisation probe = canonical_realisation(u);
  const double dist0 = continuous_frechet_value(pi, probe.curve, 1e-9);
  const double spread = u.max_diameter();
  // Far away from the uncertainty, the probe itself is a (1+eps) witness.
  if (dist0 * eps >= spread * (1.0 + eps) - kTol)
    return {dist0, std::move(probe)};

  const double q = std::min(0.25 * eps, 2.0);  // keeps (1+q)^2 <= 1+eps
  double delta = std::max(dist0, kTol);
  lb_decision best = grid_decider(pi, u, delta, q);
  if (!best.yes) throw std::logic_error("probe distance must be feasible");
  for (int it = 0; it < 1000; ++it) {
    const double nd = delta / (1.0 + q);
    lb_decision dec = grid_decider(pi, u, nd, q);
    if (!dec.yes) {
      const double val =
          continuous_frechet_value(pi, best.witness->curve, 1e-9);
      return {val, *best.witness};
    }
    best = std::move(dec);
    delta = nd;
  }
  throw precondition_error(
      "minimisation did not converge; the minimum may be arbitrarily small");
}

std::optional<std::vector<point>> greedy_sequence(const poly_curve& pi,
                                                  const uncertain_curve& u,
                                                  double delta) {
  if (pi.size() == 0 || u.size() == 0) throw precondition_error("empty curve");
  if (pi.dim() != 2 || u.dim() != 2)
    throw unsupported_model_error("greedy matching requires planar curves");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].kind == region_kind::options && u[i].option_count() > 1)
      throw unsupported_model_error(
          "greedy matching requires convex regions");
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (region_region_distance(u[i], u[j]) < 10.0 * delta - kTol)
        throw precondition_error("regions must be 10 delta separated");

  const std::size_t m = u.size();
  if (pi.size() == 1) {
    for (std::size_t i = 0; i < m; ++i)
      if (region_point_distance(u[i], pi[0]) > delta + kTol)
        return std::nullopt;
    return std::vector<point>(m, pi[0]);
  }
  if (m == 1)
    throw precondition_error("greedy matching needs at least two regions");

  if (region_point_distance(u[0], pi[0]) > delta + kTol) return std::nullopt;
  std::vector<point> alpha{pi[0]};
  const std::size_t nseg = pi.size() - 1;
  std::size_t seg = 0;
  double t = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    bool found = false;
    for (std::size_t zz = nseg; zz > seg && !found; --zz) {
      const std::size_t z = zz - 1;
      const segment sz{pi[z], pi[z + 1]};
      const interval feas =
          inflated_region_segment_params(u[i], sz, delta + kTol);
      if (feas.is_empty()) continue;
      if (z == seg) {
        const double lo = std::max(feas.lo, t);
        if (lo > feas.hi + keps) continue;
        alpha.push_back(sz.at(feas.hi));
        t = feas.hi;
        found = true;
      } else {
        std::vector<disk> gates;
        gates.reserve(z - seg);
        for (std::size_t k = seg + 1; k <= z; ++k)
          gates.push_back({pi[k], 2.0 * delta});
        const segment target{sz.at(feas.lo), sz.at(feas.hi)};
        const auto hit =
            stab_ordered_disks_from_point(alpha.back(), gates, target);
        if (!hit) continue;
        alpha.push_back(hit->hit);
        seg = z;
        t = feas.lo + hit->target_param * (feas.hi - feas.lo);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  if (seg != nseg - 1 || t < 1.0 - 1e-9) return std::nullopt;
  return alpha;
}

std::optional<realisation> greedy_3_decide(const poly_curve& pi,
                                           const uncertain_curve& u,
                                           double delta) {
  const auto seq = greedy_sequence(pi, u, delta);
  if (!seq) return std::nullopt;
  realisation r;
  r.curve.v.reserve(u.size());
  r.option_index.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    r.curve.v.push_back(nearest_point_in_region((*seq)[i], u[i]));
    r.option_index.push_back(u[i].is_indecisive() ? 0 : -1);
  }
  return r;
}

}  // namespace ufd
