#include "ufd/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ufd {

namespace {

void check_nonempty(const poly_curve& c, const char* what) {
  if (c.size() == 0) throw argument_error(std::string(what) + ": empty curve");
}

double max_vertex_distance(const poly_curve& a, const poly_curve& b) {
  double d = 0.0;
  for (const point& p : a.v)
    for (const point& q : b.v) d = std::max(d, point_point_distance(p, q));
  return d;
}

}  // namespace

discrete_frechet_result discrete_frechet(const poly_curve& a,
                                         const poly_curve& b) {
  check_nonempty(a, "discrete_frechet");
  check_nonempty(b, "discrete_frechet");
  std::size_t m = a.size(), n = b.size();
  std::vector<std::vector<double>> dp(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double d = point_point_distance(a[i], b[j]);
      double prev;
      if (i == 0 && j == 0)
        prev = 0.0;
      else if (i == 0)
        prev = dp[0][j - 1];
      else if (j == 0)
        prev = dp[i - 1][0];
      else
        prev = std::min({dp[i - 1][j - 1], dp[i - 1][j], dp[i][j - 1]});
      dp[i][j] = std::max(d, prev);
    }
  }

  coupling w;
  std::size_t i = m - 1, j = n - 1;
  w.emplace_back(i, j);
  while (i > 0 || j > 0) {
    // Prefer the predecessor with the smallest table value, diagonal first.
    double best = std::numeric_limits<double>::infinity();
    int move = -1;  // 0 diag, 1 up (i-1), 2 left (j-1)
    if (i > 0 && j > 0 && dp[i - 1][j - 1] < best) {
      best = dp[i - 1][j - 1];
      move = 0;
    }
    if (i > 0 && dp[i - 1][j] < best) {
      best = dp[i - 1][j];
      move = 1;
    }
    if (j > 0 && dp[i][j - 1] < best) {
      best = dp[i][j - 1];
      move = 2;
    }
    if (move == 0) {
      --i;
      --j;
    } else if (move == 1) {
      --i;
    } else {
      --j;
    }
    w.emplace_back(i, j);
  }
  std::reverse(w.begin(), w.end());
  return {dp[m - 1][n - 1], std::move(w)};
}

namespace {

// Reachability state of one column of free-space cells.
struct reach_state {
  // left[j]: reachable sub-interval of the left boundary of cell (i, j).
  std::vector<interval> left;
  bool bottom_corner_chain = false;  // corner (i, 0) reachable along y = 0
};

}  // namespace

bool continuous_frechet_decide(const poly_curve& a, const poly_curve& b,
                               double delta) {
  check_nonempty(a, "continuous_frechet_decide");
  check_nonempty(b, "continuous_frechet_decide");
  if (a.dim() != b.dim())
    throw argument_error("continuous_frechet_decide: dimension mismatch");
  double de = delta + kTol;

  if (a.size() == 1 || b.size() == 1) {
    // Curve against a point: every vertex of the other curve must be close.
    const poly_curve& pt = a.size() == 1 ? a : b;
    const poly_curve& cv = a.size() == 1 ? b : a;
    for (const point& p : cv.v)
      if (point_point_distance(p, pt[0]) > de) return false;
    return true;
  }

  std::size_t m = a.size(), n = b.size();
  if (point_point_distance(a[0], b[0]) > de) return false;
  if (point_point_distance(a[m - 1], b[n - 1]) > de) return false;

  // Rows follow a (m-1 edges), columns follow b (n-1 edges).
  std::size_t rows = m - 1, cols = n - 1;
  std::vector<interval> left(rows, interval::empty());
  // Left edge of the diagram: contiguous free prefix from the corner.
  bool chain = true;
  for (std::size_t j = 0; j < rows; ++j) {
    interval f = free_space_interval(b[0], segment{a.v[j], a.v[j + 1]}, delta);
    if (chain && !f.is_empty() && f.lo <= 1e-12) {
      left[j] = {0.0, f.hi};
      chain = f.hi >= 1.0 - 1e-12;
    } else {
      left[j] = interval::empty();
      chain = false;
    }
  }
  bool bottom_chain = true;  // corner (i, 0) reachable along the bottom edge

  for (std::size_t i = 0; i < cols; ++i) {
    segment qe{b.v[i], b.v[i + 1]};
    std::vector<interval> right(rows, interval::empty());
    interval bottom = interval::empty();
    if (bottom_chain) {
      interval f = free_space_interval(a[0], qe, delta);
      if (!f.is_empty() && f.lo <= 1e-12)
        bottom = f;
      else
        bottom = interval::empty();
    }
    bottom_chain = bottom_chain && !bottom.is_empty() && bottom.hi >= 1.0 - 1e-12;

    for (std::size_t j = 0; j < rows; ++j) {
      segment pe{a.v[j], a.v[j + 1]};
      interval rf = free_space_interval(b[i + 1], pe, delta);
      interval tf = free_space_interval(a[j + 1], qe, delta);
      const interval& L = left[j];
      const interval& B = bottom;
      interval rr = interval::empty(), tr = interval::empty();
      if (!rf.is_empty()) {
        if (!B.is_empty())
          rr = rf;
        else if (!L.is_empty())
          rr = {std::max(rf.lo, L.lo), rf.hi};
      }
      if (rr.is_empty()) rr = interval::empty();
      if (!tf.is_empty()) {
        if (!L.is_empty())
          tr = tf;
        else if (!B.is_empty())
          tr = {std::max(tf.lo, B.lo), tf.hi};
      }
      if (tr.is_empty()) tr = interval::empty();
      right[j] = rr;
      bottom = tr;
    }
    left = std::move(right);
  }
  const interval& top = left[rows - 1];
  return !top.is_empty() && top.hi >= 1.0 - 1e-12;
}

double continuous_frechet_value(const poly_curve& a, const poly_curve& b,
                                double tol) {
  check_nonempty(a, "continuous_frechet_value");
  check_nonempty(b, "continuous_frechet_value");
  if (tol <= 0.0) throw argument_error("continuous_frechet_value: tol > 0");
  double lo = std::max(point_point_distance(a[0], b[0]),
                       point_point_distance(a[a.size() - 1], b[b.size() - 1]));
  double hi = max_vertex_distance(a, b);
  if (continuous_frechet_decide(a, b, lo)) return lo;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (continuous_frechet_decide(a, b, mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::string free_space_svg(const poly_curve& a, const poly_curve& b,
                           double delta) {
  check_nonempty(a, "free_space_svg");
  check_nonempty(b, "free_space_svg");
  std::size_t rows = a.size() > 1 ? a.size() - 1 : 1;
  std::size_t cols = b.size() > 1 ? b.size() - 1 : 1;
  const double cell = 80.0, margin = 20.0;
  double width = margin * 2 + cell * static_cast<double>(cols);
  double height = margin * 2 + cell * static_cast<double>(rows);
  auto X = [&](double x) { return margin + cell * x; };
  auto Y = [&](double y) { return height - margin - cell * y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i <= cols; ++i)
    svg << "<line x1=\"" << X(i) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(i)
        << "\" y2=\"" << Y(rows) << "\" stroke=\"#ccc\"/>\n";
  for (std::size_t j = 0; j <= rows; ++j)
    svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(j) << "\" x2=\"" << X(cols)
        << "\" y2=\"" << Y(j) << "\" stroke=\"#ccc\"/>\n";

  if (a.size() > 1 && b.size() > 1) {
    // Free portions of the cell boundaries.
    for (std::size_t i = 0; i <= cols; ++i)
      for (std::size_t j = 0; j < rows; ++j) {
        interval f =
            free_space_interval(b[i], segment{a.v[j], a.v[j + 1]}, delta);
        if (!f.is_empty())
          svg << "<line x1=\"" << X(i) << "\" y1=\"" << Y(j + f.lo)
              << "\" x2=\"" << X(i) << "\" y2=\"" << Y(j + f.hi)
              << "\" stroke=\"#2a2\" stroke-width=\"4\"/>\n";
      }
    for (std::size_t j = 0; j <= rows; ++j)
      for (std::size_t i = 0; i < cols; ++i) {
        interval f =
            free_space_interval(a[j], segment{b.v[i], b.v[i + 1]}, delta);
        if (!f.is_empty())
          svg << "<line x1=\"" << X(i + f.lo) << "\" y1=\"" << Y(j)
              << "\" x2=\"" << X(i + f.hi) << "\" y2=\"" << Y(j)
              << "\" stroke=\"#2a2\" stroke-width=\"4\"/>\n";
      }
    // Full reachability tables for path extraction.
    std::vector<std::vector<interval>> LR(cols,
                                          std::vector<interval>(rows)),
        BR(cols, std::vector<interval>(rows));
    for (auto& c : LR) std::fill(c.begin(), c.end(), interval::empty());
    for (auto& c : BR) std::fill(c.begin(), c.end(), interval::empty());
    bool start_free = point_point_distance(a[0], b[0]) <= delta + kTol;
    bool chain = start_free;
    for (std::size_t j = 0; j < rows && chain; ++j) {
      interval f =
          free_space_interval(b[0], segment{a.v[j], a.v[j + 1]}, delta);
      if (!f.is_empty() && f.lo <= 1e-12) {
        LR[0][j] = {0.0, f.hi};
        chain = f.hi >= 1.0 - 1e-12;
      } else {
        chain = false;
      }
    }
    chain = start_free;
    for (std::size_t i = 0; i < cols && chain; ++i) {
      interval f =
          free_space_interval(a[0], segment{b.v[i], b.v[i + 1]}, delta);
      if (!f.is_empty() && f.lo <= 1e-12) {
        BR[i][0] = f;
        chain = f.hi >= 1.0 - 1e-12;
      } else {
        chain = false;
      }
    }
    for (std::size_t i = 0; i < cols; ++i) {
      segment qe{b.v[i], b.v[i + 1]};
      for (std::size_t j = 0; j < rows; ++j) {
        segment pe{a.v[j], a.v[j + 1]};
        const interval &L = LR[i][j], &B = BR[i][j];
        if (i + 1 < cols) {
          interval rf = free_space_interval(b[i + 1], pe, delta);
          if (!rf.is_empty()) {
            if (!B.is_empty())
              LR[i + 1][j] = rf;
            else if (!L.is_empty()) {
              interval rr{std::max(rf.lo, L.lo), rf.hi};
              if (!rr.is_empty()) LR[i + 1][j] = rr;
            }
          }
        }
        if (j + 1 < rows) {
          interval tf = free_space_interval(a[j + 1], qe, delta);
          if (!tf.is_empty()) {
            if (!L.is_empty())
              BR[i][j + 1] = tf;
            else if (!B.is_empty()) {
              interval tr{std::max(tf.lo, B.lo), tf.hi};
              if (!tr.is_empty()) BR[i][j + 1] = tr;
            }
          }
        }
      }
    }
    if (continuous_frechet_decide(a, b, delta)) {
      // Backtrack a monotone path from the top-right corner; each in-cell
      // segment stays inside the convex free region of its cell.
      std::vector<std::pair<double, double>> path;
      double ex = static_cast<double>(cols), ey = static_cast<double>(rows);
      std::size_t ci = cols - 1, cj = rows - 1;
      path.emplace_back(ex, ey);
      while (true) {
        const interval &L = LR[ci][cj], &B = BR[ci][cj];
        if (!B.is_empty()) {
          ex = static_cast<double>(ci) + B.lo;
          ey = static_cast<double>(cj);
          path.emplace_back(ex, ey);
          if (cj == 0) break;
          --cj;
        } else {
          ex = static_cast<double>(ci);
          ey = static_cast<double>(cj) + L.lo;
          path.emplace_back(ex, ey);
          if (ci == 0) break;
          --ci;
        }
      }
      path.emplace_back(0.0, 0.0);
      svg << "<polyline fill=\"none\" stroke=\"#06c\" stroke-width=\"2\" points=\"";
      for (auto it = path.rbegin(); it != path.rend(); ++it)
        svg << X(it->first) << "," << Y(it->second) << " ";
      svg << "\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ufd
