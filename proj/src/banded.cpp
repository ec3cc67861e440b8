#include "ufd/banded.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "ufd/common.hpp"
#include "ufd/geometry.hpp"

namespace ufd {
namespace {

constexpr double keps = 1e-12;

void check_banded_pre(std::size_t nu, std::size_t nv, std::size_t w) {
  if (nu == 0 || nv == 0) throw precondition_error("empty curve");
  if (nu != nv) throw precondition_error("curves must have equal length");
  if (w >= nu) throw precondition_error("band width out of range");
}

void check_indecisive(const uncertain_curve& u) {
  if (!u.all_indecisive())
    throw unsupported_model_error(
        "band algorithms require finite option sets");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i].option_count() > 255)
      throw size_error("too many options per vertex");
}

std::size_t band_lo(std::size_t i, std::size_t w) { return i > w ? i - w : 0; }

std::size_t band_hi(std::size_t i, std::size_t w, std::size_t n) {
  return std::min(n - 1, i + w);
}

std::uint64_t checked_realisation_pairs(const uncertain_curve& u,
                                        const uncertain_curve& v) {
  unsigned __int128 t = 1;
  const auto mul = [&](std::size_t k) {
    t *= k;
    if (t > std::numeric_limits<std::uint64_t>::max())
      throw size_error("too many realisation pairs to count");
  };
  for (std::size_t i = 0; i < u.size(); ++i) mul(u[i].option_count());
  for (std::size_t j = 0; j < v.size(); ++j) mul(v[j].option_count());
  return static_cast<std::uint64_t>(t);
}

using bits_t = std::vector<std::uint64_t>;

bool get_bit(const bits_t& b, std::size_t t) {
  return (b[t >> 6] >> (t & 63)) & 1u;
}

void set_bit(bits_t& b, std::size_t t) {
  b[t >> 6] |= std::uint64_t{1} << (t & 63);
}

bool is_zero(const bits_t& b) {
  for (auto x : b)
    if (x) return false;
  return true;
}

bool subset_of(const bits_t& a, const bits_t& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}

// Advances a mixed-radix option tuple; false once it wraps to all zeros.
bool advance_tuple(std::vector<std::uint8_t>& t,
                   const std::function<std::size_t(std::size_t)>& radix) {
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (++t[k] < radix(k)) return true;
    t[k] = 0;
  }
  return false;
}

// ---- discrete band propagation -------------------------------------------

using pair_key = std::pair<bits_t, std::vector<std::uint8_t>>;

// Reachability step into column i: bit j set iff the prefix coupling can
// stand at (i, j).  Predecessors: (i-1, j), (i-1, j-1), (i, j-1).
bits_t pair_step(const bits_t& prev, std::size_t lo_p, std::size_t hi_p,
                 std::size_t lo_c, std::size_t hi_c, std::size_t words,
                 const std::function<bool(std::size_t)>& close) {
  bits_t nb(words, 0);
  for (std::size_t j = lo_c; j <= hi_c; ++j) {
    if (!close(j)) continue;
    bool pred = j > lo_c && get_bit(nb, j - 1 - lo_c);
    if (!pred && j >= lo_p && j <= hi_p) pred = get_bit(prev, j - lo_p);
    if (!pred && j >= 1 && j - 1 >= lo_p && j - 1 <= hi_p)
      pred = get_bit(prev, j - 1 - lo_p);
    if (pred) set_bit(nb, j - lo_c);
  }
  return nb;
}

bits_t first_column_bits(std::size_t hi0, std::size_t words,
                         const std::function<bool(std::size_t)>& close) {
  bits_t b(words, 0);
  for (std::size_t j = 0; j <= hi0; ++j) {
    if (!close(j)) break;
    set_bit(b, j);
  }
  return b;
}

void prune_superset_states(std::vector<pair_key>& states) {
  std::vector<char> drop(states.size(), 0);
  for (std::size_t x = 0; x < states.size(); ++x) {
    for (std::size_t y = 0; y < states.size(); ++y) {
      if (x == y || drop[y]) continue;
      if (states[x].second != states[y].second) continue;
      if (subset_of(states[y].first, states[x].first) &&
          states[x].first != states[y].first) {
        drop[x] = 1;
        break;
      }
    }
  }
  std::vector<pair_key> kept;
  for (std::size_t x = 0; x < states.size(); ++x)
    if (!drop[x]) kept.push_back(std::move(states[x]));
  states = std::move(kept);
}

}  // namespace

bool ub_discrete_banded(const uncertain_curve& u, const poly_curve& sigma,
                        std::size_t w, double delta, bool prune_dominated) {
  check_banded_pre(u.size(), sigma.size(), w);
  check_indecisive(u);
  if (u.dim() != sigma.dim()) throw precondition_error("dimension mismatch");
  uncertain_curve v = uncertain_curve::from_precise(sigma);
  return ub_discrete_banded_pair(u, v, w, delta, prune_dominated);
}

bool ub_discrete_banded_pair(const uncertain_curve& u,
                             const uncertain_curve& v, std::size_t w,
                             double delta, bool prune_dominated) {
  check_banded_pre(u.size(), v.size(), w);
  check_indecisive(u);
  check_indecisive(v);
  if (u.dim() != v.dim()) throw precondition_error("dimension mismatch");
  const std::size_t n = u.size();
  const std::size_t words = (2 * w + 1 + 63) / 64;

  std::vector<pair_key> cur;
  {
    std::set<pair_key> dedup;
    const std::size_t hi0 = band_hi(0, w, n);
    std::vector<std::uint8_t> vt(hi0 + 1, 0);
    do {
      for (std::size_t a = 0; a < u[0].option_count(); ++a) {
        const auto close = [&](std::size_t j) {
          return point_point_distance(u[0].option(a), v[j].option(vt[j])) <=
                 delta + kTol;
        };
        bits_t b = first_column_bits(hi0, words, close);
        if (is_zero(b)) return false;
        dedup.insert({std::move(b), vt});
      }
    } while (advance_tuple(
        vt, [&](std::size_t k) { return v[k].option_count(); }));
    cur.assign(dedup.begin(), dedup.end());
  }
  if (prune_dominated) prune_superset_states(cur);

  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t lo_p = band_lo(i - 1, w);
    const std::size_t hi_p = band_hi(i - 1, w, n);
    const std::size_t lo_c = band_lo(i, w);
    const std::size_t hi_c = band_hi(i, w, n);
    const bool grow = hi_c > hi_p;
    const std::size_t shift = lo_c - lo_p;
    std::set<pair_key> dedup;
    for (const auto& [b, vt] : cur) {
      for (std::size_t a = 0; a < u[i].option_count(); ++a) {
        const std::size_t fresh = grow ? v[hi_c].option_count() : 1;
        for (std::size_t bn = 0; bn < fresh; ++bn) {
          std::vector<std::uint8_t> nvt(vt.begin() + shift, vt.end());
          if (grow) nvt.push_back(static_cast<std::uint8_t>(bn));
          const auto close = [&](std::size_t j) {
            return point_point_distance(
                       u[i].option(a), v[j].option(nvt[j - lo_c])) <=
                   delta + kTol;
          };
          bits_t nb = pair_step(b, lo_p, hi_p, lo_c, hi_c, words, close);
          if (is_zero(nb)) return false;
          dedup.insert({std::move(nb), std::move(nvt)});
        }
      }
    }
    cur.assign(dedup.begin(), dedup.end());
    if (prune_dominated) prune_superset_states(cur);
  }
  const std::size_t end_t = (n - 1) - band_lo(n - 1, w);
  for (const auto& [b, vt] : cur)
    if (!get_bit(b, end_t)) return false;
  return true;
}

std::vector<double> critical_values_discrete(const uncertain_curve& u,
                                             const uncertain_curve& v,
                                             std::size_t w) {
  check_banded_pre(u.size(), v.size(), w);
  check_indecisive(u);
  check_indecisive(v);
  if (u.dim() != v.dim()) throw precondition_error("dimension mismatch");
  std::vector<double> vals;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = band_lo(i, w); j <= band_hi(i, w, v.size()); ++j)
      for (std::size_t a = 0; a < u[i].option_count(); ++a)
        for (std::size_t b = 0; b < v[j].option_count(); ++b)
          vals.push_back(
              point_point_distance(u[i].option(a), v[j].option(b)));
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

banded_counts count_discrete_banded_above(const uncertain_curve& u,
                                          const uncertain_curve& v,
                                          std::size_t w, double delta) {
  check_banded_pre(u.size(), v.size(), w);
  check_indecisive(u);
  check_indecisive(v);
  if (u.dim() != v.dim()) throw precondition_error("dimension mismatch");
  const std::size_t n = u.size();
  const std::size_t words = (2 * w + 1 + 63) / 64;
  banded_counts res;
  res.total = checked_realisation_pairs(u, v);

  std::map<pair_key, std::uint64_t> cur;
  {
    const std::size_t hi0 = band_hi(0, w, n);
    std::vector<std::uint8_t> vt(hi0 + 1, 0);
    do {
      for (std::size_t a = 0; a < u[0].option_count(); ++a) {
        const auto close = [&](std::size_t j) {
          return point_point_distance(u[0].option(a), v[j].option(vt[j])) <=
                 delta + kTol;
        };
        cur[{first_column_bits(hi0, words, close), vt}] += 1;
      }
    } while (advance_tuple(
        vt, [&](std::size_t k) { return v[k].option_count(); }));
  }
  std::uint64_t sum = 0;
  for (const auto& [k, c] : cur) sum += c;
  res.column_totals.push_back(sum);

  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t lo_p = band_lo(i - 1, w);
    const std::size_t hi_p = band_hi(i - 1, w, n);
    const std::size_t lo_c = band_lo(i, w);
    const std::size_t hi_c = band_hi(i, w, n);
    const bool grow = hi_c > hi_p;
    const std::size_t shift = lo_c - lo_p;
    std::map<pair_key, std::uint64_t> nxt;
    for (const auto& [key, cnt] : cur) {
      const auto& [b, vt] = key;
      for (std::size_t a = 0; a < u[i].option_count(); ++a) {
        const std::size_t fresh = grow ? v[hi_c].option_count() : 1;
        for (std::size_t bn = 0; bn < fresh; ++bn) {
          std::vector<std::uint8_t> nvt(vt.begin() + shift, vt.end());
          if (grow) nvt.push_back(static_cast<std::uint8_t>(bn));
          const auto close = [&](std::size_t j) {
            return point_point_distance(
                       u[i].option(a), v[j].option(nvt[j - lo_c])) <=
                   delta + kTol;
          };
          bits_t nb = pair_step(b, lo_p, hi_p, lo_c, hi_c, words, close);
          nxt[{std::move(nb), std::move(nvt)}] += cnt;
        }
      }
    }
    cur = std::move(nxt);
    sum = 0;
    for (const auto& [k, c] : cur) sum += c;
    res.column_totals.push_back(sum);
  }

  const std::size_t end_t = (n - 1) - band_lo(n - 1, w);
  for (const auto& [key, cnt] : cur)
    if (!get_bit(key.first, end_t)) res.above += cnt;
  return res;
}

namespace {

// Fills tail counts for every critical value; the counts are nonincreasing
// integers, so equal endpoints pin the whole range.
std::vector<std::uint64_t> tail_counts(
    const std::vector<double>& vals,
    const std::function<std::uint64_t(double)>& above) {
  std::vector<std::uint64_t> out(vals.size(), 0);
  if (vals.empty()) return out;
  std::vector<char> done(vals.size(), 0);
  const auto eval = [&](std::size_t t) {
    if (!done[t]) {
      out[t] = above(vals[t]);
      done[t] = 1;
    }
  };
  const std::function<void(std::size_t, std::size_t)> rec =
      [&](std::size_t a, std::size_t b) {
        eval(a);
        eval(b);
        if (b - a <= 1) return;
        if (out[a] == out[b]) {
          for (std::size_t t = a + 1; t < b; ++t) {
            out[t] = out[a];
            done[t] = 1;
          }
          return;
        }
        const std::size_t mid = (a + b) / 2;
        rec(a, mid);
        rec(mid, b);
      };
  rec(0, vals.size() - 1);
  return out;
}

double step_function_mean(const std::vector<double>& vals,
                          const std::vector<std::uint64_t>& above,
                          std::uint64_t total) {
  long double e = vals[0];
  for (std::size_t t = 0; t + 1 < vals.size(); ++t)
    e += (long double)(vals[t + 1] - vals[t]) * above[t] / total;
  return static_cast<double>(e);
}

}  // namespace

double expected_discrete_banded(const uncertain_curve& u,
                                const uncertain_curve& v, std::size_t w) {
  const std::vector<double> vals = critical_values_discrete(u, v, w);
  std::uint64_t total = 0;
  const auto above = [&](double d) {
    banded_counts c = count_discrete_banded_above(u, v, w, d);
    total = c.total;
    return c.above;
  };
  const std::vector<std::uint64_t> tails = tail_counts(vals, above);
  return step_function_mean(vals, tails, total);
}

// ---- continuous band propagation -----------------------------------------

namespace {

// Interval endpoints carry their provenance so states deduplicate exactly:
// either an integer corner value or an endpoint of the free interval on a
// named vertical cell boundary.
enum : std::uint64_t { tk_int = 1, tk_flo = 2, tk_fhi = 3 };

std::uint64_t tag_int(std::size_t v) { return (tk_int << 60) | v; }

std::uint64_t tag_free(std::uint64_t kind, std::size_t col, std::size_t row,
                       std::size_t opt) {
  return (kind << 60) | (static_cast<std::uint64_t>(col) << 34) |
         (static_cast<std::uint64_t>(row) << 8) | opt;
}

struct c_iv {
  bool present = false;
  double lo = 0.0, hi = 0.0;
  std::uint64_t lo_tag = 0, hi_tag = 0;
};

struct c_state {
  std::uint8_t uopt = 0;
  std::vector<std::uint8_t> vopt;  // options of v-vertices [vbase, ...]
  std::vector<c_iv> rows;          // row intervals [rbase, ...], absolute y
};

using c_key = std::vector<std::uint64_t>;

c_key key_of(const c_state& s) {
  c_key k;
  k.reserve(1 + s.vopt.size() + 3 * s.rows.size());
  k.push_back(s.uopt);
  for (auto o : s.vopt) k.push_back(o);
  for (const auto& r : s.rows) {
    k.push_back(r.present ? 1 : 0);
    k.push_back(r.present ? r.lo_tag : 0);
    k.push_back(r.present ? r.hi_tag : 0);
  }
  return k;
}

bool state_dead(const c_state& s) {
  for (const auto& r : s.rows)
    if (r.present) return false;
  return true;
}

struct cont_ctx {
  const uncertain_curve& u;
  const uncertain_curve& v;
  std::size_t w;
  double delta;
  std::size_t edges;  // N = n - 1
};

// Initial reachability on the left boundary: a contiguous climb from the
// origin, clipped at the band line y <= w.
c_state initial_state(const cont_ctx& cx, std::size_t a,
                      const std::vector<std::uint8_t>& vt) {
  c_state s;
  s.uopt = static_cast<std::uint8_t>(a);
  s.vopt = vt;
  const std::size_t re0 = std::min(cx.edges - 1, cx.w);
  s.rows.assign(re0 + 1, c_iv{});
  bool run = true;
  double prev_hi = 0.0;
  for (std::size_t j = 0; j <= re0 && run; ++j) {
    const interval f = free_space_interval(
        cx.u[0].option(a),
        segment{cx.v[j].option(vt[j]), cx.v[j + 1].option(vt[j + 1])},
        cx.delta);
    run = !f.is_empty() && f.lo <= keps &&
          (j == 0 || prev_hi >= static_cast<double>(j) - keps);
    if (!run) break;
    const double base = static_cast<double>(j);
    if (j == cx.w) {
      s.rows[j] = {true, base, base, tag_int(j), tag_int(j)};
    } else {
      s.rows[j] = {true, base, base + f.hi, tag_int(j),
                   tag_free(tk_fhi, 0, j, a)};
    }
    prev_hi = s.rows[j].hi;
  }
  return s;
}

// Sweeps column c and assembles the state on boundary c+1 (or, at the last
// column, reports whether the end corner is reached).
struct step_result {
  c_state next;
  bool end = false;
};

step_result column_step(const cont_ctx& cx, const c_state& s, std::size_t c,
                        std::size_t a2, int bnew) {
  const std::size_t N = cx.edges;
  const std::size_t n = N + 1;
  const std::size_t rb = band_lo(c, cx.w);
  const std::size_t re = std::min(N - 1, c + cx.w);
  const std::size_t vb = rb;

  // window options, extended by the fresh choice where the window grows
  std::vector<std::uint8_t> vall = s.vopt;
  const std::size_t ve_old = vb + vall.size() - 1;
  if (bnew >= 0) vall.push_back(static_cast<std::uint8_t>(bnew));
  const auto vopt = [&](std::size_t j) { return vall[j - vb]; };

  const auto rfree = [&](std::size_t j) {
    return free_space_interval(
        cx.u[c + 1].option(a2),
        segment{cx.v[j].option(vopt(j)), cx.v[j + 1].option(vopt(j + 1))},
        cx.delta);
  };
  const auto hfree = [&](std::size_t j) {
    return free_space_interval(
        cx.v[j].option(vopt(j)),
        segment{cx.u[c].option(s.uopt), cx.u[c + 1].option(a2)}, cx.delta);
  };

  std::vector<c_iv> R(re - rb + 1);
  interval bot = interval::empty();
  if (rb == 0) {
    const c_iv& L0 = s.rows[0];
    if (L0.present && L0.lo <= keps) {
      const interval h0 = hfree(0);
      if (!h0.is_empty() && h0.lo <= keps) bot = {0.0, h0.hi};
    }
  }
  for (std::size_t j = rb; j <= re; ++j) {
    const c_iv& L = s.rows[j - rb];
    const interval rf = rfree(j);
    c_iv out;
    if (!rf.is_empty()) {
      const double flo = static_cast<double>(j) + rf.lo;
      const double fhi = static_cast<double>(j) + rf.hi;
      if (!bot.is_empty()) {
        out = {true, flo, fhi, tag_free(tk_flo, c + 1, j, a2),
               tag_free(tk_fhi, c + 1, j, a2)};
      } else if (L.present) {
        double lo = flo;
        std::uint64_t lot = tag_free(tk_flo, c + 1, j, a2);
        if (L.lo > flo) {
          lo = L.lo;
          lot = L.lo_tag;
        }
        if (lo <= fhi + keps) out = {true, lo, fhi, lot,
                                     tag_free(tk_fhi, c + 1, j, a2)};
      }
    }
    R[j - rb] = out;
    if (j < re) {
      const interval tf = hfree(j + 1);
      interval t = interval::empty();
      if (!tf.is_empty()) {
        if (L.present)
          t = tf;
        else if (!bot.is_empty() && std::max(tf.lo, bot.lo) <= tf.hi + keps)
          t = {std::max(tf.lo, bot.lo), tf.hi};
      }
      bot = t;
    }
  }

  step_result out;
  if (c + 1 == N) {
    const c_iv& last = R[N - 1 - rb];
    out.end = last.present && last.hi >= static_cast<double>(N) - keps;
    return out;
  }

  const std::size_t nrb = band_lo(c + 1, cx.w);
  const std::size_t nre = std::min(N - 1, c + 1 + cx.w);
  c_state& ns = out.next;
  ns.uopt = static_cast<std::uint8_t>(a2);
  const std::size_t nvb = nrb;
  const std::size_t nve = std::min(n - 1, c + 1 + cx.w + 1);
  ns.vopt.assign(vall.begin() + static_cast<std::ptrdiff_t>(nvb - vb),
                 vall.begin() +
                     static_cast<std::ptrdiff_t>(std::min(nve, ve_old +
                                                          (bnew >= 0 ? 1 : 0)) -
                                                 vb + 1));
  ns.rows.assign(nre - nrb + 1, c_iv{});
  for (std::size_t j = nrb; j <= std::min(nre, re); ++j)
    ns.rows[j - nrb] = R[j - rb];

  // Corner continuation across the lower band line: the dropped bottom row
  // may hand its top corner to the row above, which then climbs the
  // boundary through free space.
  if (nrb == rb + 1) {
    const c_iv& low = R[0];
    if (low.present && low.hi >= static_cast<double>(nrb) - keps) {
      c_iv& tgt = ns.rows[0];
      if (tgt.present) {
        tgt.lo = static_cast<double>(nrb);
        tgt.lo_tag = tag_int(nrb);
      } else {
        const interval rf = rfree(nrb);
        if (!rf.is_empty() && rf.lo <= keps)
          tgt = {true, static_cast<double>(nrb),
                 static_cast<double>(nrb) + rf.hi, tag_int(nrb),
                 tag_free(tk_fhi, c + 1, nrb, a2)};
      }
    }
  }
  // Corner seed onto the upper band line: only the corner point itself is
  // band-feasible on the new top row's boundary.
  if (nre > re) {
    const c_iv& t = R[re - rb];
    if (t.present && t.hi >= static_cast<double>(re + 1) - keps)
      ns.rows[nre - nrb] = {true, static_cast<double>(nre),
                            static_cast<double>(nre), tag_int(nre),
                            tag_int(nre)};
  }
  return out;
}

struct cont_store {
  std::map<c_key, std::pair<c_state, std::uint64_t>> states;

  void add(c_state s, std::uint64_t cnt) {
    c_key k = key_of(s);
    auto it = states.find(k);
    if (it == states.end())
      states.emplace(std::move(k), std::make_pair(std::move(s), cnt));
    else
      it->second.second += cnt;
  }
};

banded_counts count_continuous_core(const uncertain_curve& u,
                                    const uncertain_curve& v, std::size_t w,
                                    double delta) {
  const std::size_t n = u.size();
  banded_counts res;
  res.total = checked_realisation_pairs(u, v);
  if (n == 1) {
    std::uint64_t bad = 0;
    for (std::size_t a = 0; a < u[0].option_count(); ++a)
      for (std::size_t b = 0; b < v[0].option_count(); ++b)
        if (point_point_distance(u[0].option(a), v[0].option(b)) >
            delta + kTol)
          ++bad;
    res.above = bad;
    res.column_totals.push_back(res.total);
    return res;
  }

  const std::size_t N = n - 1;
  const cont_ctx cx{u, v, w, delta, N};
  cont_store cur;
  {
    const std::size_t ve0 = std::min(n - 1, w + 1);
    std::vector<std::uint8_t> vt(ve0 + 1, 0);
    do {
      for (std::size_t a = 0; a < u[0].option_count(); ++a)
        cur.add(initial_state(cx, a, vt), 1);
    } while (advance_tuple(
        vt, [&](std::size_t k) { return v[k].option_count(); }));
  }
  std::uint64_t sum = 0;
  for (const auto& [k, sc] : cur.states) sum += sc.second;
  res.column_totals.push_back(sum);

  for (std::size_t c = 0; c < N; ++c) {
    const bool final_col = c + 1 == N;
    const bool grow = c + w + 2 <= n - 1;
    cont_store nxt;
    for (const auto& [key, sc] : cur.states) {
      const c_state& s = sc.first;
      const std::uint64_t cnt = sc.second;
      for (std::size_t a2 = 0; a2 < u[c + 1].option_count(); ++a2) {
        const std::size_t fresh = grow ? v[c + w + 2].option_count() : 1;
        for (std::size_t bn = 0; bn < fresh; ++bn) {
          step_result st =
              column_step(cx, s, c, a2, grow ? static_cast<int>(bn) : -1);
          if (final_col) {
            if (!st.end) res.above += cnt;
          } else {
            nxt.add(std::move(st.next), cnt);
          }
        }
      }
    }
    if (!final_col) {
      cur = std::move(nxt);
      sum = 0;
      for (const auto& [k, sc] : cur.states) sum += sc.second;
      res.column_totals.push_back(sum);
    }
  }
  return res;
}

// Critical candidates for the banded continuous distance: option distances
// near the band, point-to-edge tangencies, and openings where an edge
// crosses the bisector of two same-curve vertices.
void push_bisector_openings(const point& p, const point& q, const segment& s,
                            std::vector<double>& vals) {
  const point dir = s.b - s.a;
  const point pq = q - p;
  const double denom = 2.0 * dot(dir, pq);
  if (std::abs(denom) < 1e-15) return;
  const double num = dot(q, q) - dot(p, p) - 2.0 * dot(s.a, pq);
  const double t = num / denom;
  if (t < -keps || t > 1.0 + keps) return;
  const point x = s.at(std::clamp(t, 0.0, 1.0));
  vals.push_back(point_point_distance(x, p));
}

std::vector<double> critical_values_continuous(const uncertain_curve& u,
                                               const uncertain_curve& v,
                                               std::size_t w) {
  const std::size_t n = u.size();
  const std::size_t pad = w + 1;
  const auto near_band = [&](std::size_t i, std::size_t j) {
    return (i > j ? i - j : j - i) <= pad;
  };
  std::vector<double> vals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!near_band(i, j)) continue;
      for (std::size_t a = 0; a < u[i].option_count(); ++a)
        for (std::size_t b = 0; b < v[j].option_count(); ++b)
          vals.push_back(
              point_point_distance(u[i].option(a), v[j].option(b)));
    }
  const auto vertex_vs_edges = [&](const uncertain_curve& pts,
                                   const uncertain_curve& edges) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (!near_band(i, j) && !near_band(i, j + 1)) continue;
        for (std::size_t a = 0; a < pts[i].option_count(); ++a)
          for (std::size_t b1 = 0; b1 < edges[j].option_count(); ++b1)
            for (std::size_t b2 = 0; b2 < edges[j + 1].option_count(); ++b2)
              vals.push_back(point_segment_distance(
                  pts[i].option(a), segment{edges[j].option(b1),
                                            edges[j + 1].option(b2)}));
      }
  };
  vertex_vs_edges(u, v);
  vertex_vs_edges(v, u);
  const auto pair_openings = [&](const uncertain_curve& pts,
                                 const uncertain_curve& edges) {
    for (std::size_t i1 = 0; i1 < n; ++i1)
      for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
        for (std::size_t j = 0; j + 1 < n; ++j) {
          if (!(near_band(i1, j) || near_band(i1, j + 1)) ||
              !(near_band(i2, j) || near_band(i2, j + 1)))
            continue;
          for (std::size_t a1 = 0; a1 < pts[i1].option_count(); ++a1)
            for (std::size_t a2 = 0; a2 < pts[i2].option_count(); ++a2)
              for (std::size_t b1 = 0; b1 < edges[j].option_count(); ++b1)
                for (std::size_t b2 = 0; b2 < edges[j + 1].option_count();
                     ++b2)
                  push_bisector_openings(
                      pts[i1].option(a1), pts[i2].option(a2),
                      segment{edges[j].option(b1), edges[j + 1].option(b2)},
                      vals);
        }
  };
  pair_openings(u, v);
  pair_openings(v, u);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

}  // namespace

bool ub_continuous_banded(const uncertain_curve& u, const uncertain_curve& v,
                          std::size_t w, double delta) {
  check_banded_pre(u.size(), v.size(), w);
  check_indecisive(u);
  check_indecisive(v);
  if (u.dim() != v.dim()) throw precondition_error("dimension mismatch");
  return count_continuous_core(u, v, w, delta).above == 0;
}

banded_counts count_continuous_banded_above(const uncertain_curve& u,
                                            const uncertain_curve& v,
                                            std::size_t w, double delta) {
  check_banded_pre(u.size(), v.size(), w);
  check_indecisive(u);
  check_indecisive(v);
  if (u.dim() != v.dim()) throw precondition_error("dimension mismatch");
  return count_continuous_core(u, v, w, delta);
}

double expected_continuous_banded(const uncertain_curve& u,
                                  const uncertain_curve& v, std::size_t w) {
  check_banded_pre(u.size(), v.size(), w);
  check_indecisive(u);
  check_indecisive(v);
  if (u.dim() != v.dim()) throw precondition_error("dimension mismatch");
  const std::vector<double> vals = critical_values_continuous(u, v, w);
  std::uint64_t total = 0;
  const auto above = [&](double d) {
    banded_counts c = count_continuous_core(u, v, w, d);
    total = c.total;
    return c.above;
  };
  const std::vector<std::uint64_t> tails = tail_counts(vals, above);
  return step_function_mean(vals, tails, total);
}

}  // namespace ufd
