#include "ufd/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "ufd/common.hpp"

namespace ufd {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw argument_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

cnf_formula parse_dimacs(const std::string& text) {
  cnf_formula f;
  bool have_header = false;
  int expected_clauses = 0;
  std::vector<int> clause;
  bool clause_open = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      if (have_header) parse_fail(lineno, "duplicate problem line");
      std::string fmt;
      long nv = -1, nc = -1;
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
        parse_fail(lineno, "malformed problem line, expected 'p cnf V C'");
      f.num_vars = static_cast<int>(nv);
      expected_clauses = static_cast<int>(nc);
      have_header = true;
      continue;
    }
    if (!have_header) parse_fail(lineno, "literal before problem line");
    do {
      long lit;
      try {
        std::size_t used = 0;
        lit = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        parse_fail(lineno, "bad token '" + tok + "'");
      }
      if (lit == 0) {
        f.clauses.push_back(clause);
        clause.clear();
        clause_open = false;
      } else {
        const long var = lit > 0 ? lit : -lit;
        if (var > f.num_vars)
          parse_fail(lineno, "variable " + std::to_string(var) +
                                 " exceeds declared count");
        clause.push_back(static_cast<int>(lit));
        clause_open = true;
      }
    } while (ls >> tok);
  }
  if (clause_open) parse_fail(lineno, "unterminated clause at end of input");
  if (static_cast<int>(f.clauses.size()) != expected_clauses)
    throw argument_error("declared " + std::to_string(expected_clauses) +
                         " clauses but found " +
                         std::to_string(f.clauses.size()));
  return f;
}

bool eps_valid(double eps) { return eps > 0.0 && eps < 0.25; }

// The continuous satisfiable/unsatisfiable gap needs (1+eps) 2/sqrt(5) > 1.
bool eps_valid_for_continuous(double eps) {
  return eps >= 0.12 && eps < 0.25;
}

namespace {

// 0 = unset, -1 = positive literal present, +1 = negative literal present.
// The gadget y-coordinate is -0.5 for a positive and 0.5 for a negative
// literal, 0 for variables absent from the clause.
std::vector<double> clause_heights(const std::vector<int>& clause, int m) {
  std::vector<int> sign(m + 1, 0);
  for (int lit : clause) {
    const int var = lit > 0 ? lit : -lit;
    const int s = lit > 0 ? -1 : +1;
    if (sign[var] != 0 && sign[var] != s)
      throw argument_error("clause contains complementary literals");
    sign[var] = s;
  }
  std::vector<double> h(m + 1, 0.0);
  for (int j = 1; j <= m; ++j) h[j] = 0.5 * sign[j];
  return h;
}

void append_clause_gadget(poly_curve& cc, const std::vector<int>& clause,
                          int m) {
  const auto h = clause_heights(clause, m);
  cc.v.emplace_back(-1.0, 0.0);
  for (int j = 1; j <= m; ++j) {
    cc.v.emplace_back(0.0, h[j]);
    cc.v.emplace_back(1.0, 0.0);
  }
}

uncertain_curve build_variable_curve(int m, double eps,
                                     reduction_model model) {
  uncertain_curve vc;
  const double h = 0.5 + eps;
  vc.regions.push_back(uncertain_region::make_point(point(0.0, 0.0)));
  vc.regions.push_back(uncertain_region::make_point(point(-2.0, 0.0)));
  for (int j = 0; j < m; ++j) {
    switch (model) {
      case reduction_model::indecisive:
        // Option 0 encodes assigning the variable true.
        vc.regions.push_back(uncertain_region::make_options(
            {point(0.0, h), point(0.0, -h)}));
        break;
      case reduction_model::disk:
        vc.regions.push_back(
            uncertain_region::make_disk(point(0.0, 0.0), h));
        break;
      case reduction_model::segment:
        vc.regions.push_back(uncertain_region::make_segment(
            point(0.0, -h), point(0.0, h)));
        break;
    }
    vc.regions.push_back(uncertain_region::make_point(point(2.0, 0.0)));
  }
  vc.regions.push_back(uncertain_region::make_point(point(0.0, 0.0)));
  return vc;
}

}  // namespace

cnf_curves cnf_to_curves(const cnf_formula& f, double eps,
                         reduction_model model) {
  if (!eps_valid(eps)) throw argument_error("eps must lie in (0, 0.25)");
  if (f.num_vars <= 0)
    throw argument_error("formula needs at least one variable");
  if (f.clauses.empty()) throw argument_error("formula needs a clause");
  cnf_curves out;
  out.eps = eps;
  out.vc = build_variable_curve(f.num_vars, eps, model);
  for (const auto& clause : f.clauses)
    append_clause_gadget(out.cc, clause, f.num_vars);
  return out;
}

cnf_curves cnf_to_curves_expected_segment(const cnf_formula& f, double eps) {
  cnf_curves out = cnf_to_curves(f, eps, reduction_model::segment);
  // One catch gadget per variable: it pairs the top eps portion of that
  // variable's segment with a +-0.5 spike, pinning the realisation mass the
  // counting formula needs.
  const int m = f.num_vars;
  for (int j = 1; j <= m; ++j) {
    out.cc.v.emplace_back(-1.0, 0.0);
    for (int k = 1; k < j; ++k) {
      out.cc.v.emplace_back(0.0, 0.0);
      out.cc.v.emplace_back(1.0, 0.0);
    }
    out.cc.v.emplace_back(0.0, 0.5);
    out.cc.v.emplace_back(0.0, -0.5);
    out.cc.v.emplace_back(1.0, 0.0);
    for (int k = j + 1; k <= m; ++k) {
      out.cc.v.emplace_back(0.0, 0.0);
      out.cc.v.emplace_back(1.0, 0.0);
    }
  }
  return out;
}

double count_from_expected(expected_variant variant, double mu, int num_vars,
                           double eps) {
  if (!eps_valid(eps)) throw argument_error("eps must lie in (0, 0.25)");
  if (num_vars <= 0) throw argument_error("need at least one variable");
  const double two_m = std::ldexp(1.0, num_vars);
  switch (variant) {
    case expected_variant::discrete_indecisive:
      return (mu - 1.0) * two_m / eps;
    case expected_variant::continuous_indecisive: {
      const double s5 = std::sqrt(5.0);
      return two_m * (mu - 1.0) * s5 / (2.0 * (1.0 + eps) - s5);
    }
    case expected_variant::discrete_segment: {
      const double m = static_cast<double>(num_vars);
      return (mu - 1.0) * (1.0 + m) * std::pow(1.0 + 2.0 * eps, m) /
             std::pow(eps, m + 1.0);
    }
  }
  throw argument_error("unknown variant");
}

namespace {

struct lift_frame {
  std::size_t n = 0;
  double total = 0.0;  // sum of all values
  double alpha = 0.0;
  double delta = 0.0;
};

lift_frame frame_of(const std::vector<long long>& values) {
  if (values.empty()) throw argument_error("need at least one value");
  for (long long y : values)
    if (y <= 0) throw argument_error("values must be positive");
  lift_frame fr;
  fr.n = values.size();
  long long m = 0;
  for (long long y : values) m += y;
  fr.total = static_cast<double>(m);
  fr.delta = 4.0 * fr.total;
  fr.alpha = 2.1 * fr.delta;
  return fr;
}

void append_spike(poly_curve& c, const point& p, double delta) {
  c.v.push_back(p);
  c.v.push_back(p + point(0.0, delta));
  c.v.push_back(p - point(0.0, delta));
  c.v.push_back(p + point(0.0, delta));
  c.v.push_back(p);
}

// Realisation of the 4n+1 vertical segments encoding the subset with
// characteristic mask `mask` (bit i-1 = value i chosen).
realisation lifted_realisation(const std::vector<long long>& values,
                               std::uint64_t mask) {
  const lift_frame fr = frame_of(values);
  const double a = fr.alpha;
  realisation r;
  r.curve.v.reserve(4 * fr.n + 1);
  double beta_prev = 0.0;  // chosen-prefix sum before value i
  for (std::size_t i = 1; i <= fr.n; ++i) {
    const bool chosen = (mask >> (i - 1)) & 1;
    const double y = static_cast<double>(values[i - 1]);
    const double beta = beta_prev + (chosen ? y : 0.0);
    r.curve.v.emplace_back((2.0 * i - 1.0) * a, 2.0 * beta_prev);
    r.curve.v.emplace_back(2.0 * i * a, -2.0 * y - 2.0 * beta_prev);
    r.curve.v.emplace_back((2.0 * i - 1.0) * a,
                           chosen ? 2.0 * beta : 2.0 * beta_prev);
    r.curve.v.emplace_back(2.0 * i * a, -2.0 * beta);
    beta_prev = beta;
  }
  r.curve.v.emplace_back((2.0 * fr.n + 1.0) * a, 2.0 * beta_prev);
  r.option_index.assign(r.curve.size(), -1);
  return r;
}

}  // namespace

lb_instance subsetsum_to_lb_instance(const std::vector<long long>& values,
                                     long long target) {
  if (target < 0) throw argument_error("target must be nonnegative");
  const lift_frame fr = frame_of(values);
  const double a = fr.alpha;
  const double d = fr.delta;
  lb_instance out;
  out.delta = d;

  // The precise curve: a spike train along the baseline with one detour per
  // value and a final ascent to height 2*target.
  append_spike(out.pi, point(a, 0.0), d);
  for (std::size_t i = 1; i <= fr.n; ++i) {
    const double xm = (2.0 * i - 0.5) * a;  // shared x of p_i and q_i
    const point p(xm, -static_cast<double>(values[i - 1]));
    const point q(xm, 0.0);
    const point qn((2.0 * i + 0.5) * a, 0.0);
    out.pi.v.emplace_back((2.0 * i - 1.0) * a, 0.0);
    // Lower choice gadget around p.
    append_spike(out.pi, p, d);
    out.pi.v.push_back(p + point(0.5 * d, 0.0));
    append_spike(out.pi, p, d);
    out.pi.v.push_back(p - point(0.5 * d, 0.0));
    out.pi.v.push_back(p + point(0.5 * d, 0.0));
    // Upper choice gadget around q.
    append_spike(out.pi, q, d);
    out.pi.v.push_back(q - point(0.5 * d, 0.0));
    append_spike(out.pi, q, d);
    out.pi.v.emplace_back(2.0 * i * a, 0.0);
    append_spike(out.pi, qn, d);
  }
  append_spike(out.pi, point((2.0 * fr.n + 1.0) * a,
                             2.0 * static_cast<double>(target)),
               d);

  // The uncertain curve: vertical segments x = k alpha, y in [-2M, 2M], the
  // odd columns doubled so a realisation can revisit them.
  const double ylim = 2.0 * fr.total;
  auto seg_at = [&](std::size_t k) {
    return uncertain_region::make_segment(
        point(static_cast<double>(k) * a, -ylim),
        point(static_cast<double>(k) * a, ylim));
  };
  for (std::size_t i = 1; i <= fr.n; ++i) {
    out.u.regions.push_back(seg_at(2 * i - 1));
    out.u.regions.push_back(seg_at(2 * i));
    out.u.regions.push_back(seg_at(2 * i - 1));
    out.u.regions.push_back(seg_at(2 * i));
  }
  out.u.regions.push_back(seg_at(2 * fr.n + 1));
  return out;
}

realisation rr_witness(const std::vector<long long>& values, long long target,
                       const std::vector<std::size_t>& index_set) {
  const lift_frame fr = frame_of(values);
  std::uint64_t mask = 0;
  long long sum = 0;
  for (std::size_t idx : index_set) {
    if (idx < 1 || idx > fr.n) throw argument_error("index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (idx - 1);
    if (mask & bit) throw argument_error("duplicate index");
    mask |= bit;
    sum += values[idx - 1];
  }
  if (sum != target)
    throw precondition_error("index set does not sum to target");
  return lifted_realisation(values, mask);
}

std::vector<realisation> rr_candidates(const std::vector<long long>& values) {
  const lift_frame fr = frame_of(values);
  if (fr.n > 20) throw size_error("candidate enumeration supports n <= 20");
  const std::uint64_t total = std::uint64_t{1} << fr.n;
  std::vector<realisation> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    out.push_back(lifted_realisation(values, mask));
  return out;
}

}  // namespace ufd
