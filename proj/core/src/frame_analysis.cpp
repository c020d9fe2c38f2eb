// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "qgabor/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "qgabor/gabor_ops.hpp"
#include "qgabor/matrix_fn.hpp"
#include "qgabor/sampling.hpp"
#include "qgabor/symmetric_eigen.hpp"

namespace qgabor {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::frame: return "frame";
    case Verdict::bessel_only: return "bessel_only";
    case Verdict::not_frame: return "not_frame";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::necessary_diagonal: return "necessary_diagonal";
    case Criterion::row_sum_sufficient: return "row_sum_sufficient";
    case Criterion::narrow_support: return "narrow_support";
    case Criterion::parseval_rows: return "parseval_rows";
    case Criterion::operator_inequality: return "operator_inequality";
  }
  return "unknown";
}

namespace {

double m_squared(const WindowFamily& w) { return static_cast<double>(w.M()) * w.M(); }

WindowFamily single_window(const WindowFamily& w, int l) {
  return {GaborParams(1, w.M(), w.N()), {w.window(l)}};
}

// Frame bound comparisons are relative: a zero diagonal violates every A > 0.
bool below(double value, double bound, double tol) { return bound - value > tol * std::abs(bound); }
bool above(double value, double bound, double tol) { return value - bound > tol * std::abs(bound); }

}  // namespace

DiagonalCondition necessary_diagonal(const WindowFamily& w, double A, double B, double tol) {
  const double M2 = m_squared(w);
  DiagonalCondition out;
  for (Index2 k : residues(w.N())) {
    const double d = diagonal(w, k);
    out.values.push_back({k, d, d});
    if (out.holds && (below(M2 * d, A, tol) || above(M2 * d, B, tol))) {
      out.holds = false;
      out.witness = k;
    }
  }
  return out;
}

ParsevalNecessary parseval_necessary(const WindowFamily& w, double tol) {
  ParsevalNecessary out;
  const long long N = w.N();
  const long long M = w.M();
  out.ratio_ok = N * N <= static_cast<long long>(w.L()) * M * M;
  for (const auto& g : w.windows()) out.norm_sum += g.norm2();
  out.expected_norm_sum = static_cast<double>(N * N) / static_cast<double>(M * M);
  out.norm_sum_ok = std::abs(out.norm_sum - out.expected_norm_sum) <= tol;
  return out;
}

double bessel_bound_sufficient(const WindowFamily& w) {
  require_real(w, "bessel_bound_sufficient");
  double best = 0.0;
  for (Index2 k : residues(w.N())) {
    double s = 0.0;
    for (const auto& [p, v] : correlation_row(w, w, k)) s += v.abs();
    best = std::max(best, s);
  }
  return m_squared(w) * best;
}

double bessel_bound_cauchy_schwarz(const WindowFamily& w) {
  double total = 0.0;
  for (int l = 0; l < w.L(); ++l) {
    const FiniteSignal& g = w.window(l);
    if (g.empty()) continue;
    const WindowFamily single = single_window(w, l);
    double dmax = 0.0;
    for (Index2 k : residues(w.N())) dmax = std::max(dmax, diagonal(single, k));
    total += static_cast<double>(g.size()) * dmax;
  }
  return m_squared(w) * total;
}

std::optional<FrameBounds> frame_bounds_sufficient(const WindowFamily& w) {
  require_real(w, "frame_bounds_sufficient");
  std::vector<WindowFamily> singles;
  singles.reserve(static_cast<std::size_t>(w.L()));
  for (int l = 0; l < w.L(); ++l) singles.push_back(single_window(w, l));

  double lower = std::numeric_limits<double>::infinity();
  for (Index2 k : residues(w.N())) {
    double bracket = 0.0;
    for (const auto& s : singles) {
      for (const auto& [p, v] : correlation_row(s, s, k)) {
        bracket += p == Index2{0, 0} ? v.real() : -v.abs();
      }
    }
    lower = std::min(lower, bracket);
  }
  const double A = m_squared(w) * lower;
  if (!(A > 0.0)) return std::nullopt;
  return FrameBounds{A, bessel_bound_sufficient(w)};
}

bool is_narrow_support(const WindowFamily& w) {
  if (!w.is_real()) return false;
  return std::all_of(w.windows().begin(), w.windows().end(), [&](const FiniteSignal& g) {
    return g.empty() || support_extent(g) < w.M();
  });
}

NarrowSupportFrame narrow_support_frame(const WindowFamily& w, std::optional<double> A,
                                        std::optional<double> B, double tol) {
  require_real(w, "narrow_support_frame");
  for (int l = 0; l < w.L(); ++l) {
    const FiniteSignal& g = w.window(l);
    if (g.empty()) continue;
    if (const int width = supp_width(g); width >= w.M()) {
      throw std::invalid_argument("narrow_support_frame: window " + std::to_string(l) +
                                  " has supp_width " + std::to_string(width) + " >= M=" +
                                  std::to_string(w.M()));
    }
    if (const int extent = support_extent(g); extent >= w.M()) {
      throw std::invalid_argument(
          "narrow_support_frame: window " + std::to_string(l) + " has bounding-box extent " +
          std::to_string(extent) + " >= M=" + std::to_string(w.M()) +
          "; diagonal support offsets make the frame operator non-multiplicative");
    }
  }

  const int N = w.N();
  const double M2 = m_squared(w);
  NarrowSupportFrame out;
  out.report.method = Criterion::narrow_support;
  out.diagonal.resize(static_cast<std::size_t>(N) * N);
  double dmin = std::numeric_limits<double>::infinity();
  double dmax = 0.0;
  std::optional<Index2> zero_at;
  std::optional<Index2> violated_at;
  for (Index2 k : residues(N)) {
    const double d = diagonal(w, k);
    out.diagonal[static_cast<std::size_t>(k.k1) * N + k.k2] = d;
    out.report.diagnostics.push_back({k, M2 * d, M2 * d});
    if (d < dmin) dmin = d;
    if (d > dmax) dmax = d;
    if (!zero_at && M2 * d <= tol) zero_at = k;
    if (!violated_at && ((A && below(M2 * d, *A, tol)) || (B && above(M2 * d, *B, tol)))) {
      violated_at = k;
    }
  }
  out.report.lower_bound = M2 * dmin;
  out.report.upper_bound = M2 * dmax;
  if (zero_at) {
    out.report.verdict = Verdict::not_frame;
    out.report.witness = zero_at;
    out.report.note = "diagonal vanishes on a residue class mod N";
  } else if (violated_at) {
    out.report.verdict = Verdict::not_frame;
    out.report.witness = violated_at;
    out.report.note = "requested bounds violated; lower/upper are the optimal bounds";
  } else {
    out.report.verdict = Verdict::frame;
    out.report.note = "optimal bounds";
  }

  auto table = out.diagonal;
  auto lookup = [table, N](Index2 k) {
    const Index2 r = floor_mod(k, N);
    return table[static_cast<std::size_t>(r.k1) * N + r.k2];
  };
  out.apply_S = [lookup, M2](const FiniteSignal& h) {
    std::vector<SignalEntry> e(h.entries().begin(), h.entries().end());
    for (auto& x : e) x.q = x.q * (M2 * lookup(x.k));
    return FiniteSignal(std::move(e));
  };
  const bool invertible = !zero_at;
  out.apply_S_inverse = [lookup, M2, invertible](const FiniteSignal& h) {
    if (!invertible) {
      throw std::domain_error("apply_S_inverse: frame operator is not invertible");
    }
    std::vector<SignalEntry> e(h.entries().begin(), h.entries().end());
    for (auto& x : e) x.q = x.q / (M2 * lookup(x.k));
    return FiniteSignal(std::move(e));
  };
  return out;
}

ParsevalCheck parseval_check(const WindowFamily& w, double tol) {
  require_real(w, "parseval_check");
  ParsevalCheck out;
  if (const auto v = first_row_violation(w, w, tol)) {
    out.violation_k = v->k;
    out.violation_p = v->p;
    out.violation_value = v->value.real();
    out.expected_value = v->expected;
    return out;
  }
  out.holds = true;
  return out;
}

OperatorInequalityBounds operator_inequality_bounds(const WindowFamily& w, int radius,
                                                    double tol, int max_radius) {
  require_real(w, "operator_inequality_bounds");
  if (radius < 0 || max_radius < radius) {
    throw std::invalid_argument("operator_inequality_bounds: need 0 <= radius <= max_radius");
  }
  const double M2 = m_squared(w);
  OperatorInequalityBounds out;
  std::optional<OperatorInequalityBounds> previous;
  for (int R = radius; R <= max_radius; ++R) {
    OperatorInequalityBounds cur;
    cur.radius = R;
    cur.lower = std::numeric_limits<double>::infinity();
    cur.upper = -std::numeric_limits<double>::infinity();
    for (Index2 k : residues(w.N())) {
      const AggregateMatrix g = aggregate_truncated(w, k, R);
      const auto ev = extremal_eigenvalues(g.dense_real(), g.dimension());
      cur.per_k.push_back({k, M2 * ev.min, M2 * ev.max});
      cur.lower = std::min(cur.lower, M2 * ev.min);
      cur.upper = std::max(cur.upper, M2 * ev.max);
    }
    if (previous && std::abs(cur.lower - previous->lower) < tol &&
        std::abs(cur.upper - previous->upper) < tol) {
      cur.converged = true;
      return cur;
    }
    previous = std::move(cur);
  }
  return *previous;
}

RayleighRange empirical_rayleigh(const WindowFamily& w, int trials, int support_radius,
                                 std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("empirical_rayleigh: trials must be >= 1");
  if (support_radius < 0) throw std::invalid_argument("empirical_rayleigh: radius must be >= 0");
  Rng rng(seed);
  RayleighRange out{std::numeric_limits<double>::infinity(),
                    -std::numeric_limits<double>::infinity()};
  const IndexBox box = IndexBox::square(support_radius);
  for (int t = 0; t < trials; ++t) {
    const FiniteSignal h = random_signal(rng, box, uniform(rng, 0.2, 1.0));
    const double ratio = frame_functional(w, h) / h.norm2();
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  return out;
}

FrameReport analyze_frame(const WindowFamily& w, const AnalysisOptions& options) {
  const double M2 = m_squared(w);
  if (!w.is_real()) {
    FrameReport rep;
    rep.method = Criterion::necessary_diagonal;
    double dmin = std::numeric_limits<double>::infinity();
    for (Index2 k : residues(w.N())) {
      const double d = M2 * diagonal(w, k);
      rep.diagnostics.push_back({k, d, d});
      if (d < dmin) {
        dmin = d;
        rep.witness = k;
      }
    }
    if (dmin <= options.tol) {
      rep.verdict = Verdict::not_frame;
      rep.note = "necessary diagonal condition fails at the witness";
    } else {
      rep.verdict = Verdict::inconclusive;
      rep.witness.reset();
      rep.note = "quaternion-valued windows: only the necessary diagonal condition applies";
    }
    return rep;
  }

  const double bessel = bessel_bound_sufficient(w);

  if (is_narrow_support(w)) {
    FrameReport rep = narrow_support_frame(w, std::nullopt, std::nullopt, options.tol).report;
    if (rep.verdict == Verdict::not_frame) rep.verdict = Verdict::bessel_only;
    return rep;
  }

  if (const auto fb = frame_bounds_sufficient(w)) {
    FrameReport rep;
    rep.verdict = Verdict::frame;
    rep.method = Criterion::row_sum_sufficient;
    rep.lower_bound = fb->lower;
    rep.upper_bound = fb->upper;
    rep.note = "certified (not necessarily optimal) bounds";
    return rep;
  }

  const auto oi = operator_inequality_bounds(w, options.radius, options.convergence_tol,
                                             options.max_radius);
  FrameReport rep;
  rep.method = Criterion::operator_inequality;
  rep.diagnostics = oi.per_k;
  rep.lower_bound = oi.lower;
  rep.upper_bound = oi.upper;
  if (oi.lower <= options.tol) {
    // A truncation's smallest eigenvalue bounds the true one from above.
    rep.verdict = Verdict::bessel_only;
    rep.upper_bound = bessel;
    const auto worst = std::min_element(oi.per_k.begin(), oi.per_k.end(),
                                        [](const auto& a, const auto& b) { return a.lower < b.lower; });
    if (worst != oi.per_k.end()) rep.witness = worst->k;
    rep.note = "a principal truncation is singular at the witness; upper is the row-sum Bessel bound";
  } else if (oi.converged) {
    rep.verdict = Verdict::frame;
    rep.note = "truncation estimates: lower over-estimates, upper under-estimates the optimal bounds";
  } else {
    rep.verdict = Verdict::inconclusive;
    rep.note = "truncation estimates did not converge by radius " + std::to_string(oi.radius);
  }
  return rep;
}

}  // namespace qgabor
