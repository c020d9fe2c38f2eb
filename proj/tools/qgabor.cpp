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


// qgabor: construct, check and verify quaternionic Gabor systems.
//
// Exit status: 0 affirmative verdict, 1 negative verdict, 2 input error.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgabor/constructors.hpp"
#include "qgabor/duality.hpp"
#include "qgabor/frame_analysis.hpp"
#include "qgabor/gabor_ops.hpp"
#include "qgabor/json_io.hpp"
#include "qgabor/matrix_fn.hpp"
#include "qgabor/oracle.hpp"
#include "qgabor/sampling.hpp"
#include "qgabor/stability.hpp"

namespace {

using namespace qgabor;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Options {
  std::string windows;
  std::string g;
  std::string h;
  std::string output;
  std::string k = "0,0";
  int L = 0;
  int M = 0;
  int N = 0;
  int radius = 1;
  int max_radius = 4;
  int trials = 20;
  std::uint64_t seed = 0;
  double tol = kDefaultTolerance;
  std::optional<double> A;
  std::optional<double> B;
};

double default_tolerance() {
  const char* env = std::getenv("QGABOR_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw InputError(std::string("QGABOR_TOL: expected a positive number, got '") + env + "'");
  }
  return v;
}

Index2 parse_k(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--k: expected k1,k2, got '" + text + "'");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const int k1 = std::stoi(text.substr(0, comma), &a);
    const int k2 = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw std::invalid_argument("trailing");
    return {k1, k2};
  } catch (const std::exception&) {
    throw InputError("--k: expected two integers k1,k2, got '" + text + "'");
  }
}

void emit(const Options& o, const Json& report) {
  const std::string text = canonical_dump(report);
  if (o.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.output, text);
  }
}

Json header(const std::string& command, const Options& o) {
  return {{"command", command}, {"tolerance", o.tol}};
}

int construct_parseval(const Options& o) {
  emit(o, to_json(build_parseval(o.L, o.M, o.N)));
  return kAffirmative;
}

int construct_onb(const Options& o) {
  emit(o, to_json(build_onb(o.M, o.N)));
  return kAffirmative;
}

int check_frame(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  AnalysisOptions opts;
  opts.tol = o.tol;
  opts.radius = o.radius;
  opts.max_radius = std::max(o.max_radius, o.radius);
  Json report = header("check frame", o);
  const FrameReport r = analyze_frame(w, opts);
  report["report"] = to_json(r);
  emit(o, report);
  return r.verdict == Verdict::frame ? kAffirmative : kNegative;
}

int check_bessel(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  Json report = header("check bessel", o);
  if (w.is_real()) {
    report["bound"] = bessel_bound_sufficient(w);
    report["method"] = "row_sum_sufficient";
  } else {
    report["bound"] = bessel_bound_cauchy_schwarz(w);
    report["method"] = "cauchy_schwarz";
  }
  report["bessel"] = true;
  emit(o, report);
  return kAffirmative;
}

int check_parseval(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  Json report = header("check parseval", o);
  const ParsevalNecessary nec = parseval_necessary(w, o.tol);
  report["necessary"] = to_json(nec);
  bool holds = false;
  if (w.is_real()) {
    const ParsevalCheck pc = parseval_check(w, o.tol);
    report["method"] = std::string(to_string(Criterion::parseval_rows));
    report["check"] = to_json(pc);
    holds = pc.holds;
  } else {
    holds = nec.ratio_ok && nec.norm_sum_ok && empirical_parseval(w, o.trials, o.seed, o.tol);
    report["method"] = "enumeration";
    report["trials"] = o.trials;
    report["seed"] = o.seed;
  }
  report["parseval"] = holds;
  emit(o, report);
  return holds ? kAffirmative : kNegative;
}

int check_onb(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  Json report = header("check onb", o);
  const OnbCheck c = onb_check(w, o.tol, 20, o.seed);
  report["check"] = to_json(c);
  report["seed"] = o.seed;
  const OnbExistence ex = onb_existence(w.M(), w.N());
  report["onb_exists_for_parameters"] = ex.exists;
  emit(o, report);
  return c.holds ? kAffirmative : kNegative;
}

int check_dual(const Options& o) {
  const WindowFamily g = read_family_file(o.g);
  const WindowFamily h = read_family_file(o.h);
  Json report = header("check dual", o);
  const DualCheck d = dual_check(g, h, o.tol);
  report["dual"] = to_json(d);
  report["reconstruction"] = to_json(reconstruction_check(g, h, o.trials, o.seed, o.tol));
  report["seed"] = o.seed;
  emit(o, report);
  return d.holds ? kAffirmative : kNegative;
}

int analyze(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  const FiniteSignal h = read_signal_file(o.h);
  Json report = header("analyze", o);
  report["coefficients"] = to_json(analysis(w, h));
  report["frame_functional"] = frame_functional(w, h);
  report["norm2"] = h.norm2();
  emit(o, report);
  return kAffirmative;
}

int matrix(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  if (o.radius < 0) throw InputError("--radius: must be >= 0");
  const Index2 k = parse_k(o.k);
  Json report = header("matrix", o);
  const Adjoint adj = natural_adjoint(w, w);
  report["adjoint"] = adj == Adjoint::transpose ? "transpose" : "conjugate";
  report["matrix"] = to_json(aggregate_truncated(w, w, k, o.radius, adj));
  emit(o, report);
  return kAffirmative;
}

int stability(const Options& o) {
  const WindowFamily g = read_family_file(o.g);
  const WindowFamily h = read_family_file(o.h);
  Json report = header("stability", o);
  const StabilityReport r = stability_verdict(g, h, o.A, o.B);
  report["report"] = to_json(r);
  emit(o, report);
  return r.applicable ? kAffirmative : kNegative;
}

// Every closed-form quantity against the brute-force oracle on seeded data.
int verify(const Options& o) {
  const WindowFamily w = read_family_file(o.windows);
  Rng rng(o.seed);
  const int span = w.N() + w.M();
  const IndexBox box{{-span, -span}, {span, span}};
  double functional_gap = 0.0;
  double decomposition_gap = 0.0;
  double operator_gap = 0.0;
  double mixed_gap = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    const FiniteSignal h = random_signal(rng, box, uniform(rng, 0.1, 0.5));
    const double reference = oracle::frame_functional(w, h);
    const double scale = std::max(1.0, std::abs(reference));
    functional_gap = std::max(functional_gap, std::abs(frame_functional(w, h) - reference) / scale);
    operator_gap = std::max(
        operator_gap, std::abs(inner(frame_operator_apply(w, h), h).real() - reference) / scale);
    if (w.is_real()) {
      decomposition_gap =
          std::max(decomposition_gap, std::abs(decompose_functional(w, h).total() - reference) / scale);
      const FiniteSignal phi = random_signal(rng, box, uniform(rng, 0.1, 0.5));
      const Quaternion expected = oracle::mixed_sum(w, w, h, phi);
      mixed_gap = std::max(mixed_gap, distance(mixed_sum_closed_form(w, w, h, phi), expected) /
                                          std::max(1.0, expected.abs()));
    }
  }
  Json report = header("verify", o);
  report["trials"] = o.trials;
  report["seed"] = o.seed;
  Json checks{{"frame_functional", {{"max_relative_error", functional_gap}, {"ok", functional_gap <= o.tol}}},
              {"frame_operator", {{"max_relative_error", operator_gap}, {"ok", operator_gap <= o.tol}}}};
  bool ok = functional_gap <= o.tol && operator_gap <= o.tol;
  if (w.is_real()) {
    checks["decomposition"] = {{"max_relative_error", decomposition_gap}, {"ok", decomposition_gap <= o.tol}};
    checks["mixed_sum"] = {{"max_relative_error", mixed_gap}, {"ok", mixed_gap <= o.tol}};
    ok = ok && decomposition_gap <= o.tol && mixed_gap <= o.tol;
  }
  report["checks"] = std::move(checks);
  report["ok"] = ok;
  emit(o, report);
  return ok ? kAffirmative : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  try {
    o.tol = default_tolerance();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }

  CLI::App app{"Construct, check and verify quaternionic Gabor systems"};
  app.require_subcommand(1);
  // -h is reserved for --h (the second family or signal file).
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", o.tol, "Tolerance for criterion equalities (default 1e-9, env QGABOR_TOL)")
        ->check(CLI::PositiveNumber);
  };
  auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Write JSON here instead of stdout"); };
  auto add_windows = [&](CLI::App* c) {
    c->add_option("-w,--windows", o.windows, "Window family JSON file")->required()->check(CLI::ExistingFile);
  };
  auto add_seeded = [&](CLI::App* c) {
    c->add_option("--trials", o.trials, "Random trials")->check(CLI::PositiveNumber);
    c->add_option("--seed", o.seed, "Random seed");
  };
  auto add_pair = [&](CLI::App* c) {
    c->add_option("--g", o.g, "First window family JSON file")->required()->check(CLI::ExistingFile);
    c->add_option("--h", o.h, "Second window family JSON file")->required()->check(CLI::ExistingFile);
  };

  std::function<int()> run;

  auto* construct = app.add_subcommand("construct", "Build a window family");
  construct->require_subcommand(1);
  auto* cp = construct->add_subcommand("parseval", "Partition-based Parseval frame (L a perfect square, N^2 < L M^2)");
  cp->add_option("--L", o.L, "Number of windows")->required();
  cp->add_option("--M", o.M, "Modulation parameter")->required();
  cp->add_option("--N", o.N, "Translation parameter")->required();
  add_output(cp);
  cp->callback([&] { run = [&] { return construct_parseval(o); }; });
  auto* co = construct->add_subcommand("onb", "Orthonormal basis (M divides N)");
  co->add_option("--M", o.M, "Modulation parameter")->required();
  co->add_option("--N", o.N, "Translation parameter")->required();
  add_output(co);
  co->callback([&] { run = [&] { return construct_onb(o); }; });

  auto* check = app.add_subcommand("check", "Decide a structural property");
  check->require_subcommand(1);
  auto* chf = check->add_subcommand("frame", "Frame decision with bounds");
  add_windows(chf);
  add_tol(chf);
  add_output(chf);
  chf->add_option("--radius", o.radius, "Initial truncation radius for eigenvalue estimates")->check(CLI::NonNegativeNumber);
  chf->add_option("--max-radius", o.max_radius, "Largest truncation radius")->check(CLI::NonNegativeNumber);
  chf->callback([&] { run = [&] { return check_frame(o); }; });
  auto* chb = check->add_subcommand("bessel", "Certified Bessel bound");
  add_windows(chb);
  add_tol(chb);
  add_output(chb);
  chb->add_option("--radius", o.radius, "Unused; accepted for symmetry with check frame");
  chb->callback([&] { run = [&] { return check_bessel(o); }; });
  auto* chp = check->add_subcommand("parseval", "Parseval frame test");
  add_windows(chp);
  add_tol(chp);
  add_output(chp);
  add_seeded(chp);
  chp->add_option("--radius", o.radius, "Unused; accepted for symmetry with check frame");
  chp->callback([&] { run = [&] { return check_parseval(o); }; });
  auto* chn = check->add_subcommand("onb", "Orthonormal basis test");
  add_windows(chn);
  add_tol(chn);
  add_output(chn);
  chn->add_option("--seed", o.seed, "Seed for the sampled Gram check");
  chn->callback([&] { run = [&] { return check_onb(o); }; });
  auto* chd = check->add_subcommand("dual", "Duality of two real families");
  add_pair(chd);
  add_tol(chd);
  add_output(chd);
  add_seeded(chd);
  chd->callback([&] { run = [&] { return check_dual(o); }; });

  auto* an = app.add_subcommand("analyze", "Analysis coefficients of a signal");
  add_windows(an);
  an->add_option("--h", o.h, "Signal JSON file")->required()->check(CLI::ExistingFile);
  add_tol(an);
  add_output(an);
  an->callback([&] { run = [&] { return analyze(o); }; });

  auto* mx = app.add_subcommand("matrix", "Truncated aggregate matrix at k");
  add_windows(mx);
  mx->add_option("--k", o.k, "k1,k2 (default 0,0)");
  mx->add_option("--radius", o.radius, "Truncation radius R, p in [-R,R]^2");
  add_tol(mx);
  add_output(mx);
  mx->callback([&] { run = [&] { return matrix(o); }; });

  auto* st = app.add_subcommand("stability", "Perturbation bounds for h near the frame g");
  add_pair(st);
  st->add_option("--A", o.A, "Lower frame bound of g");
  st->add_option("--B", o.B, "Upper frame bound of g");
  add_tol(st);
  add_output(st);
  st->callback([&] { run = [&] { return stability(o); }; });

  auto* vf = app.add_subcommand("verify", "Cross-check closed forms against brute-force enumeration");
  add_windows(vf);
  add_seeded(vf);
  add_tol(vf);
  add_output(vf);
  vf->callback([&] { run = [&] { return verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run();
  } catch (const ConsistencyError& e) {
    std::cerr << "error: internal consistency check failed: " << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
