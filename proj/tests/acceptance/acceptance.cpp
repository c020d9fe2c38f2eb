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


// Acceptance gate. Prints one PASS/FAIL line per criterion. With an argument
// N only criterion N runs; the exit status is 0 iff every criterion run
// passed.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

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

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    if (o.pass) o.detail = what;
    o.pass = false;
  }
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << v;
  return ss.str();
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome character_sums() {
  Outcome o;
  const auto start = Clock::now();
  double worst = 0.0;
  for (int M = 1; M <= 8; ++M) {
    for (int k = -2 * M; k <= 2 * M; ++k) {
      Quaternion si;
      Quaternion sj;
      for (int m = 0; m < M; ++m) {
        si += exp_i(2.0 * std::numbers::pi * m * k / M);
        sj += exp_j(2.0 * std::numbers::pi * m * k / M);
      }
      worst = std::max({worst, distance(si, char_sum(M, k)), distance(sj, char_sum(M, k))});
    }
  }
  const double t = seconds_since(start);
  require(o, worst <= 1e-10, "max error " + fmt(worst));
  require(o, t < 1.0, "runtime " + fmt(t) + " s");
  if (o.pass) o.detail = "max error " + fmt(worst) + ", " + fmt(t) + " s";
  return o;
}

Outcome functional_decomposition() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(20240501);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const GaborParams params(uniform_int(rng, 1, 4), uniform_int(rng, 1, 5), uniform_int(rng, 1, 5));
    const WindowFamily w = random_real_family(rng, params, {{0, 0}, {6, 6}});
    const FiniteSignal h = random_signal(rng, IndexBox::square(uniform_int(rng, 0, 8)), uniform(rng, 0.1, 0.8));
    const double closed = decompose_functional(w, h).total();
    const double reference = oracle::frame_functional(w, h);
    worst = std::max(worst, std::abs(closed - reference) / std::max(reference, 1e-300));
  }
  const double t = seconds_since(start);
  require(o, worst <= 1e-9, "max relative error " + fmt(worst));
  require(o, t < 30.0, "runtime " + fmt(t) + " s");
  if (o.pass) o.detail = "100 families, max relative error " + fmt(worst) + ", " + fmt(t) + " s";
  return o;
}

Outcome parseval_constructor() {
  Outcome o;
  Rng rng(7);
  for (const auto& [L, M, N] : {std::array{4, 3, 5}, std::array{9, 2, 5}}) {
    const std::string tag = "(" + std::to_string(L) + "," + std::to_string(M) + "," + std::to_string(N) + ")";
    const WindowFamily w = build_parseval(L, M, N);
    require(o, parseval_check(w).holds, tag + " fails the row criterion");
    for (int t = 0; t < 100; ++t) {
      const FiniteSignal h = random_signal(rng, IndexBox::square(8), uniform(rng, 0.05, 0.5));
      const double e = h.norm2();
      require(o, std::abs(frame_functional(w, h) - e) <= 1e-9 * e, tag + " empirical Parseval identity fails");
    }
    const double norm_sum = parseval_necessary(w).norm_sum;
    require(o, std::abs(norm_sum - static_cast<double>(N * N) / (M * M)) <= 1e-12,
            tag + " norm sum " + fmt(norm_sum));
  }
  if (o.pass) o.detail = "row criterion, 200 random signals and norm sums hold";
  return o;
}

Outcome orthonormal_basis() {
  Outcome o;
  const auto start = Clock::now();
  const WindowFamily w = build_onb(5, 10);
  require(o, w.L() == 4, "L=" + std::to_string(w.L()));
  Rng rng(11);
  std::set<std::tuple<int, int, int, int, int>> seen;
  std::vector<oracle::AtomId> ids;
  while (ids.size() < 20) {
    const oracle::AtomId a{uniform_int(rng, 0, 3), {uniform_int(rng, 0, 4), uniform_int(rng, 0, 4)},
                           {uniform_int(rng, -2, 2), uniform_int(rng, -2, 2)}};
    if (seen.insert({a.l, a.m.k1, a.m.k2, a.n.k1, a.n.k2}).second) ids.push_back(a);
  }
  const auto gram = oracle::gram(w, ids);
  double worst = 0.0;
  for (std::size_t r = 0; r < ids.size(); ++r) {
    for (std::size_t c = 0; c < ids.size(); ++c) worst = std::max(worst, distance(gram[r][c], r == c ? 1.0 : 0.0));
  }
  require(o, worst <= 1e-9, "Gram error " + fmt(worst));
  require(o, onb_check(w).holds, "onb_check false");
  require(o, !onb_existence(4, 10).exists, "onb_existence(4,10) true");
  const double t = seconds_since(start);
  require(o, t < 5.0, "runtime " + fmt(t) + " s");
  if (o.pass) o.detail = "L=4, Gram error " + fmt(worst) + " on 20 atoms, " + fmt(t) + " s";
  return o;
}

Outcome multiplicative_operator() {
  Outcome o;
  Rng rng(23);
  double worst_s = 0.0;
  double worst_inv = 0.0;
  for (int t = 0; t < 20; ++t) {
    const int M = uniform_int(rng, 2, 5);
    const int N = uniform_int(rng, 1, M);
    const int L = uniform_int(rng, 1, 3);
    // The first window fills one period so the diagonal never vanishes.
    std::vector<FiniteSignal> ws{random_signal(rng, {{0, 0}, {N - 1, N - 1}}, 1.0, true)};
    for (int l = 1; l < L; ++l) {
      const Index2 lo{uniform_int(rng, -3, 3), uniform_int(rng, -3, 3)};
      const int side = uniform_int(rng, 0, M - 1);
      ws.push_back(random_signal(rng, {lo, lo + Index2{side, side}}, 0.6, true));
    }
    const WindowFamily w(GaborParams(L, M, N), std::move(ws));
    const NarrowSupportFrame nf = narrow_support_frame(w);
    const FiniteSignal h = random_signal(rng, IndexBox::square(6), 0.4);
    worst_s = std::max(worst_s, max_distance(frame_operator_apply(w, h), nf.apply_S(h)));
    worst_inv = std::max(worst_inv, max_distance(nf.apply_S_inverse(nf.apply_S(h)), h));
  }
  require(o, worst_s <= 1e-9, "S mismatch " + fmt(worst_s));
  require(o, worst_inv <= 1e-9, "inverse mismatch " + fmt(worst_inv));
  if (o.pass) o.detail = "20 families, S error " + fmt(worst_s) + ", inverse error " + fmt(worst_inv);
  return o;
}

Outcome duality() {
  Outcome o;
  Rng rng(31);
  const std::vector<WindowFamily> battery = {
      build_parseval(4, 3, 5),
      build_parseval(9, 2, 5),
      build_onb(5, 10),
      build_parseval(4, 3, 5).scaled(0.5),
      build_onb(2, 4).with_window_scaled(2, 1.5),
      random_real_family(rng, GaborParams(2, 2, 3), {{0, 0}, {3, 3}}),
  };
  int parseval = 0;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const WindowFamily& w = battery[i];
    const bool p = parseval_check(w).holds;
    const bool d = dual_check(w, w).holds;
    parseval += p ? 1 : 0;
    require(o, p == d, "family " + std::to_string(i) + ": dual_check and parseval_check disagree");
    require(o, reconstruction_check(w, w, 10, i).holds == d,
            "family " + std::to_string(i) + ": reconstruction_check disagrees");
  }
  require(o, parseval == 3, std::to_string(parseval) + " Parseval families in the battery");
  int consistent = 0;
  try {
    for (int t = 0; t < 100; ++t) {
      const GaborParams params(uniform_int(rng, 1, 3), uniform_int(rng, 1, 4), uniform_int(rng, 1, 4));
      const WindowFamily g = random_real_family(rng, params, {{0, 0}, {4, 4}});
      const WindowFamily h = random_real_family(rng, params, {{0, 0}, {4, 4}});
      const FiniteSignal f = random_signal(rng, IndexBox::square(4), 0.4);
      const FiniteSignal phi = random_signal(rng, IndexBox::square(4), 0.4);
      (void)mixed_sum(g, h, f, phi);
      ++consistent;
    }
  } catch (const ConsistencyError& e) {
    require(o, false, e.what());
  }
  if (o.pass) o.detail = "6 families (3 Parseval), " + std::to_string(consistent) + " mixed sums consistent";
  return o;
}

Outcome stability() {
  Outcome o;
  const WindowFamily g = build_onb(5, 10);
  for (double eps : {0.05, 0.1, 0.2}) {
    const std::string tag = "eps=" + fmt(eps);
    const WindowFamily h = g.scaled(1.0 - eps);
    const StabilityReport r = stability_verdict(g, h);
    require(o, std::abs(r.R - eps * eps) <= 1e-10, tag + " R=" + fmt(r.R));
    require(o, r.applicable, tag + " not applicable");
    if (!r.applicable) continue;
    require(o, std::abs(*r.new_lower - (1 - eps) * (1 - eps)) <= 1e-10, tag + " lower " + fmt(*r.new_lower));
    require(o, std::abs(*r.new_upper - (1 + eps) * (1 + eps)) <= 1e-10, tag + " upper " + fmt(*r.new_upper));
    const RayleighRange rr = empirical_rayleigh(h, 50, 8, 99);
    const double target = (1 - eps) * (1 - eps);
    require(o, std::abs(rr.min_ratio - target) <= 1e-9 && std::abs(rr.max_ratio - target) <= 1e-9,
            tag + " Rayleigh ratios differ from (1-eps)^2");
    require(o, rr.min_ratio >= *r.new_lower - 1e-9 && rr.max_ratio <= *r.new_upper + 1e-9,
            tag + " Rayleigh ratios outside predicted interval");
  }
  Rng rng(41);
  const WindowFamily d = random_real_family(rng, g.params(), {{0, 0}, {9, 9}}, 0.3);
  const double base = perturbation_R(g, g + d);
  for (double t : {0.5, 2.0}) {
    const double scaled = perturbation_R(g, g + d.scaled(t));
    require(o, std::abs(scaled - t * t * base) <= 1e-10 * std::max(1.0, base), "R not quadratic at t=" + fmt(t));
  }
  if (o.pass) o.detail = "R = eps^2, predicted bounds and Rayleigh ratios hold, R quadratic";
  return o;
}

// q = (1, 1) at k' = (0, 1). With h = delta_0 both sides vanish, so a generic
// signal is used to make the value at k' nonzero.
Outcome non_commutativity() {
  Outcome o;
  const Index2 k_prime{0, 1};
  const int M = 2;
  Rng rng(5);
  const WindowFamily w(GaborParams(1, M, 1), {random_signal(rng, {{0, 0}, {2, 2}})});
  const FiniteSignal h = random_signal(rng, {{-1, -1}, {2, 2}});
  const Quaternion a = frame_operator_apply(w, modulate(h, {1, 1}, M))(k_prime);
  const Quaternion b = modulate(frame_operator_apply(w, h), {1, 1}, M)(k_prime);
  const Quaternion expected = exp_j(2.0 * std::numbers::pi / M);
  std::ostringstream values;
  values << "S(Eh)(k')=" << a << ", E(Sh)(k')=" << b;
  if (!b.is_zero()) values << ", ratio " << right_divide(a, b) << " vs e^{2 pi j/M}=" << expected;
  require(o, !b.is_zero() && !a.is_zero(), "value at k' is zero; " + values.str());
  require(o, distance(a, b) > 1e-9, "values coincide; " + values.str());
  require(o, !b.is_zero() && distance(right_divide(a, b), expected) <= 1e-9, "ratio mismatch; " + values.str());
  if (o.pass) o.detail = values.str();
  return o;
}

Outcome contrapositives() {
  Outcome o;
  Rng rng(53);
  for (int t = 0; t < 10; ++t) {
    const WindowFamily w = random_real_family(rng, GaborParams(1, 1, 2), {{0, 0}, {3, 3}});
    require(o, !parseval_necessary(w).ratio_ok, "ratio unexpectedly satisfied");
    require(o, !parseval_check(w).holds, "parseval_check accepted N^2 > L M^2");
  }
  const WindowFamily gap(GaborParams(2, 3, 2), {FiniteSignal::delta({0, 0}), FiniteSignal::delta({2, 0}, 0.5)});
  for (double A : {1e-300, 1e-15, 1e-9, 1e-3, 1.0, 1e9}) {
    const DiagonalCondition c = necessary_diagonal(gap, A, A + 1e12);
    require(o, !c.holds && c.witness.has_value(), "necessary_diagonal accepted A=" + fmt(A));
  }
  if (o.pass) o.detail = "ratio violations rejected; zero diagonal rejected for A from 1e-300 to 1e9";
  return o;
}

struct Run {
  int code = -1;
  std::string out;
};

Run shell(const std::string& args) {
  Run r;
  const std::string cmd = std::string(QGABOR_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli_round_trip() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qgabor_acceptance_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::vector<std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    const fs::path p = dir / ("p" + std::to_string(pass) + ".json");
    const fs::path b = dir / ("b" + std::to_string(pass) + ".json");
    std::vector<std::string> reports;
    require(o, shell("construct parseval --L 9 --M 2 --N 5 -o " + p.string()).code == 0, "construct parseval failed");
    require(o, shell("construct onb --M 5 --N 10 -o " + b.string()).code == 0, "construct onb failed");
    // Parse and re-serialize: canonical text is a fixed point.
    for (const fs::path& f : {p, b}) {
      const std::string text = slurp(f);
      require(o, canonical_dump(to_json(read_family_file(f))) == text, f.filename().string() + " not canonical");
      reports.push_back(text);
    }
    const std::vector<std::string> commands = {
        "check parseval --seed 5 -w " + p.string(), "check frame -w " + p.string(),
        "check onb --seed 5 -w " + b.string(),      "verify --trials 5 --seed 5 -w " + p.string(),
        "check dual --trials 5 --seed 5 --g " + p.string() + " --h " + p.string(),
    };
    for (const auto& c : commands) {
      const Run r = shell(c);
      require(o, r.code == 0, "'" + c + "' exited " + std::to_string(r.code));
      reports.push_back(r.out);
    }
    if (pass == 0) {
      first = reports;
    } else {
      require(o, reports == first, "reports differ between runs");
    }
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(first.size()) + " byte-identical artifacts across two runs";
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
      {"character sums", character_sums},
      {"F1 + F2 decomposition", functional_decomposition},
      {"Parseval constructor", parseval_constructor},
      {"orthonormal basis M=5 N=10", orthonormal_basis},
      {"multiplicative frame operator", multiplicative_operator},
      {"duality", duality},
      {"stability", stability},
      {"modulation / frame operator non-commutativity", non_commutativity},
      {"necessary-condition contrapositives", contrapositives},
      {"CLI round-trip determinism", cli_round_trip},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  const auto& all = criteria();
  std::vector<std::size_t> selected;
  if (argc > 1) {
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > static_cast<int>(all.size())) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-" << all.size() << "]\n";
      return 2;
    }
    selected.push_back(static_cast<std::size_t>(n - 1));
  } else {
    for (std::size_t i = 0; i < all.size(); ++i) selected.push_back(i);
  }
  bool ok = true;
  for (std::size_t i : selected) {
    Outcome r;
    try {
      r = all[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    ok = ok && r.pass;
    std::cout << "criterion " << (i + 1) << " [" << all[i].first << "]: " << (r.pass ? "PASS" : "FAIL")
              << " - " << r.detail << std::endl;
  }
  return ok ? 0 : 1;
}
