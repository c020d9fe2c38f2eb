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

#ifndef QGABOR_SIGNAL_HPP_
#define QGABOR_SIGNAL_HPP_

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "qgabor/quaternion.hpp"

namespace qgabor {

// A point of the integer lattice Z^2. Ordering is lexicographic (k1, then k2).
struct Index2 {
  int k1 = 0;
  int k2 = 0;

  friend constexpr auto operator<=>(const Index2&, const Index2&) = default;

  friend constexpr Index2 operator+(Index2 a, Index2 b) { return {a.k1 + b.k1, a.k2 + b.k2}; }
  friend constexpr Index2 operator-(Index2 a, Index2 b) { return {a.k1 - b.k1, a.k2 - b.k2}; }
  friend constexpr Index2 operator-(Index2 a) { return {-a.k1, -a.k2}; }
  friend constexpr Index2 operator*(Index2 a, int s) { return {a.k1 * s, a.k2 * s}; }
  friend constexpr Index2 operator*(int s, Index2 a) { return a * s; }
};

inline std::ostream& operator<<(std::ostream& os, Index2 k) {
  return os << '(' << k.k1 << ", " << k.k2 << ')';
}

// Mathematical floor division / modulus (result of floor_mod is in [0, d)).
constexpr int floor_div(int a, int d) {
  const int q = a / d;
  return (a % d != 0 && ((a < 0) != (d < 0))) ? q - 1 : q;
}
constexpr int floor_mod(int a, int d) { return a - d * floor_div(a, d); }
constexpr int ceil_div(int a, int d) { return -floor_div(-a, d); }

constexpr Index2 floor_mod(Index2 a, int d) { return {floor_mod(a.k1, d), floor_mod(a.k2, d)}; }

// Closed integer rectangle [lo.k1, hi.k1] x [lo.k2, hi.k2]. Empty when
// lo exceeds hi in either coordinate.
struct IndexBox {
  Index2 lo;
  Index2 hi;

  constexpr bool empty() const { return lo.k1 > hi.k1 || lo.k2 > hi.k2; }
  constexpr bool contains(Index2 k) const {
    return k.k1 >= lo.k1 && k.k1 <= hi.k1 && k.k2 >= lo.k2 && k.k2 <= hi.k2;
  }
  constexpr std::size_t count() const {
    return empty() ? 0
                   : static_cast<std::size_t>(hi.k1 - lo.k1 + 1) *
                         static_cast<std::size_t>(hi.k2 - lo.k2 + 1);
  }
  // Largest coordinate extent hi - lo.
  constexpr int extent() const {
    const int e1 = hi.k1 - lo.k1;
    const int e2 = hi.k2 - lo.k2;
    return e1 > e2 ? e1 : e2;
  }

  // Smallest box containing both; an empty operand is ignored.
  IndexBox hull(const IndexBox& o) const;

  // Points in lexicographic order.
  std::vector<Index2> points() const;

  static constexpr IndexBox square(int radius) { return {{-radius, -radius}, {radius, radius}}; }

  friend constexpr bool operator==(const IndexBox&, const IndexBox&) = default;
};

// All points of N_K x N_K = {0..K-1}^2 in lexicographic order.
std::vector<Index2> residues(int K);

struct SignalEntry {
  Index2 k;
  Quaternion q;
};

// Finitely supported map Z^2 -> H.
//
// Entries are kept sorted lexicographically by index and never store a value
// of modulus below kDropTolerance, so the support and its width are well
// defined. Instances are immutable after construction.
class FiniteSignal {
 public:
  static constexpr double kDropTolerance = 1e-12;

  FiniteSignal() = default;

  // Duplicate indices are summed before tiny values are dropped.
  explicit FiniteSignal(std::vector<SignalEntry> entries);

  static FiniteSignal delta(Index2 k, const Quaternion& value = 1.0);
  // value * indicator of the box.
  static FiniteSignal indicator(const IndexBox& box, const Quaternion& value = 1.0);

  std::span<const SignalEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // f(k); zero outside the support.
  Quaternion operator()(Index2 k) const;
  Quaternion at(Index2 k) const { return (*this)(k); }

  // Bounding box of the support. Empty box for the zero signal.
  IndexBox bounding_box() const;

  double norm2() const;
  double norm() const;

  FiniteSignal scaled(double s) const;
  // k -> f(k) q
  FiniteSignal right_multiplied(const Quaternion& q) const;
  // k -> q f(k)
  FiniteSignal left_multiplied(const Quaternion& q) const;

  friend FiniteSignal operator+(const FiniteSignal& a, const FiniteSignal& b);
  friend FiniteSignal operator-(const FiniteSignal& a, const FiniteSignal& b);

  friend bool operator==(const FiniteSignal& a, const FiniteSignal& b);

 private:
  std::vector<SignalEntry> entries_;
};

// <f, g> = sum_k conj(f(k)) g(k). Right-linear in g, conjugate-linear on the
// left in f.
Quaternion inner(const FiniteSignal& f, const FiniteSignal& g);

// Largest max-min index span of a single row g(., k2) or column g(k1, .).
// Throws std::invalid_argument for the zero signal.
int supp_width(const FiniteSignal& g);

// Extent of the bounding box of the support. Unlike supp_width it also sees
// offsets that change both coordinates at once.
int support_extent(const FiniteSignal& g);

inline constexpr double kRealTolerance = 1e-12;

// True iff every stored value has |imaginary part| <= tol.
bool is_real_valued(const FiniteSignal& g, double tol = kRealTolerance);

// Sup distance between two signals, over the union of their supports.
double max_distance(const FiniteSignal& a, const FiniteSignal& b);

// Positive integers (L, M, N): window count, modulation order, translation step.
class GaborParams {
 public:
  GaborParams(int L, int M, int N);

  int L() const { return L_; }
  int M() const { return M_; }
  int N() const { return N_; }

  friend bool operator==(const GaborParams&, const GaborParams&) = default;

 private:
  int L_;
  int M_;
  int N_;
};

// The generating data {g_l} of a Gabor system G(g, L, M, N).
class WindowFamily {
 public:
  WindowFamily(GaborParams params, std::vector<FiniteSignal> windows);

  const GaborParams& params() const { return params_; }
  int L() const { return params_.L(); }
  int M() const { return params_.M(); }
  int N() const { return params_.N(); }

  std::span<const FiniteSignal> windows() const { return windows_; }
  const FiniteSignal& window(int l) const { return windows_.at(static_cast<std::size_t>(l)); }

  // True iff every window value is a real scalar within kRealTolerance.
  bool is_real() const { return is_real_; }

  WindowFamily scaled(double s) const;
  // Same family with one window multiplied by s.
  WindowFamily with_window_scaled(int l, double s) const;

  // Window-wise difference {g_l - h_l}; parameters must match.
  friend WindowFamily operator-(const WindowFamily& g, const WindowFamily& h);
  friend WindowFamily operator+(const WindowFamily& g, const WindowFamily& h);

 private:
  GaborParams params_;
  std::vector<FiniteSignal> windows_;
  bool is_real_ = true;
};

// Throws std::invalid_argument unless both families share (L, M, N).
void require_same_params(const WindowFamily& g, const WindowFamily& h, const char* what);

// Throws std::invalid_argument unless every window is real valued.
void require_real(const WindowFamily& w, const char* what);

}  // namespace qgabor

#endif  // QGABOR_SIGNAL_HPP_
