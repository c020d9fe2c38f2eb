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

#ifndef QGABOR_QUATERNION_HPP_
#define QGABOR_QUATERNION_HPP_

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qgabor {

// Real quaternion a0 + a1 i + a2 j + a3 k.
//
// Multiplication follows Hamilton's table: i^2 = j^2 = k^2 = -1,
// ij = -ji = k, jk = -kj = i, ki = -ik = j. It is associative but not
// commutative, so every product in this library is written in the exact
// left-to-right order of the underlying formula.
class Quaternion {
 public:
  constexpr Quaternion() = default;

  // Real scalars embed as a0; they commute with every quaternion.
  constexpr Quaternion(double a0) : a0_(a0) {}  // NOLINT(google-explicit-constructor)

  constexpr Quaternion(double a0, double a1, double a2, double a3)
      : a0_(a0), a1_(a1), a2_(a2), a3_(a3) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr double a0() const { return a0_; }
  constexpr double a1() const { return a1_; }
  constexpr double a2() const { return a2_; }
  constexpr double a3() const { return a3_; }
  constexpr double real() const { return a0_; }

  constexpr Quaternion conj() const { return {a0_, -a1_, -a2_, -a3_}; }

  // |q|^2 = q conj(q) = conj(q) q.
  constexpr double norm2() const {
    return a0_ * a0_ + a1_ * a1_ + a2_ * a2_ + a3_ * a3_;
  }
  double abs() const { return std::sqrt(norm2()); }

  constexpr double imag_norm2() const {
    return a1_ * a1_ + a2_ * a2_ + a3_ * a3_;
  }

  constexpr bool is_zero() const {
    return a0_ == 0.0 && a1_ == 0.0 && a2_ == 0.0 && a3_ == 0.0;
  }

  // conj(q) / |q|^2. Throws std::domain_error for q = 0.
  Quaternion inverse() const {
    const double n2 = norm2();
    if (n2 == 0.0) {
      throw std::domain_error("quaternion inverse: division by zero");
    }
    return {a0_ / n2, -a1_ / n2, -a2_ / n2, -a3_ / n2};
  }

  constexpr Quaternion operator-() const { return {-a0_, -a1_, -a2_, -a3_}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    a0_ += o.a0_;
    a1_ += o.a1_;
    a2_ += o.a2_;
    a3_ += o.a3_;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    a0_ -= o.a0_;
    a1_ -= o.a1_;
    a2_ -= o.a2_;
    a3_ -= o.a3_;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }

  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a0_ * q.a0_ - p.a1_ * q.a1_ - p.a2_ * q.a2_ - p.a3_ * q.a3_,
            p.a0_ * q.a1_ + p.a1_ * q.a0_ + p.a2_ * q.a3_ - p.a3_ * q.a2_,
            p.a0_ * q.a2_ - p.a1_ * q.a3_ + p.a2_ * q.a0_ + p.a3_ * q.a1_,
            p.a0_ * q.a3_ + p.a1_ * q.a2_ - p.a2_ * q.a1_ + p.a3_ * q.a0_};
  }

  friend constexpr Quaternion operator*(const Quaternion& p, double s) {
    return {p.a0_ * s, p.a1_ * s, p.a2_ * s, p.a3_ * s};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& p) { return p * s; }
  friend constexpr Quaternion operator/(const Quaternion& p, double s) {
    return {p.a0_ / s, p.a1_ / s, p.a2_ / s, p.a3_ / s};
  }

  // Exact component equality; numerical comparisons use approx_equal.
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;

 private:
  double a0_ = 0.0;
  double a1_ = 0.0;
  double a2_ = 0.0;
  double a3_ = 0.0;
};

inline constexpr double kDefaultQuaternionTolerance = 1e-9;

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double modulus(const Quaternion& q) { return q.abs(); }
inline Quaternion inverse(const Quaternion& q) { return q.inverse(); }

// cos(theta) + i sin(theta)
inline Quaternion exp_i(double theta) {
  return {std::cos(theta), std::sin(theta), 0.0, 0.0};
}

// cos(theta) + j sin(theta)
inline Quaternion exp_j(double theta) {
  return {std::cos(theta), 0.0, std::sin(theta), 0.0};
}

// The x with b x = a, i.e. b^{-1} a.
inline Quaternion left_divide(const Quaternion& b, const Quaternion& a) {
  return b.inverse() * a;
}

// The x with x b = a, i.e. a b^{-1}.
inline Quaternion right_divide(const Quaternion& a, const Quaternion& b) {
  return a * b.inverse();
}

inline double distance(const Quaternion& p, const Quaternion& q) {
  return (p - q).abs();
}

inline bool approx_equal(const Quaternion& p, const Quaternion& q,
                         double tol = kDefaultQuaternionTolerance) {
  return distance(p, q) <= tol;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.a0() << ", " << q.a1() << ", " << q.a2() << ", " << q.a3()
            << ')';
}

}  // namespace qgabor

#endif  // QGABOR_QUATERNION_HPP_
