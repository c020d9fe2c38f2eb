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

#include "qgabor/signal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgabor {

IndexBox IndexBox::hull(const IndexBox& o) const {
  if (empty()) return o;
  if (o.empty()) return *this;
  return {{std::min(lo.k1, o.lo.k1), std::min(lo.k2, o.lo.k2)},
          {std::max(hi.k1, o.hi.k1), std::max(hi.k2, o.hi.k2)}};
}

std::vector<Index2> IndexBox::points() const {
  std::vector<Index2> out;
  out.reserve(count());
  for (int a = lo.k1; a <= hi.k1; ++a) {
    for (int b = lo.k2; b <= hi.k2; ++b) out.push_back({a, b});
  }
  return out;
}

std::vector<Index2> residues(int K) {
  if (K <= 0) throw std::invalid_argument("residues: K must be positive");
  return IndexBox{{0, 0}, {K - 1, K - 1}}.points();
}

namespace {

bool entry_less(const SignalEntry& a, const SignalEntry& b) { return a.k < b.k; }

}  // namespace

FiniteSignal::FiniteSignal(std::vector<SignalEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(), entry_less);
  entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    Index2 k = entries[i].k;
    Quaternion sum;
    for (; i < entries.size() && entries[i].k == k; ++i) sum += entries[i].q;
    if (sum.abs() >= kDropTolerance) entries_.push_back({k, sum});
  }
}

FiniteSignal FiniteSignal::delta(Index2 k, const Quaternion& value) {
  return FiniteSignal({{k, value}});
}

FiniteSignal FiniteSignal::indicator(const IndexBox& box, const Quaternion& value) {
  std::vector<SignalEntry> e;
  e.reserve(box.count());
  for (Index2 k : box.points()) e.push_back({k, value});
  return FiniteSignal(std::move(e));
}

Quaternion FiniteSignal::operator()(Index2 k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), SignalEntry{k, {}}, entry_less);
  if (it != entries_.end() && it->k == k) return it->q;
  return {};
}

IndexBox FiniteSignal::bounding_box() const {
  if (entries_.empty()) return {{0, 0}, {-1, -1}};
  IndexBox box{entries_.front().k, entries_.front().k};
  for (const auto& e : entries_) {
    box.lo.k1 = std::min(box.lo.k1, e.k.k1);
    box.lo.k2 = std::min(box.lo.k2, e.k.k2);
    box.hi.k1 = std::max(box.hi.k1, e.k.k1);
    box.hi.k2 = std::max(box.hi.k2, e.k.k2);
  }
  return box;
}

double FiniteSignal::norm2() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.q.norm2();
  return s;
}

double FiniteSignal::norm() const { return std::sqrt(norm2()); }

FiniteSignal FiniteSignal::scaled(double s) const {
  std::vector<SignalEntry> e(entries_.begin(), entries_.end());
  for (auto& x : e) x.q = x.q * s;
  return FiniteSignal(std::move(e));
}

FiniteSignal FiniteSignal::right_multiplied(const Quaternion& q) const {
  std::vector<SignalEntry> e(entries_.begin(), entries_.end());
  for (auto& x : e) x.q = x.q * q;
  return FiniteSignal(std::move(e));
}

FiniteSignal FiniteSignal::left_multiplied(const Quaternion& q) const {
  std::vector<SignalEntry> e(entries_.begin(), entries_.end());
  for (auto& x : e) x.q = q * x.q;
  return FiniteSignal(std::move(e));
}

FiniteSignal operator+(const FiniteSignal& a, const FiniteSignal& b) {
  std::vector<SignalEntry> e(a.entries_.begin(), a.entries_.end());
  e.insert(e.end(), b.entries_.begin(), b.entries_.end());
  return FiniteSignal(std::move(e));
}

FiniteSignal operator-(const FiniteSignal& a, const FiniteSignal& b) {
  std::vector<SignalEntry> e(a.entries_.begin(), a.entries_.end());
  for (const auto& x : b.entries_) e.push_back({x.k, -x.q});
  return FiniteSignal(std::move(e));
}

bool operator==(const FiniteSignal& a, const FiniteSignal& b) {
  return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                    [](const SignalEntry& x, const SignalEntry& y) {
                      return x.k == y.k && x.q == y.q;
                    });
}

Quaternion inner(const FiniteSignal& f, const FiniteSignal& g) {
  // Walk the two sorted supports in step.
  Quaternion s;
  auto fe = f.entries();
  auto ge = g.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fe.size() && j < ge.size()) {
    if (fe[i].k < ge[j].k) {
      ++i;
    } else if (ge[j].k < fe[i].k) {
      ++j;
    } else {
      s += fe[i].q.conj() * ge[j].q;
      ++i;
      ++j;
    }
  }
  return s;
}

int supp_width(const FiniteSignal& g) {
  if (g.empty()) throw std::invalid_argument("supp_width: zero signal has no support");
  std::map<int, std::pair<int, int>> rows;  // k2 -> [min k1, max k1]
  std::map<int, std::pair<int, int>> cols;  // k1 -> [min k2, max k2]
  for (const auto& e : g.entries()) {
    auto [r, r_new] = rows.try_emplace(e.k.k2, e.k.k1, e.k.k1);
    if (!r_new) {
      r->second.first = std::min(r->second.first, e.k.k1);
      r->second.second = std::max(r->second.second, e.k.k1);
    }
    auto [c, c_new] = cols.try_emplace(e.k.k1, e.k.k2, e.k.k2);
    if (!c_new) {
      c->second.first = std::min(c->second.first, e.k.k2);
      c->second.second = std::max(c->second.second, e.k.k2);
    }
  }
  int width = 0;
  for (const auto& [_, span] : rows) width = std::max(width, span.second - span.first);
  for (const auto& [_, span] : cols) width = std::max(width, span.second - span.first);
  return width;
}

int support_extent(const FiniteSignal& g) {
  if (g.empty()) throw std::invalid_argument("support_extent: zero signal has no support");
  return g.bounding_box().extent();
}

bool is_real_valued(const FiniteSignal& g, double tol) {
  return std::all_of(g.entries().begin(), g.entries().end(), [tol](const SignalEntry& e) {
    return std::abs(e.q.a1()) <= tol && std::abs(e.q.a2()) <= tol && std::abs(e.q.a3()) <= tol;
  });
}

double max_distance(const FiniteSignal& a, const FiniteSignal& b) {
  double d = 0.0;
  for (const auto& e : (a - b).entries()) d = std::max(d, e.q.abs());
  return d;
}

GaborParams::GaborParams(int L, int M, int N) : L_(L), M_(M), N_(N) {
  if (L <= 0 || M <= 0 || N <= 0) {
    throw std::invalid_argument("GaborParams: L, M, N must be positive (got L=" +
                                std::to_string(L) + ", M=" + std::to_string(M) +
                                ", N=" + std::to_string(N) + ")");
  }
}

WindowFamily::WindowFamily(GaborParams params, std::vector<FiniteSignal> windows)
    : params_(params), windows_(std::move(windows)) {
  if (static_cast<int>(windows_.size()) != params_.L()) {
    throw std::invalid_argument("WindowFamily: expected L=" + std::to_string(params_.L()) +
                                " windows, got " + std::to_string(windows_.size()));
  }
  is_real_ = std::all_of(windows_.begin(), windows_.end(),
                         [](const FiniteSignal& g) { return is_real_valued(g); });
}

WindowFamily WindowFamily::scaled(double s) const {
  std::vector<FiniteSignal> w;
  w.reserve(windows_.size());
  for (const auto& g : windows_) w.push_back(g.scaled(s));
  return {params_, std::move(w)};
}

WindowFamily WindowFamily::with_window_scaled(int l, double s) const {
  std::vector<FiniteSignal> w(windows_.begin(), windows_.end());
  w.at(static_cast<std::size_t>(l)) = w.at(static_cast<std::size_t>(l)).scaled(s);
  return {params_, std::move(w)};
}

WindowFamily operator-(const WindowFamily& g, const WindowFamily& h) {
  require_same_params(g, h, "window difference");
  std::vector<FiniteSignal> w;
  w.reserve(g.windows_.size());
  for (std::size_t l = 0; l < g.windows_.size(); ++l) w.push_back(g.windows_[l] - h.windows_[l]);
  return {g.params_, std::move(w)};
}

WindowFamily operator+(const WindowFamily& g, const WindowFamily& h) {
  require_same_params(g, h, "window sum");
  std::vector<FiniteSignal> w;
  w.reserve(g.windows_.size());
  for (std::size_t l = 0; l < g.windows_.size(); ++l) w.push_back(g.windows_[l] + h.windows_[l]);
  return {g.params_, std::move(w)};
}

void require_same_params(const WindowFamily& g, const WindowFamily& h, const char* what) {
  if (!(g.params() == h.params())) {
    throw std::invalid_argument(std::string(what) + ": window families have different (L, M, N)");
  }
}

void require_real(const WindowFamily& w, const char* what) {
  if (!w.is_real()) {
    throw std::invalid_argument(std::string(what) + ": requires real-valued windows");
  }
}

}  // namespace qgabor
