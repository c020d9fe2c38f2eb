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


#include "qgabor/json_io.hpp"

#include <climits>
#include <cmath>
#include <fstream>
#include <sstream>

namespace qgabor {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("<root>") : path) + ": " + what);
}

std::string join(const std::string& path, const std::string& field) {
  return path.empty() ? field : path + "." + field;
}

std::string at_index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

int int_field(const Json& obj, const std::string& key, const std::string& path) {
  const std::string p = join(path, key);
  const auto it = obj.find(key);
  if (it == obj.end()) fail(p, "missing field");
  if (!it->is_number_integer()) fail(p, "expected an integer");
  const auto v = it->get<long long>();
  if (v < INT_MIN || v > INT_MAX) fail(p, "integer out of range");
  return static_cast<int>(v);
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json diagnostics_json(const std::vector<KDiagnostic>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back({{"k", to_json(d.k)}, {"lower", d.lower}, {"upper", d.upper}});
  return out;
}

}  // namespace

Json to_json(const Quaternion& q) { return Json::array({q.a0(), q.a1(), q.a2(), q.a3()}); }

Json to_json(Index2 k) { return Json::array({k.k1, k.k2}); }

Json to_json(const FiniteSignal& f) {
  Json entries = Json::array();
  for (const auto& e : f.entries()) entries.push_back({{"k", to_json(e.k)}, {"q", to_json(e.q)}});
  return {{"entries", std::move(entries)}};
}

Json to_json(const WindowFamily& w) {
  Json windows = Json::array();
  for (const auto& g : w.windows()) windows.push_back(to_json(g));
  return {{"L", w.L()}, {"M", w.M()}, {"N", w.N()}, {"windows", std::move(windows)}};
}

Quaternion quaternion_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_array() || j.size() != 4) fail(path, "expected an array of 4 numbers");
  double a[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number()) fail(at_index(path, i), "expected a number");
    a[i] = j[i].get<double>();
    if (!std::isfinite(a[i])) fail(at_index(path, i), "expected a finite number");
  }
  return {a[0], a[1], a[2], a[3]};
}

Index2 index_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected an array of 2 integers");
  int k[2];
  for (std::size_t i = 0; i < 2; ++i) {
    if (!j[i].is_number_integer()) fail(at_index(path, i), "expected an integer");
    const auto v = j[i].get<long long>();
    if (v < -(1LL << 28) || v > (1LL << 28)) fail(at_index(path, i), "index out of range");
    k[i] = static_cast<int>(v);
  }
  return {k[0], k[1]};
}

FiniteSignal signal_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with an \"entries\" array");
  const auto it = j.find("entries");
  const std::string ep = join(path, "entries");
  if (it == j.end()) fail(ep, "missing field");
  if (!it->is_array()) fail(ep, "expected an array");
  std::vector<SignalEntry> entries;
  entries.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) {
    const Json& e = (*it)[i];
    const std::string p = at_index(ep, i);
    if (!e.is_object()) fail(p, "expected an object with \"k\" and \"q\"");
    if (!e.contains("k")) fail(join(p, "k"), "missing field");
    if (!e.contains("q")) fail(join(p, "q"), "missing field");
    entries.push_back({index_from_json(e["k"], join(p, "k")), quaternion_from_json(e["q"], join(p, "q"))});
  }
  return FiniteSignal(std::move(entries));
}

WindowFamily family_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with L, M, N and windows");
  const int L = int_field(j, "L", path);
  const int M = int_field(j, "M", path);
  const int N = int_field(j, "N", path);
  const auto it = j.find("windows");
  const std::string wp = join(path, "windows");
  if (it == j.end()) fail(wp, "missing field");
  if (!it->is_array()) fail(wp, "expected an array");
  if (static_cast<long long>(it->size()) != L) {
    fail(wp, "expected L=" + std::to_string(L) + " windows, found " + std::to_string(it->size()));
  }
  std::vector<FiniteSignal> windows;
  windows.reserve(it->size());
  for (std::size_t i = 0; i < it->size(); ++i) windows.push_back(signal_from_json((*it)[i], at_index(wp, i)));
  try {
    return {GaborParams(L, M, N), std::move(windows)};
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": malformed JSON: " + what);
  }
}

Json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError(file.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), file.string());
}

WindowFamily read_family_file(const std::filesystem::path& file) {
  const Json j = read_json_file(file);
  try {
    return family_from_json(j);
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

FiniteSignal read_signal_file(const std::filesystem::path& file) {
  const Json j = read_json_file(file);
  try {
    return signal_from_json(j);
  } catch (const InputError& e) {
    throw InputError(file.string() + ": " + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(file.string() + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(file.string() + ": write failed");
}

Json to_json(const FrameReport& r) {
  return {{"verdict", std::string(to_string(r.verdict))},
          {"method", std::string(to_string(r.method))},
          {"lower_bound", optional_number(r.lower_bound)},
          {"upper_bound", optional_number(r.upper_bound)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"note", r.note},
          {"diagnostics", diagnostics_json(r.diagnostics)}};
}

Json to_json(const DiagonalCondition& d) {
  Json values = Json::array();
  for (const auto& v : d.values) values.push_back({{"k", to_json(v.k)}, {"diagonal", v.lower}});
  return {{"holds", d.holds},
          {"witness", d.witness ? to_json(*d.witness) : Json(nullptr)},
          {"values", std::move(values)}};
}

Json to_json(const ParsevalNecessary& p) {
  return {{"ratio_ok", p.ratio_ok},
          {"norm_sum", p.norm_sum},
          {"expected_norm_sum", p.expected_norm_sum},
          {"norm_sum_ok", p.norm_sum_ok}};
}

Json to_json(const ParsevalCheck& p) {
  Json out{{"holds", p.holds}};
  if (!p.holds) {
    out["violation"] = {{"k", p.violation_k ? to_json(*p.violation_k) : Json(nullptr)},
                        {"p", p.violation_p ? to_json(*p.violation_p) : Json(nullptr)},
                        {"value", p.violation_value},
                        {"expected", p.expected_value}};
  }
  return out;
}

Json to_json(const OperatorInequalityBounds& b) {
  return {{"lower", b.lower},
          {"upper", b.upper},
          {"converged", b.converged},
          {"radius", b.radius},
          {"per_k", diagnostics_json(b.per_k)}};
}

Json to_json(const RowViolation& v) {
  return {{"k", to_json(v.k)}, {"p", to_json(v.p)}, {"value", to_json(v.value)}, {"expected", v.expected}};
}

Json to_json(const OnbCheck& c) {
  return {{"holds", c.holds},
          {"parseval", c.parseval},
          {"parseval_method", c.parseval_method},
          {"ratio_ok", c.ratio_ok},
          {"orthonormal_sample", c.orthonormal_sample},
          {"sampled_atoms", c.sampled_atoms},
          {"max_gram_error", c.max_gram_error}};
}

Json to_json(const DualCheck& c) {
  return {{"holds", c.holds}, {"violation", c.violation ? to_json(*c.violation) : Json(nullptr)}};
}

Json to_json(const ReconstructionCheck& c) {
  Json out{{"holds", c.holds}, {"trials", c.trials}};
  if (c.failed_trial) {
    out["failed_trial"] = *c.failed_trial;
    out["value"] = to_json(c.value);
    out["expected"] = to_json(c.expected);
  }
  return out;
}

Json to_json(const StabilityReport& r) {
  return {{"R", r.R},
          {"A", r.A},
          {"B", r.B},
          {"applicable", r.applicable},
          {"new_lower", optional_number(r.new_lower)},
          {"new_upper", optional_number(r.new_upper)},
          {"bounds_source", r.bounds_source}};
}

Json to_json(const AggregateMatrix& m) {
  Json index = Json::array();
  for (Index2 p : m.index_window()) index.push_back(to_json(p));
  Json entries = Json::array();
  for (const auto& [key, v] : m.entries()) {
    entries.push_back({{"p", to_json(key.first)}, {"pp", to_json(key.second)}, {"value", to_json(v)}});
  }
  return {{"k", to_json(m.k())},
          {"radius", m.radius()},
          {"index", std::move(index)},
          {"entries", std::move(entries)}};
}

Json to_json(const std::vector<AnalysisCoefficient>& coefficients) {
  Json rows = Json::array();
  for (const auto& c : coefficients) {
    rows.push_back({{"l", c.index.l}, {"n", to_json(c.index.n)}, {"m", to_json(c.index.m)}, {"value", to_json(c.value)}});
  }
  return rows;
}

}  // namespace qgabor
