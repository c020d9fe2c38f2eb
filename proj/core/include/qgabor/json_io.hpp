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


#ifndef QGABOR_JSON_IO_HPP_
#define QGABOR_JSON_IO_HPP_

// JSON interchange.
//
//   quaternion  [a0, a1, a2, a3]
//   signal      {"entries": [{"k": [k1, k2], "q": [a0, a1, a2, a3]}, ...]}
//   family      {"L": int, "M": int, "N": int, "windows": [signal, ...]}
//
// Object keys are emitted sorted, so dump() of equal values is
// byte-identical.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgabor/constructors.hpp"
#include "qgabor/duality.hpp"
#include "qgabor/frame_analysis.hpp"
#include "qgabor/gabor_ops.hpp"
#include "qgabor/matrix_fn.hpp"
#include "qgabor/stability.hpp"

namespace qgabor {

using Json = nlohmann::json;

// Malformed or invalid input; the message carries a location such as
// "w.json:3:14" or a field path such as "windows[2].entries[0].q".
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Quaternion& q);
Json to_json(Index2 k);
Json to_json(const FiniteSignal& f);
Json to_json(const WindowFamily& w);

// `path` prefixes error messages.
Quaternion quaternion_from_json(const Json& j, const std::string& path = "q");
Index2 index_from_json(const Json& j, const std::string& path = "k");
FiniteSignal signal_from_json(const Json& j, const std::string& path = "");
WindowFamily family_from_json(const Json& j, const std::string& path = "");

// Parses text, reporting syntax errors as source:line:column.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& file);
WindowFamily read_family_file(const std::filesystem::path& file);
FiniteSignal read_signal_file(const std::filesystem::path& file);

// Two-space indented, sorted keys, trailing newline.
std::string canonical_dump(const Json& j);
void write_text_file(const std::filesystem::path& file, const std::string& text);

Json to_json(const FrameReport& r);
Json to_json(const DiagonalCondition& d);
Json to_json(const ParsevalNecessary& p);
Json to_json(const ParsevalCheck& p);
Json to_json(const OperatorInequalityBounds& b);
Json to_json(const RowViolation& v);
Json to_json(const OnbCheck& c);
Json to_json(const DualCheck& c);
Json to_json(const ReconstructionCheck& c);
Json to_json(const StabilityReport& r);
Json to_json(const AggregateMatrix& m);
Json to_json(const std::vector<AnalysisCoefficient>& coefficients);

}  // namespace qgabor

#endif  // QGABOR_JSON_IO_HPP_
