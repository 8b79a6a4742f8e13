// Copyright 2026 The tensor-verb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TENSORVERB_DECIMAL_H_
#define TENSORVERB_DECIMAL_H_

#include <optional>
#include <string>
#include <string_view>

namespace tensorverb {

// Shortest decimal that parses back to exactly the same double.
std::string format_shortest(double value);

// Parses the whole of `text` as a double; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);

}  // namespace tensorverb

#endif  // TENSORVERB_DECIMAL_H_
