// Copyright 2026 The conflictnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONFLICTNET_FORMAT_H_
#define CONFLICTNET_FORMAT_H_

#include <string>
#include <vector>

namespace conflictnet {

// Shortest decimal text that parses back to exactly `value`.
std::string FormatShortest(double value);

// printf("%.*g") with `digits` significant figures.
std::string FormatSignificant(double value, int digits = 6);

std::vector<std::string> SplitString(const std::string& text, char sep);

// Strict number parse of the whole string; throws kSchemaError on junk.
double ParseNumber(const std::string& text);

}  // namespace conflictnet

#endif  // CONFLICTNET_FORMAT_H_
