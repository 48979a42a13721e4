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

#ifndef CONFLICTNET_PARALLEL_H_
#define CONFLICTNET_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace conflictnet {

// kSerial is the reference path every parallel kernel is tested against.
enum class Execution { kSerial, kParallel };

// Runs body(i) for i in [0, n). Under kParallel the iterations are spread
// over OpenMP threads; bodies must only write to index-owned state. If any
// body throws, the exception from the lowest index is rethrown after the
// loop finishes, so failures are deterministic too.
void ParallelFor(std::size_t n, Execution exec,
                 const std::function<void(std::size_t)>& body);

// Worker threads OpenMP would use (1 when built without OpenMP).
int MaxThreads();
void SetThreads(int n);

}  // namespace conflictnet

#endif  // CONFLICTNET_PARALLEL_H_
