// Copyright 2026 The ggt Authors
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

#ifndef GGT_PARALLEL_HPP_
#define GGT_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace ggt {

// Worker count: GGT_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
std::size_t worker_count();

// Splits [0, n) into contiguous chunks and runs body(chunk, begin, end) on up to
// worker_count() threads. Chunk boundaries depend only on n, so callers that
// merge per-chunk results in chunk order get scheduling-independent output.
std::size_t num_chunks(std::size_t n);
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace ggt

#endif  // GGT_PARALLEL_HPP_
