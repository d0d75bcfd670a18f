// Copyright 2026 The kzfp Authors
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

#ifndef KZFP_SRC_PARALLEL_HPP
#define KZFP_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <type_traits>
#include <vector>

namespace kzfp::detail {

/// Splits [0, total) into contiguous chunks, runs fn(begin, end) on each (in
/// parallel when jobs > 1) and returns the results in chunk order, so callers
/// that concatenate get the same answer for every jobs value.
template <class Fn>
auto run_chunked(std::uint64_t total, unsigned jobs, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, std::uint64_t, std::uint64_t>> {
  using Result = std::invoke_result_t<Fn, std::uint64_t, std::uint64_t>;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total));
  std::vector<Result> out;
  if (chunks == 1) {
    out.push_back(fn(0, total));
    return out;
  }
  std::vector<std::future<Result>> pending;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    pending.push_back(std::async(std::launch::async, fn, begin, end));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace kzfp::detail

#endif  // KZFP_SRC_PARALLEL_HPP
