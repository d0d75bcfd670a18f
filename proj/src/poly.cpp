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

#include "kzfp/poly.hpp"

namespace kzfp {

std::vector<std::string> z_names(unsigned points) {
  std::vector<std::string> names;
  for (unsigned i = 1; i <= points; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

std::vector<std::string> tz_names(unsigned points) {
  std::vector<std::string> names{"t"};
  for (unsigned i = 1; i <= points; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

std::vector<std::string> lambda_names(unsigned g) {
  std::vector<std::string> names;
  for (unsigned i = 3; i <= 2 * g + 1; ++i) names.push_back("l" + std::to_string(i));
  return names;
}

}  // namespace kzfp
