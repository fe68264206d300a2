// Copyright 2026 The ffperm Authors.
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


#ifndef FFPERM_CLI_HPP_
#define FFPERM_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffperm/gf.hpp"

namespace ffperm::cli {

enum class OutputFormat { json, csv, plain };

struct CliConfig {
  std::uint64_t max_cardinality = kDefaultMaxCardinality;  // >= 4
  OutputFormat format = OutputFormat::json;
  unsigned parallelism = 1;  // >= 1
  std::uint64_t seed = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 for a negative verdict whose
// payload carries a witness, 2 for usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffperm::cli

#endif  // FFPERM_CLI_HPP_
