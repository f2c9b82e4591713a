// Copyright 2026 The pqrng Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pqrng::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Environment variable that overrides the default seed (42).
inline constexpr const char* kSeedEnvVar = "PQRNG_SEED";

std::uint64_t default_seed();

/// Runs one command line. `args` excludes the program name. Subcommands:
/// simulate, genbits, certify, test, reproduce-paper, replay.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqrng::cli
