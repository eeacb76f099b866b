// Copyright 2026 The ctxconc Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace ctxconc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitPartial = 2;

/// Entry point of the ctxconc tool. Reports go to files under --out (default:
/// $CTXCONC_OUT_DIR, else the working directory); a short summary goes to `out`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace ctxconc
