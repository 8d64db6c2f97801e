/*
 * Copyright 2026 the coxcones authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxcones {

/// Runs the command line given as argv (without the program name).  Exit
/// codes: 0 success, 1 computation error (budget exceeded, indeterminacy,
/// non-stabilization, bad geometry), 2 usage error.  In JSON mode
/// computation errors emit a machine-readable error object on stdout.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxcones
