/*
   Copyright 2026 The ntag Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NTAG_CLI_HPP
#define NTAG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ntag::cli {

/// Exit codes returned by run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_error = 2;

/**
 * Runs one command. args excludes the program name. Data goes to out (or the
 * --out file), diagnostics and progress to err.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ntag::cli

#endif
