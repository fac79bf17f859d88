// Copyright 2026 The fockforge authors
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

#pragma once

#include <iosfwd>

namespace fockforge {

// Entry point of the command line tool, exposed for in-process testing.
// Returns the process exit code: 0 on success, 1 when an experiment file
// fails to parse (one "origin:line:col: error: ..." diagnostic per problem
// on `err`), 2 on usage or domain errors. Results go to `out` unless an
// --out path redirects them.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fockforge
