/*
   Copyright 2026 The probit authors

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

#ifndef PROBIT_CLI_HPP
#define PROBIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace probit {

/* Front end behind the `probit` binary.  args excludes the program name.
   Returns 0 on success, 1 on computation or verification failure, 2 on
   usage errors (unknown flags are rejected before any computation).  All
   numeric output is shortest round-trip decimal; exact integers print in
   full.  Streams are injected so tests can drive it hermetically. */
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

} /* namespace probit */

#endif
