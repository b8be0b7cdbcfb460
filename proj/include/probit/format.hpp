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

#ifndef PROBIT_FORMAT_HPP
#define PROBIT_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace probit {

/* Shortest decimal string that round-trips to the same double. */
inline std::string format_shortest(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

} /* namespace probit */

#endif
