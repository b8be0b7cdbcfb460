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

#ifndef PROBIT_SELFCHECK_HPP
#define PROBIT_SELFCHECK_HPP

#include <string>
#include <vector>

namespace probit {

struct CheckResult {
    std::string name;     /* stable identifier, module/check */
    bool passed = false;
    double measured = 0.0; /* worst value observed */
    double bound = 0.0;    /* limit it was held against */
    std::string note;      /* context, e.g. grid or failure analysis */
};

/* Full invariant suite across every module.  data_dir must contain the
   golden tables c_table.txt and p_table.txt for the byte-exact checks.
   Two checks fail by design of the underlying claims; their notes explain
   the measured floor (see also the README). */
std::vector<CheckResult> run_selfcheck(const std::string& data_dir);

} /* namespace probit */

#endif
