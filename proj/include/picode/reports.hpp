// Copyright 2026 The picode Authors
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

// Text serializations. Exact integers are decimal strings and exact
// rationals "p/q" strings; floating values appear only in evaluation columns
// and oracle reports.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "picode/checks.hpp"
#include "picode/code_parameters.hpp"
#include "picode/damping_analytics.hpp"
#include "picode/fidelity_bound.hpp"
#include "picode/oracle_suite.hpp"

namespace picode {

using Json = nlohmann::ordered_json;

class DescriptorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {n, q, N, g, m, legacy, states: [{d, weights, squared_amplitudes}]}
Json code_descriptor(const CodeParameters& params);

/// Rebuilds (and re-validates) the parameters from a descriptor, and checks
/// that every stored derived field matches. Throws DescriptorError or
/// ValidationError.
CodeParameters parse_code_descriptor(const Json& doc);

Json damping_report_json(const DampingReport& report);

/// Header row then one row per grid point. gamma has 6 significant digits,
/// bound and lambda columns 12; the discounted column is present only when
/// requested.
std::string fidelity_csv(const FidelityReport& report, bool discounted);

Json taylor_json(const TaylorReport& report);
Json check_json(const CodeCheckReport& report);
Json oracle_json(const oracle::OracleReport& report);

/// "%.15e"
std::string format_double(double x);

}  // namespace picode
