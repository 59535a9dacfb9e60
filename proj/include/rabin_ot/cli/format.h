// Copyright 2026 The Rabin OT Toolkit Authors
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

#ifndef RABIN_OT_CLI_FORMAT_H
#define RABIN_OT_CLI_FORMAT_H

#include <span>
#include <string>

namespace rabin_ot::cli {

/// 12 significant digits, fixed-point, trailing zeros removed, "." as the
/// decimal point regardless of locale. -0 prints as "0".
std::string format_number(double x);

/// Comma-joined format_number values.
std::string csv_row(std::span<const double> values);

}  // namespace rabin_ot::cli

#endif
