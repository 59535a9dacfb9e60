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

#include "rabin_ot/cli/format.h"

#include <charconv>
#include <cmath>

namespace rabin_ot::cli {

namespace {

constexpr int kSignificant = 12;

std::string to_string(double x, std::chars_format format, int precision) {
    char buf[400];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, format, precision);
    return std::string(buf, end);
}

}  // namespace

std::string format_number(double x) {
    if (x == 0) {
        return "0";
    }
    std::string s = to_string(x, std::chars_format::general, kSignificant);
    if (s.find('e') == std::string::npos || !std::isfinite(x)) {
        return s;
    }
    // general switched to an exponent; redo in fixed notation.
    int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
    s = to_string(x, std::chars_format::fixed, std::max(0, kSignificant - 1 - exponent));
    if (s.find('.') != std::string::npos) {
        s.erase(s.find_last_not_of('0') + 1);
        if (s.back() == '.') {
            s.pop_back();
        }
    }
    return s;
}

std::string csv_row(std::span<const double> values) {
    std::string row;
    for (std::size_t k = 0; k < values.size(); k++) {
        if (k > 0) {
            row += ',';
        }
        row += format_number(values[k]);
    }
    return row;
}

}  // namespace rabin_ot::cli
