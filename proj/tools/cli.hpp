// Copyright 2026 The mzteleport Authors
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

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzt/scenarios.hpp"

namespace mzt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text.
class HelpRequested : public UsageError {
  public:
    using UsageError::UsageError;
};

enum class Command { Sweep, Figure, ClassicalMax, Fidelity, LockCurve };
enum class Format { Csv, Tsv, Gnuplot };

struct RunConfig {
    Command command = Command::Sweep;
    std::string figure;  // fig3 | fig4 | fig5
    Layout layout = Layout::OneArm;
    TeleporterKind source = TeleporterKind::TwoMode;
    double parametric_gain = 1.0;
    double gain_min = 0.0;
    double gain_max = 1.5;
    std::size_t steps = 301;
    std::optional<EtaSetting> eta;
    Format format = Format::Csv;
    std::string out_path;  // empty: standard output
    int precision = 12;
};

/// Parses `args` (without the program name). Throws UsageError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Shortest of fixed/scientific with `precision` significant digits,
/// independent of the global locale. Non-finite values print as "nan"/"inf".
std::string format_number(double value, int precision);

/// A named visibility-versus-gain curve of a figure.
struct Curve {
    std::string name;
    SweepTable table;
};

/// The curves making up fig3, fig4 or fig5 over `gains`. Throws UsageError
/// for an unknown name.
std::vector<Curve> figure_curves(const std::string& name, const std::vector<double>& gains);

/// Executes the command, writing its table to `out`. Returns the exit code;
/// errors are reported on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, open the output, run.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzt::cli
