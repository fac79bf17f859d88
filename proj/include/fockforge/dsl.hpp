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
//
// Line-oriented experiment files (.fkf). One directive per line, `#` starts
// a comment anywhere, blank lines are ignored:
//
//   modes <m>                          mode count; must be the first directive
//   input <i> ...                      one photon per listed mode (repeats ok)
//   bs <i> <j>                         balanced beam splitter
//   swap <i> <j>                       mode exchange
//   phase <i> <expr | $var>            phase shift, radians
//   postselect one-per-side | none     post-selection rule
//   sweep <var> <from> <to> <steps>    half-open grid binding a phase variable
//
// Phase expressions are plain decimals ("0.5", "1e-3") or rational multiples
// of pi ("pi", "2pi", "-pi", "1/2pi", "-3/4pi"). `$var` in a phase line must
// be bound by a sweep line; sweep grids are from + k*(to-from)/steps for
// k = 0..steps-1. Errors carry 1-based line and byte-column positions of the
// offending token, and parsing collects every error instead of stopping at
// the first.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockforge/circuit.hpp"

namespace fockforge {

struct ParseError {
    int line = 1;        // 1-based
    int column = 1;      // 1-based byte offset of the offending token
    std::string message;
    std::string token;   // offending token text, possibly empty
    friend bool operator==(const ParseError&, const ParseError&) = default;
};

struct SweepRange {
    std::string var;
    double from = 0.0;
    double to = 0.0;
    int steps = 1;
    friend bool operator==(const SweepRange&, const SweepRange&) = default;

    double at(int k) const { return from + static_cast<double>(k) * (to - from) / steps; }
};

// A parsed experiment: the circuit (phase elements referenced by a variable
// hold 0.0 until bound), the input photons, the post-selection rule name
// ("none" when absent) and the sweep grids in file order.
struct ExperimentSpec {
    Circuit circuit;
    std::vector<int> input_photons;  // sorted
    std::string postselect = "none";
    std::vector<SweepRange> sweeps;
    // Variable name -> indices of the PhaseShift elements it binds.
    std::map<std::string, std::vector<size_t>> phase_vars;

    friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;

    // The circuit with every variable replaced by its value. Every variable
    // must be present in `values`.
    Circuit bound(const std::map<std::string, double>& values) const;
};

struct ParseResult {
    std::optional<ExperimentSpec> spec;  // engaged iff errors is empty
    std::vector<ParseError> errors;
    bool ok() const { return errors.empty(); }
};

ParseResult parse_experiment(std::string_view source);

// Canonical text: modes, input, elements, postselect (when not "none"),
// sweeps; literal numbers with 17 significant digits; `\n` line endings.
// parse(render(spec)) reproduces spec exactly.
std::string render(const ExperimentSpec& spec);

// Phase expression sub-language; returns nullopt (with a reason in `error`
// when given) for anything malformed.
std::optional<double> parse_phase_literal(std::string_view text, std::string* error = nullptr);

// Built-in experiment files, also shipped under presets/. Names:
// "classic-hom", "nonlocal-hom".
std::string_view preset_source(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace fockforge
