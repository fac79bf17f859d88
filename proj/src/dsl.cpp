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

#include "fockforge/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace fockforge {

namespace {

// Hard caps so that hostile input cannot request astronomically sized bases.
constexpr int kMaxModes = 256;
constexpr int kMaxPhotons = 16;
constexpr int kMaxSweepSteps = 1 << 20;

struct Token {
    std::string text;
    int line = 1;
    int column = 1;
};

std::vector<std::vector<Token>> tokenize(std::string_view source) {
    std::vector<std::vector<Token>> lines;
    size_t pos = 0;
    int line_no = 1;
    while (pos <= source.size()) {
        size_t eol = source.find('\n', pos);
        std::string_view line = source.substr(pos, eol == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : eol - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::vector<Token> toks;
        size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
                ++i;
            }
            toks.push_back({std::string(line.substr(start, i - start)), line_no,
                            static_cast<int>(start) + 1});
        }
        if (!toks.empty()) {
            lines.push_back(std::move(toks));
        }
        if (eol == std::string_view::npos) {
            break;
        }
        pos = eol + 1;
        ++line_no;
    }
    return lines;
}

std::optional<long long> parse_int(std::string_view text) {
    long long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (!text.empty() && text.front() == '-') {
        begin += 1;
        auto [p, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || p != end || begin == end) {
            return std::nullopt;
        }
        return -value;
    }
    auto [p, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || p != end || begin == end) {
        return std::nullopt;
    }
    return value;
}

bool valid_var_name(std::string_view name) {
    if (name.empty() || (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Parser {
    std::vector<ParseError> errors;
    ExperimentSpec spec;
    bool modes_known = false;
    bool postselect_seen = false;
    int total_photons = 0;
    // First use position of each phase variable, for unbound-variable reports.
    std::map<std::string, Token> var_first_use;
    std::map<std::string, Token> sweep_tokens;

    void error(const Token& at, std::string message) {
        errors.push_back({at.line, at.column, std::move(message), at.text});
    }

    // -1 when malformed (already reported).
    int mode_index(const Token& tok) {
        auto v = parse_int(tok.text);
        if (!v || *v < 0) {
            error(tok, "expected a non-negative mode index");
            return -1;
        }
        if (modes_known && *v >= spec.circuit.modes) {
            error(tok, "mode index " + tok.text + " is out of range for modes " +
                           std::to_string(spec.circuit.modes));
            return -1;
        }
        return static_cast<int>(*v);
    }

    bool check_arity(const std::vector<Token>& toks, size_t args) {
        if (toks.size() - 1 < args) {
            error(toks[0], "expected " + std::to_string(args) + " argument(s) after '" +
                               toks[0].text + "'");
            return false;
        }
        if (toks.size() - 1 > args) {
            error(toks[args + 1], "unexpected argument");
            return false;
        }
        return true;
    }

    std::optional<std::pair<int, int>> mode_pair(const std::vector<Token>& toks,
                                                 const char* what) {
        if (!check_arity(toks, 2)) {
            return std::nullopt;
        }
        int a = mode_index(toks[1]);
        int b = mode_index(toks[2]);
        if (a < 0 || b < 0) {
            return std::nullopt;
        }
        if (a == b) {
            error(toks[2], std::string(what) + " requires two distinct modes");
            return std::nullopt;
        }
        return std::pair{a, b};
    }

    void directive_modes(const std::vector<Token>& toks, bool first) {
        if (!first) {
            error(toks[0], modes_known ? "duplicate modes directive"
                                       : "modes must be the first directive");
            if (modes_known) {
                return;
            }
        }
        if (!check_arity(toks, 1)) {
            return;
        }
        auto v = parse_int(toks[1].text);
        if (!v || *v < 1) {
            error(toks[1], "mode count must be a positive integer");
            return;
        }
        if (*v > kMaxModes) {
            error(toks[1], "mode count exceeds the supported maximum of " +
                               std::to_string(kMaxModes));
            return;
        }
        spec.circuit.modes = static_cast<int>(*v);
        modes_known = true;
    }

    void directive_input(const std::vector<Token>& toks) {
        if (toks.size() < 2) {
            error(toks[0], "expected at least 1 argument after 'input'");
            return;
        }
        for (size_t i = 1; i < toks.size(); ++i) {
            int m = mode_index(toks[i]);
            if (m < 0) {
                continue;
            }
            if (++total_photons > kMaxPhotons) {
                error(toks[i], "input photon count exceeds the supported maximum of " +
                                   std::to_string(kMaxPhotons));
                return;
            }
            spec.input_photons.push_back(m);
        }
    }

    void directive_phase(const std::vector<Token>& toks) {
        if (!check_arity(toks, 2)) {
            return;
        }
        int m = mode_index(toks[1]);
        if (m < 0) {
            return;
        }
        const Token& arg = toks[2];
        if (!arg.text.empty() && arg.text[0] == '$') {
            std::string name = arg.text.substr(1);
            if (!valid_var_name(name)) {
                error(arg, "invalid phase variable name");
                return;
            }
            spec.phase_vars[name].push_back(spec.circuit.elements.size());
            var_first_use.try_emplace(name, arg);
            spec.circuit.elements.push_back(PhaseShift{m, 0.0});
            return;
        }
        std::string why;
        auto value = parse_phase_literal(arg.text, &why);
        if (!value) {
            error(arg, why.empty() ? "invalid phase expression" : why);
            return;
        }
        spec.circuit.elements.push_back(PhaseShift{m, *value});
    }

    void directive_postselect(const std::vector<Token>& toks) {
        if (!check_arity(toks, 1)) {
            return;
        }
        if (postselect_seen) {
            error(toks[0], "duplicate postselect directive");
            return;
        }
        postselect_seen = true;
        const Token& rule = toks[1];
        if (rule.text == "none") {
            spec.postselect = "none";
        } else if (rule.text == "one-per-side") {
            if (modes_known && spec.circuit.modes != 4) {
                error(rule, "one-per-side post-selection requires exactly 4 modes");
                return;
            }
            spec.postselect = "one-per-side";
        } else {
            error(rule, "unknown post-selection rule");
        }
    }

    void directive_sweep(const std::vector<Token>& toks) {
        if (!check_arity(toks, 4)) {
            return;
        }
        const Token& var = toks[1];
        if (!valid_var_name(var.text)) {
            error(var, "invalid sweep variable name");
            return;
        }
        if (sweep_tokens.contains(var.text)) {
            error(var, "duplicate sweep for variable '" + var.text + "'");
            return;
        }
        // Bound even when the range below is malformed, so one bad sweep line
        // yields one diagnostic instead of a cascade of unbound-variable ones.
        sweep_tokens.emplace(var.text, var);
        std::string why;
        auto from = parse_phase_literal(toks[2].text, &why);
        if (!from) {
            error(toks[2], why.empty() ? "invalid phase expression" : why);
            return;
        }
        auto to = parse_phase_literal(toks[3].text, &why);
        if (!to) {
            error(toks[3], why.empty() ? "invalid phase expression" : why);
            return;
        }
        auto steps = parse_int(toks[4].text);
        if (!steps || *steps < 1 || *steps > kMaxSweepSteps) {
            error(toks[4], "sweep steps must be a positive integer");
            return;
        }
        spec.sweeps.push_back({var.text, *from, *to, static_cast<int>(*steps)});
    }

    void finish() {
        for (const auto& [name, tok] : var_first_use) {
            if (!sweep_tokens.contains(name)) {
                error(tok, "phase variable '" + name + "' has no sweep binding");
            }
        }
        for (const auto& [name, tok] : sweep_tokens) {
            if (!spec.phase_vars.contains(name)) {
                error(tok, "sweep variable '" + name + "' is not used by any phase directive");
            }
        }
        std::stable_sort(errors.begin(), errors.end(), [](const ParseError& a, const ParseError& b) {
            return std::tie(a.line, a.column) < std::tie(b.line, b.column);
        });
        std::sort(spec.input_photons.begin(), spec.input_photons.end());
    }
};

}  // namespace

std::optional<double> parse_phase_literal(std::string_view text, std::string* error) {
    auto fail = [&](std::string_view why) -> std::optional<double> {
        if (error) {
            *error = why;
        }
        return std::nullopt;
    };
    if (text.empty()) {
        return fail("empty phase expression");
    }
    if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
        std::string_view body = text.substr(0, text.size() - 2);
        double sign = 1.0;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
            sign = body.front() == '-' ? -1.0 : 1.0;
            body.remove_prefix(1);
        }
        if (body.empty()) {
            return sign * std::numbers::pi;
        }
        size_t slash = body.find('/');
        if (slash == std::string_view::npos) {
            auto k = parse_int(body);
            if (!k || *k < 0) {
                return fail("invalid multiple of pi");
            }
            return sign * static_cast<double>(*k) * std::numbers::pi;
        }
        auto num = parse_int(body.substr(0, slash));
        auto den = parse_int(body.substr(slash + 1));
        if (!num || !den || *num < 0 || *den < 0) {
            return fail("invalid rational multiple of pi");
        }
        if (*den == 0) {
            return fail("zero denominator in phase expression");
        }
        return sign * static_cast<double>(*num) / static_cast<double>(*den) * std::numbers::pi;
    }
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [p, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || p != end || !std::isfinite(value)) {
        return fail("invalid phase expression");
    }
    return value;
}

ParseResult parse_experiment(std::string_view source) {
    Parser parser;
    auto lines = tokenize(source);
    if (lines.empty()) {
        return {std::nullopt, {{1, 1, "no modes directive", ""}}};
    }
    bool first = true;
    for (const auto& toks : lines) {
        const std::string& d = toks[0].text;
        if (d == "modes") {
            parser.directive_modes(toks, first);
        } else if (first) {
            parser.error(toks[0], "modes must be the first directive");
        } else if (d == "input") {
            parser.directive_input(toks);
        } else if (d == "bs") {
            if (auto pair = parser.mode_pair(toks, "beam splitter")) {
                parser.spec.circuit.elements.push_back(BeamSplitter{pair->first, pair->second});
            }
        } else if (d == "swap") {
            if (auto pair = parser.mode_pair(toks, "mode swap")) {
                parser.spec.circuit.elements.push_back(ModeSwap{pair->first, pair->second});
            }
        } else if (d == "phase") {
            parser.directive_phase(toks);
        } else if (d == "postselect") {
            parser.directive_postselect(toks);
        } else if (d == "sweep") {
            parser.directive_sweep(toks);
        } else {
            parser.error(toks[0], "unknown directive '" + d + "'");
        }
        first = false;
    }
    if (!parser.modes_known && parser.errors.empty()) {
        parser.errors.push_back({1, 1, "no modes directive", ""});
    }
    parser.finish();
    if (!parser.errors.empty()) {
        return {std::nullopt, std::move(parser.errors)};
    }
    return {std::move(parser.spec), {}};
}

Circuit ExperimentSpec::bound(const std::map<std::string, double>& values) const {
    for (const auto& [name, value] : values) {
        if (!phase_vars.contains(name)) {
            throw DomainError("no phase variable named '" + name + "'");
        }
    }
    Circuit out = circuit;
    for (const auto& [name, indices] : phase_vars) {
        auto it = values.find(name);
        if (it == values.end()) {
            throw DomainError("phase variable '" + name + "' is unbound");
        }
        for (size_t idx : indices) {
            std::get<PhaseShift>(out.elements[idx]).phi = it->second;
        }
    }
    return out;
}

std::string render(const ExperimentSpec& spec) {
    std::map<size_t, std::string> var_of_element;
    for (const auto& [name, indices] : spec.phase_vars) {
        for (size_t idx : indices) {
            var_of_element[idx] = name;
        }
    }
    std::string out = "modes " + std::to_string(spec.circuit.modes) + "\n";
    if (!spec.input_photons.empty()) {
        out += "input";
        for (int m : spec.input_photons) {
            out += ' ' + std::to_string(m);
        }
        out += '\n';
    }
    for (size_t i = 0; i < spec.circuit.elements.size(); ++i) {
        const auto& e = spec.circuit.elements[i];
        if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
            out += "bs " + std::to_string(bs->a) + ' ' + std::to_string(bs->b) + '\n';
        } else if (const auto* sw = std::get_if<ModeSwap>(&e)) {
            out += "swap " + std::to_string(sw->a) + ' ' + std::to_string(sw->b) + '\n';
        } else {
            const auto& ps = std::get<PhaseShift>(e);
            out += "phase " + std::to_string(ps.mode) + ' ';
            if (auto it = var_of_element.find(i); it != var_of_element.end()) {
                out += '$' + it->second;
            } else {
                out += format_double(ps.phi);
            }
            out += '\n';
        }
    }
    if (spec.postselect != "none") {
        out += "postselect " + spec.postselect + '\n';
    }
    for (const auto& s : spec.sweeps) {
        out += "sweep " + s.var + ' ' + format_double(s.from) + ' ' + format_double(s.to) + ' ' +
               std::to_string(s.steps) + '\n';
    }
    return out;
}

namespace {

constexpr std::string_view kClassicHom =
    "# Two photons meet on one balanced beam splitter.\n"
    "modes 2\n"
    "input 0 1\n"
    "bs 0 1\n";

constexpr std::string_view kNonlocalHom =
    "modes 4\n"
    "input 0 3\n"
    "bs 0 1\n"
    "bs 2 3\n"
    "swap 1 2\n"
    "phase 0 $phiA\n"
    "phase 3 $phiB\n"
    "bs 0 1\n"
    "bs 2 3\n"
    "postselect one-per-side\n"
    "sweep phiA 0 2pi 16\n"
    "sweep phiB 0 2pi 16\n";

}  // namespace

std::string_view preset_source(std::string_view name) {
    if (name == "classic-hom") {
        return kClassicHom;
    }
    if (name == "nonlocal-hom") {
        return kNonlocalHom;
    }
    throw DomainError("unknown preset '" + std::string(name) +
                      "' (available: classic-hom, nonlocal-hom)");
}

std::vector<std::string> preset_names() {
    return {"classic-hom", "nonlocal-hom"};
}

}  // namespace fockforge
