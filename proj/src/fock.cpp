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

#include "fockforge/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <nlohmann/json.hpp>

namespace fockforge {

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) {
        throw DomainError("occupation pattern must cover at least one mode");
    }
    for (int c : counts_) {
        if (c < 0) {
            throw DomainError("photon counts must be non-negative");
        }
    }
}

Occupation Occupation::vacuum(int modes) {
    if (modes < 1) {
        throw DomainError("mode count must be at least 1");
    }
    return Occupation(std::vector<int>(static_cast<size_t>(modes), 0));
}

int Occupation::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool BasisOrder::operator()(const Occupation& a, const Occupation& b) const {
    // a precedes b when a is lexicographically greater.
    return std::lexicographical_compare(b.counts().begin(), b.counts().end(),
                                        a.counts().begin(), a.counts().end());
}

std::vector<Occupation> enumerate_basis(int modes, int photons) {
    if (modes < 1) {
        throw DomainError("mode count must be at least 1");
    }
    if (photons < 0) {
        throw DomainError("photon number must be non-negative");
    }
    std::vector<Occupation> basis;
    std::vector<int> c(static_cast<size_t>(modes), 0);
    c[0] = photons;
    for (;;) {
        basis.emplace_back(c);
        // Move one photon from the rightmost non-final occupied mode one slot
        // to the right, pulling everything beyond it back behind it.
        int k = -1;
        for (int i = modes - 2; i >= 0; --i) {
            if (c[static_cast<size_t>(i)] > 0) {
                k = i;
                break;
            }
        }
        if (k < 0) {
            break;
        }
        int tail = std::accumulate(c.begin() + k + 1, c.end(), 0);
        c[static_cast<size_t>(k)] -= 1;
        std::fill(c.begin() + k + 1, c.end(), 0);
        c[static_cast<size_t>(k) + 1] = tail + 1;
    }
    return basis;
}

FockState::FockState(int modes) : modes_(modes) {
    if (modes < 1) {
        throw DomainError("mode count must be at least 1");
    }
}

FockState FockState::basis_state(const Occupation& pattern) {
    FockState s(pattern.modes());
    s.set_amplitude(pattern, Complex(1.0, 0.0));
    return s;
}

FockState FockState::from_photons(int modes, const std::vector<int>& photon_modes) {
    std::vector<int> counts(static_cast<size_t>(std::max(modes, 1)), 0);
    if (modes < 1) {
        throw DomainError("mode count must be at least 1");
    }
    for (int m : photon_modes) {
        if (m < 0 || m >= modes) {
            throw DomainError("photon mode index out of range");
        }
        counts[static_cast<size_t>(m)] += 1;
    }
    return basis_state(Occupation(counts));
}

std::optional<int> FockState::photons() const {
    if (amps_.empty()) {
        return std::nullopt;
    }
    return amps_.begin()->first.total();
}

void FockState::check_pattern(const Occupation& pattern) const {
    if (pattern.modes() != modes_) {
        throw DomainError("pattern mode count does not match the state");
    }
    if (!amps_.empty() && pattern.total() != amps_.begin()->first.total()) {
        throw DomainError("pattern photon number does not match the state");
    }
}

Complex FockState::amplitude(const Occupation& pattern) const {
    auto it = amps_.find(pattern);
    return it == amps_.end() ? Complex(0.0, 0.0) : it->second;
}

void FockState::set_amplitude(const Occupation& pattern, Complex value) {
    check_pattern(pattern);
    if (value == Complex(0.0, 0.0)) {
        amps_.erase(pattern);
    } else {
        amps_[pattern] = value;
    }
}

void FockState::add_amplitude(const Occupation& pattern, Complex value) {
    set_amplitude(pattern, amplitude(pattern) + value);
}

double FockState::squared_norm() const {
    double n2 = 0.0;
    for (const auto& [pattern, a] : amps_) {
        n2 += std::norm(a);
    }
    return n2;
}

Complex inner_product(const FockState& a, const FockState& b) {
    if (a.modes() != b.modes()) {
        throw DomainError("inner product requires matching mode counts");
    }
    auto na = a.photons();
    auto nb = b.photons();
    if (na && nb && *na != *nb) {
        throw DomainError("inner product requires matching photon numbers");
    }
    Complex sum(0.0, 0.0);
    const auto& small = a.amplitudes().size() <= b.amplitudes().size() ? a : b;
    const auto& other = &small == &a ? b : a;
    for (const auto& [pattern, amp] : small.amplitudes()) {
        Complex va = &small == &a ? amp : other.amplitude(pattern);
        Complex vb = &small == &b ? amp : other.amplitude(pattern);
        sum += std::conj(va) * vb;
    }
    return sum;
}

Normalized normalize(const FockState& s, ComplexTolerance tol) {
    double n2 = s.squared_norm();
    if (n2 <= tol.eps * tol.eps) {
        throw NotNormalizable("state norm is below the normalization threshold");
    }
    double n = std::sqrt(n2);
    FockState out(s.modes());
    for (const auto& [pattern, a] : s.amplitudes()) {
        out.set_amplitude(pattern, a / n);
    }
    return {std::move(out), n};
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string to_json(const FockState& s) {
    std::string out = "{\"modes\":" + std::to_string(s.modes());
    out += ",\"photons\":" + std::to_string(s.photons().value_or(0));
    out += ",\"amplitudes\":[";
    bool first = true;
    for (const auto& [pattern, a] : s.amplitudes()) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += "{\"pattern\":[";
        for (int i = 0; i < pattern.modes(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(pattern[i]);
        }
        out += "],\"re\":" + format_double(a.real());
        out += ",\"im\":" + format_double(a.imag());
        out += '}';
    }
    out += "]}";
    return out;
}

FockState fock_state_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid state JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("modes") || !j.contains("amplitudes")) {
        throw DomainError("invalid state JSON: expected modes and amplitudes");
    }
    if (!j["modes"].is_number_integer()) {
        throw DomainError("invalid state JSON: modes must be an integer");
    }
    FockState s(j["modes"].get<int>());
    for (const auto& entry : j["amplitudes"]) {
        if (!entry.is_object() || !entry.contains("pattern") || !entry.contains("re") ||
            !entry.contains("im")) {
            throw DomainError("invalid state JSON: malformed amplitude entry");
        }
        std::vector<int> counts;
        for (const auto& c : entry["pattern"]) {
            if (!c.is_number_integer()) {
                throw DomainError("invalid state JSON: pattern entries must be integers");
            }
            counts.push_back(c.get<int>());
        }
        s.add_amplitude(Occupation(std::move(counts)),
                        Complex(entry["re"].get<double>(), entry["im"].get<double>()));
    }
    if (j.contains("photons") && j["photons"].is_number_integer() && !s.amplitudes().empty() &&
        s.photons() != j["photons"].get<int>()) {
        throw DomainError("invalid state JSON: photon number does not match the amplitudes");
    }
    return s;
}

}  // namespace fockforge
