/*
   Copyright 2026 The cuedpp Authors

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

#include "cuedpp/arcset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace cuedpp {

namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(const Interval& iv) {
    return "[" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + ")";
}

}  // namespace

IntervalSet IntervalSet::make(std::span<const Interval> intervals) {
    std::vector<Interval> sorted(intervals.begin(), intervals.end());
    for (const auto& iv : sorted) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw std::invalid_argument("interval endpoints must be finite");
        if (!(iv.lo < iv.hi))
            throw std::invalid_argument("interval " + describe(iv) + " has lo >= hi");
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    std::vector<Interval> merged;
    merged.reserve(sorted.size());
    for (const auto& iv : sorted) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return IntervalSet(std::move(merged));
}

double IntervalSet::measure() const {
    double total = 0.0;
    for (const auto& iv : intervals_) total += iv.length();
    return total;
}

double IntervalSet::diameter() const {
    if (intervals_.empty()) return 0.0;
    return intervals_.back().hi - intervals_.front().lo;
}

bool IntervalSet::contains(double x) const {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [x](const Interval& iv) { return iv.contains(x); });
}

IntervalSet IntervalSet::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c))
        throw std::invalid_argument("scale factor must be positive and finite");
    std::vector<Interval> out;
    out.reserve(intervals_.size());
    for (const auto& iv : intervals_) out.push_back({c * iv.lo, c * iv.hi});
    // Positive scaling preserves order and disjointness, but re-merge anyway in
    // case rounding made neighbours touch.
    return make(out);
}

ArcSet ArcSet::make(std::span<const Interval> intervals) {
    for (const auto& iv : intervals) {
        if (iv.lo < -kPi || iv.hi > kPi)
            throw std::invalid_argument("interval " + describe(iv) + " leaves [-pi, pi]");
    }
    return ArcSet(IntervalSet::make(intervals));
}

ArcSet ArcSet::from(const IntervalSet& set) {
    return make(std::span<const Interval>(set.intervals()));
}

ArcSet symmetric_arc(double theta) {
    if (!(theta >= 0.0 && theta <= kPi))
        throw std::invalid_argument("theta must lie in [0, pi]");
    if (theta == 0.0) return ArcSet{};
    return ArcSet::make({{-theta, theta}});
}

ArcSet scale_arcset(const IntervalSet& set, double c) {
    return ArcSet::from(set.scaled(c));
}

std::string to_json(const IntervalSet& set) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& iv : set.intervals()) arr.push_back({iv.lo, iv.hi});
    return arr.dump();
}

IntervalSet interval_set_from_json(const std::string& text) {
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("interval set JSON: ") + e.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("interval set JSON must be an array");
    std::vector<Interval> ivs;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw std::invalid_argument("interval set JSON entries must be [lo, hi] number pairs");
        ivs.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return IntervalSet::make(ivs);
}

ArcSet arcset_from_json(const std::string& text) {
    return ArcSet::from(interval_set_from_json(text));
}

}  // namespace cuedpp
