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

#pragma once

#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cuedpp {

struct Interval {
    double lo;
    double hi;

    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x < hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of disjoint half-open intervals [lo, hi) on the real line,
/// kept sorted by lo with touching or overlapping pieces merged.
///
/// This is the counting window for the sine-kernel process, which lives on
/// all of R. ArcSet below adds the restriction to [-pi, pi).
class IntervalSet {
public:
    IntervalSet() = default;

    /// Throws std::invalid_argument on lo >= hi or non-finite endpoints.
    static IntervalSet make(std::span<const Interval> intervals);
    static IntervalSet make(std::initializer_list<Interval> intervals) {
        return make(std::span<const Interval>(intervals.begin(), intervals.size()));
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }

    /// Lebesgue measure.
    double measure() const;
    /// Linear span sup - inf; 0 for the empty set.
    double diameter() const;
    bool contains(double x) const;

    /// Every endpoint multiplied by c > 0.
    IntervalSet scaled(double c) const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

protected:
    explicit IntervalSet(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}

    std::vector<Interval> intervals_;
};

/// IntervalSet constrained to the circle chart [-pi, pi).
class ArcSet : public IntervalSet {
public:
    ArcSet() = default;

    /// Also rejects endpoints outside [-pi, pi].
    static ArcSet make(std::span<const Interval> intervals);
    static ArcSet make(std::initializer_list<Interval> intervals) {
        return make(std::span<const Interval>(intervals.begin(), intervals.size()));
    }
    /// Checks that an arbitrary interval set fits inside [-pi, pi].
    static ArcSet from(const IntervalSet& set);

    friend bool operator==(const ArcSet&, const ArcSet&) = default;

private:
    explicit ArcSet(IntervalSet set) : IntervalSet(std::move(set)) {}
};

/// [-theta, theta); empty for theta = 0.
ArcSet symmetric_arc(double theta);

/// c * A; throws if a scaled endpoint leaves [-pi, pi].
ArcSet scale_arcset(const IntervalSet& set, double c);

/// JSON array of [lo, hi] pairs.
std::string to_json(const IntervalSet& set);
IntervalSet interval_set_from_json(const std::string& text);
ArcSet arcset_from_json(const std::string& text);

}  // namespace cuedpp
