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

// cuedpp: command-line front end for the counting experiments.
//
// Every command writes CSV to --out (or stdout). With --json a summary with a
// configuration echo goes to stdout instead; when --out is also given the CSV
// still lands in the file. Exit codes: 0 success, 2 invalid input, 3 a
// checked inequality failed.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cuedpp/counting.hpp"
#include "cuedpp/intensity.hpp"
#include "cuedpp/sampler.hpp"
#include "cuedpp/stats.hpp"
#include "cuedpp/version.hpp"

using namespace cuedpp;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kExitInvalid = 2;
constexpr int kExitViolation = 3;

struct Common {
    std::uint64_t seed = 20150301;
    std::string out;
    int quad_order = 0;
    bool json = false;
};

struct Window {
    std::optional<double> theta;
    std::string set;

    ArcSet arc() const {
        if (!set.empty()) return arcset_from_json(set);
        return symmetric_arc(theta.value_or(0.2));
    }
};

void add_common(CLI::App* cmd, Common& c, bool seeded) {
    if (seeded) cmd->add_option("--seed", c.seed, "Master seed");
    cmd->add_option("--out", c.out, "CSV output path (default: stdout)");
    cmd->add_option("--quad-order", c.quad_order, "Fixed starting panel order")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--json", c.json, "Print a JSON summary");
}

void add_window(CLI::App* cmd, Window& w) {
    auto* theta = cmd->add_option("--theta", w.theta, "Half-width of the window [-theta, theta) (default 0.2)");
    cmd->add_option("--set", w.set, "Window as a JSON list of [lo, hi] pairs")->excludes(theta);
}

// Writes CSV to the chosen sink and the JSON summary to stdout when asked.
void emit(const Common& c, const std::string& csv, const json& summary) {
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        if (!f) throw std::invalid_argument("cannot open " + c.out);
        f << csv;
    } else if (!c.json) {
        std::cout << csv;
    }
    if (c.json) {
        json j = summary;
        j["version"] = kVersion;
        std::cout << j.dump(2) << '\n';
    }
}

int run_distance(const Common& c, int n, int m, const Window& w) {
    const ArcSet a = w.arc();
    const auto r = distance_report(n, m, a, c.quad_order);
    std::ostringstream csv;
    write_distance_header(csv);
    write_distance_row(csv, r);
    const bool bound_ok = !r.closed_form_applies() || r.w1_exact <= r.closed_form_bound + 1e-9;
    const bool ok = r.chain_holds() && bound_ok;
    emit(c, csv.str(),
         {{"config", {{"n", n}, {"m", m}, {"A", json::parse(to_json(a))}}},
          {"tv", r.tv_exact},
          {"w1", r.w1_exact},
          {"coupling", r.coupling_bound},
          {"cs", r.cs_bound},
          {"hs", r.hs_bound},
          {"closed_form", r.closed_form_bound},
          {"closed_form_applies", r.closed_form_applies()},
          {"chain_holds", ok}});
    if (!ok) std::cerr << "distance chain violated\n";
    return ok ? 0 : kExitViolation;
}

int run_variance(const Common& c, const std::vector<int>& ns, const std::vector<double>& thetas,
                 std::optional<int> m) {
    std::ostringstream csv;
    csv << "n,theta,var_formula,var_pmf,lower,upper,regime";
    if (m) csv << ",m,var_diff,diff_cap";
    csv << '\n' << std::setprecision(12);
    json rows = json::array();
    bool ok = true;
    for (int n : ns)
        for (double theta : thetas) {
            const auto a = symmetric_arc(theta);
            const double formula = variance_by_formula(n, theta);
            const double pmf =
                count_distribution(spectrum(CueKernel{n, 1}, build_quadrature(a, n, c.quad_order))).pmf_variance();
            const auto b = variance_bounds(n, m.value_or(1), theta);
            const bool row_ok = pmf <= b.upper + 1e-9 && (!b.lower || pmf >= *b.lower - 1e-9);
            csv << n << ',' << theta << ',' << formula << ',' << pmf << ',';
            if (b.lower) csv << *b.lower;
            csv << ',' << b.upper << ',' << (b.small_window_regime ? "small" : "log");
            json row{{"n", n}, {"theta", theta}, {"var_formula", formula}, {"var_pmf", pmf}, {"upper", b.upper},
                     {"lower", b.lower ? json(*b.lower) : json(nullptr)}};
            bool diff_ok = true;
            if (m) {
                const double diff = variance_difference(n, *m, a, c.quad_order);
                const double cap = a.measure() * a.measure() / (4 * kPi * kPi);
                diff_ok = std::abs(diff) <= cap + 1e-9;
                csv << ',' << *m << ',' << diff << ',' << cap;
                row["m"] = *m;
                row["var_diff"] = diff;
                row["diff_cap"] = cap;
            }
            csv << '\n';
            row["holds"] = row_ok && diff_ok;
            rows.push_back(row);
            ok = ok && row_ok && diff_ok;
        }
    emit(c, csv.str(), {{"rows", rows}, {"holds", ok}});
    if (!ok) std::cerr << "variance bound violated\n";
    return ok ? 0 : kExitViolation;
}

int run_clt(const Common& c, const std::vector<int>& ns, const std::vector<double>& thetas) {
    std::ostringstream csv;
    csv << "n,theta,mean,variance,exact_ks,lower,upper,jump,in_hypothesis,holds\n" << std::setprecision(12);
    json rows = json::array();
    bool ok = true;
    for (int n : ns)
        for (double theta : thetas) {
            const auto r = exact_gaussian_ks(n, theta);
            const bool holds = r.sandwich_holds();
            csv << n << ',' << theta << ',' << r.mean << ',' << r.variance << ',' << r.exact_ks << ','
                << r.lower_bound << ',' << r.upper_bound << ',' << r.jump_bound << ',' << r.in_hypothesis << ','
                << holds << '\n';
            rows.push_back({{"n", n},
                            {"theta", theta},
                            {"exact_ks", r.exact_ks},
                            {"lower", r.lower_bound},
                            {"upper", std::isfinite(r.upper_bound) ? json(r.upper_bound) : json(nullptr)},
                            {"jump", r.jump_bound},
                            {"in_hypothesis", r.in_hypothesis},
                            {"holds", holds}});
            if (r.in_hypothesis && !holds) ok = false;
        }
    emit(c, csv.str(), {{"rows", rows}, {"holds", ok}});
    if (!ok) std::cerr << "Kolmogorov sandwich violated\n";
    return ok ? 0 : kExitViolation;
}

int run_figure1(const Common& c, Figure1Config cfg) {
    cfg.seed = c.seed;
    const auto r = reproduce_figure1(cfg);
    std::ostringstream csv;
    write_figure1_curve_csv(csv, r);
    emit(c, csv.str(), json::parse(figure1_summary_json(r)));
    return 0;
}

int run_intensity(const Common& c, int queries, int max_k, std::optional<int> n, std::optional<int> m,
                  const std::vector<double>& points) {
    std::vector<IntensityQuery> qs;
    if (!points.empty()) {
        if (!n || !m) throw std::invalid_argument("--points needs --n and --m");
        qs.push_back({*n, *m, points});
    } else {
        qs = random_intensity_queries(c.seed, queries, max_k);
    }
    std::ostringstream csv;
    write_intensity_header(csv);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& row : audit_intensities(qs)) {
        write_intensity_row(csv, row);
        worst = std::min(worst, row.value.margin());
    }
    const bool ok = worst >= -1e-10;
    emit(c, csv.str(),
         {{"config", {{"seed", c.seed}, {"queries", qs.size()}, {"max_k", max_k}}}, {"min_margin", worst},
          {"holds", ok}});
    if (!ok) std::cerr << "joint intensity domination violated\n";
    return ok ? 0 : kExitViolation;
}

int run_sine(const Common& c, const std::vector<int>& ns, const std::string& set) {
    const IntervalSet a = interval_set_from_json(set);
    std::ostringstream csv;
    csv << "n,w1,bound,ratio\n" << std::setprecision(12);
    json rows = json::array();
    bool ok = true;
    for (int n : ns) {
        const auto r = sine_comparison(n, a);
        const double ratio = r.bound > 0.0 ? r.w1 / r.bound : 0.0;
        csv << n << ',' << r.w1 << ',' << r.bound << ',' << ratio << '\n';
        rows.push_back({{"n", n}, {"w1", r.w1}, {"bound", r.bound}, {"ratio", ratio}});
        ok = ok && r.w1 <= r.bound;
    }
    emit(c, csv.str(), {{"A", json::parse(to_json(a))}, {"rows", rows}, {"holds", ok}});
    if (!ok) std::cerr << "sine comparison bound violated\n";
    return ok ? 0 : kExitViolation;
}

int run_sample(const Common& c, int dimension, int trials, unsigned workers, bool general, const Window& w,
               std::optional<int> m) {
    SamplerOptions opts;
    opts.workers = workers;
    opts.method = general ? EigenMethod::General : EigenMethod::Cayley;
    const auto batch = sample_cue(dimension, trials, c.seed, opts);
    std::ostringstream csv;
    const bool counting = w.theta || !w.set.empty() || m;
    if (counting)
        write_counts_csv(csv, count_in_window(batch, w.arc(), m.value_or(1)));
    else
        write_batch_csv(csv, batch);
    emit(c, csv.str(), json::parse(batch_sidecar_json(batch)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting statistics of CUE eigenangles and their stretched-window analogues"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Common common;
    Window window;
    int n = 100, m = 2;

    auto* distance = app.add_subcommand("distance", "TV, W1 and the bound chain between plain and stretched counts");
    add_common(distance, common, false);
    add_window(distance, window);
    distance->add_option("--n", n, "Matrix size")->check(CLI::PositiveNumber);
    distance->add_option("--m", m, "Stretch factor")->check(CLI::PositiveNumber);

    std::vector<int> ns{100};
    std::vector<double> thetas{0.2};
    std::optional<int> m_opt;
    auto* variance = app.add_subcommand("variance", "Count variance by quadrature and by the count law, with bounds");
    add_common(variance, common, false);
    variance->add_option("--n", ns, "Matrix sizes")->check(CLI::PositiveNumber);
    variance->add_option("--theta", thetas, "Window half-widths in (0, pi/2]");
    variance->add_option("--m", m_opt, "Also report the plain minus stretched variance")->check(CLI::PositiveNumber);

    std::vector<int> clt_ns{500};
    std::vector<double> clt_thetas{0.25};
    auto* clt = app.add_subcommand("clt", "Exact Kolmogorov distance to the Gaussian with its bounds");
    add_common(clt, common, false);
    clt->add_option("--n", clt_ns, "Matrix sizes")->check(CLI::PositiveNumber);
    clt->add_option("--theta", clt_thetas, "Window half-widths in (0, pi/2]");

    Figure1Config fig;
    auto* figure1 = app.add_subcommand("figure1", "Monte Carlo CDFs of the two counts and KS statistics");
    add_common(figure1, common, true);
    figure1->add_option("--n", fig.n, "Matrix size")->check(CLI::PositiveNumber);
    figure1->add_option("--theta", fig.theta, "Window half-width")->check(CLI::Range(0.0, kPi));
    figure1->add_option("--m", fig.m, "Stretch factor")->check(CLI::PositiveNumber);
    figure1->add_option("--trials", fig.trials, "Trials per batch")->check(CLI::PositiveNumber);
    figure1->add_option("--workers", fig.workers, "Worker threads (0: all cores)");

    int queries = 1000, max_k = 4;
    std::optional<int> int_n, int_m;
    std::vector<double> points;
    auto* intensity = app.add_subcommand("intensity", "Audit of plain vs stretched joint intensities");
    add_common(intensity, common, true);
    intensity->add_option("--queries", queries, "Number of random queries")->check(CLI::NonNegativeNumber);
    intensity->add_option("--max-k", max_k, "Largest tuple size")->check(CLI::Range(1, kMaxIntensityOrder));
    intensity->add_option("--n", int_n, "Matrix size for a single --points query")->check(CLI::PositiveNumber);
    intensity->add_option("--m", int_m, "Stretch factor for a single --points query")->check(CLI::PositiveNumber);
    intensity->add_option("--points", points, "Evaluate one query at these points instead");

    std::vector<int> sine_ns{100, 200, 400};
    std::string sine_set = "[[-1, 1]]";
    auto* sine = app.add_subcommand("sine", "W1 between rescaled CUE counts and sine-process counts");
    add_common(sine, common, false);
    sine->add_option("--n", sine_ns, "Matrix sizes")->check(CLI::PositiveNumber);
    sine->add_option("--set", sine_set, "Window on the real line as a JSON list of [lo, hi] pairs");

    int dimension = 100, trials = 10;
    unsigned workers = 0;
    bool general = false;
    Window sample_window;
    std::optional<int> sample_m;
    auto* sample = app.add_subcommand("sample", "Haar eigenangles, or window counts when a window is given");
    add_common(sample, common, true);
    add_window(sample, sample_window);
    sample->add_option("--n", dimension, "Matrix dimension")->check(CLI::PositiveNumber);
    sample->add_option("--trials", trials, "Number of matrices")->check(CLI::PositiveNumber);
    sample->add_option("--workers", workers, "Worker threads (0: all cores)");
    sample->add_option("--m", sample_m, "Count in the stretched window of this factor")->check(CLI::PositiveNumber);
    sample->add_flag("--general-eigensolver", general, "Use the non-Hermitian eigensolver directly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*distance) return run_distance(common, n, m, window);
        if (*variance) return run_variance(common, ns, thetas, m_opt);
        if (*clt) return run_clt(common, clt_ns, clt_thetas);
        if (*figure1) return run_figure1(common, fig);
        if (*intensity) return run_intensity(common, queries, max_k, int_n, int_m, points);
        if (*sine) return run_sine(common, sine_ns, sine_set);
        if (*sample) return run_sample(common, dimension, trials, workers, general, sample_window, sample_m);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
