#include "ncgas/acceptance.hpp"

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ncgas/energy.hpp"
#include "ncgas/estimator.hpp"
#include "ncgas/number_format.hpp"
#include "ncgas/philox.hpp"
#include "ncgas/sweep.hpp"

namespace ncgas::acceptance {

namespace {

using std::numbers::pi;

// Budgets and tolerances, pinned.
constexpr std::uint64_t kCommutativeSamples = 100'000'000;
constexpr double kCommutativeMaxStderr = 1.5e-3;
constexpr double kCommutativeMaxSeconds = 300.0;
constexpr double kPrintedTotal = 1.200;
constexpr double kPrintedTotalHalfUlp = 5e-4;
constexpr std::size_t kReductionPoints = 100'000;
constexpr std::uint64_t kReductionSamples = 2'000'000;
constexpr std::uint64_t kSweepSamples = 10'000'000;
constexpr std::array<double, 3> kSmallTaus{0.025, 0.05, 0.1};
constexpr double kCurvatureTolerance = 0.10;
constexpr double kSlopeTarget = 2.0;
constexpr double kSlopeTolerance = 0.1;
constexpr std::array<double, 5> kLargeTaus{0.0, 1.0, 10.0, 100.0, 1000.0};
constexpr std::uint64_t kDirectionSamples = 4'000'000;
constexpr std::size_t kDirectionCount = 20;
constexpr double kDirectionTau = 1.0;
constexpr int kSoundnessRepetitions = 100;
constexpr int kSoundnessRequired = 99;
constexpr std::uint64_t kSoundnessSamples = 200'000;
constexpr std::uint64_t kScalingSamples = 2'500'000;
constexpr std::uint64_t kOracleSamples = 50'000'000;
constexpr double kOracleBox = 10.0;
constexpr double kTruncationAllowance = 0.01;

SamplerConfig sampler(std::uint64_t n, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.n_samples = n;
    cfg.seed = seed;
    cfg.batch_size = std::min<std::uint64_t>(65'536, n);
    return cfg;
}

double combined(double a, double b) { return std::sqrt(a * a + b * b); }

std::string num(double v) { return format_sig10(v); }

class Report {
public:
    Report(int id, std::string title) { result_.id = id; result_.title = std::move(title); result_.passed = true; }

    void check(bool ok, const std::string& line) {
        result_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
        result_.passed = result_.passed && ok;
    }
    void note(const std::string& line) { result_.details.push_back("     " + line); }
    CriterionResult done() { return std::move(result_); }

private:
    CriterionResult result_;
};

bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }

bool same_bits(const IntegralEstimate& a, const IntegralEstimate& b) {
    return same_bits(a.mean, b.mean) && same_bits(a.std_error, b.std_error) && a.n_samples == b.n_samples &&
           a.n_in_domain == b.n_in_domain && same_bits(a.acceptance_rate, b.acceptance_rate);
}

// Least squares y = a + b x; returns {a, b}.
std::pair<double, double> linear_fit(std::span<const double> x, std::span<const double> y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {(sy - b * sx) / n, b};
}

// The commutative estimate at the full budget is shared by criteria 1 and 2.
struct CommutativeRun {
    IntegralEstimate estimate;
    double seconds;
};

const CommutativeRun& commutative_run(const Options& opts) {
    static std::uint64_t cached_seed = 0;
    static bool have = false;
    static CommutativeRun run;
    if (!have || cached_seed != opts.seed) {
        const auto t0 = std::chrono::steady_clock::now();
        run.estimate = eps2b_commutative(sampler(kCommutativeSamples, opts.seed), opts.workers);
        run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        cached_seed = opts.seed;
        have = true;
    }
    return run;
}

PhasePoint random_point(std::uint64_t index) {
    const auto a = philox4x64({index, 0, 0, 0}, {0x5eedULL, 0x706f696e74ULL});
    const auto b = philox4x64({index, 1, 0, 0}, {0x5eedULL, 0x706f696e74ULL});
    const auto c = philox4x64({index, 2, 0, 0}, {0x5eedULL, 0x706f696e74ULL});
    auto span_to = [](std::uint64_t bits, double half) { return half * (2.0 * to_open_unit(bits) - 1.0); };
    return {{span_to(a[0], 3.0), span_to(a[1], 3.0), span_to(a[2], 3.0)},
            {span_to(a[3], 1.1), span_to(b[0], 1.1), span_to(b[1], 1.1)},
            {span_to(b[2], 1.1), span_to(b[3], 1.1), span_to(c[0], 1.1)}};
}

} // namespace

std::vector<Vec3> random_directions(std::size_t count, std::uint64_t seed) {
    std::vector<Vec3> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto r = philox4x64({i, 0, 0, 0}, {seed, 0x6469726563ULL});
        const double c = 2.0 * to_open_unit(r[0]) - 1.0;
        const double s = std::sqrt(1.0 - c * c);
        const double phi = 2.0 * pi * to_open_unit(r[1]);
        Vec3 v{s * std::cos(phi), s * std::sin(phi), c};
        out.push_back((1.0 / norm(v)) * v);
    }
    return out;
}

double r_cube_tail(double half_width) {
    const double big_c = 4.0 / 45.0 * std::pow(4.0 * pi, 3);
    const double sphere_max = 12.0 * std::numbers::sqrt2 * std::atan(1.0 / std::numbers::sqrt2);
    return big_c / (4.0 * pi) * sphere_max / half_width;
}

CriterionResult commutative_value(const Options& opts) {
    Report r(1, "commutative exchange term reproduces ln2/3 - 3 zeta(3)/(2 pi^2)");
    const auto& run = commutative_run(opts);
    const double exact = analytic_constants().eps2b_exact;
    const auto& e = run.estimate;
    r.note("eps2b = " + num(e.mean) + " +- " + num(e.std_error) + " (exact " + num(exact) + ", N = 1e8)");
    r.check(std::abs(e.mean - exact) <= 3.0 * e.std_error, "|mean - exact| <= 3 stderr, z = " + num((e.mean - exact) / e.std_error));
    r.check(e.std_error <= kCommutativeMaxStderr, "stderr <= 1.5e-3");
    r.check(run.seconds <= kCommutativeMaxSeconds, "runtime " + format_fixed(run.seconds, 1) + " s <= 300 s");
    return r.done();
}

CriterionResult energy_coefficients(const Options& opts) {
    Report r(2, "Fermi and exchange coefficients; total at r_s = 1, tau = 0");
    const auto& c = analytic_constants();
    auto three_sig = [](double v) {
        std::ostringstream os;
        os.precision(3);
        os << v;
        return os.str();
    };
    r.check(three_sig(c.c_fermi) == "2.21", "(3/5)(9pi/4)^(2/3) = " + num(c.c_fermi) + " -> 2.21");
    r.check(three_sig(c.c_exchange) == "0.916", "(3/2pi)(9pi/4)^(1/3) = " + num(c.c_exchange) + " -> 0.916");
    const auto& e = commutative_run(opts).estimate;
    const EnergyBreakdown b = assemble_energy(1.0, e);
    const double closed = c.c_fermi - c.c_exchange + c.c_const_total;
    r.note("total(1, 0) = " + num(b.total) + " +- " + num(b.total_stderr));
    r.check(std::abs(b.total - closed) <= 3.0 * b.total_stderr,
            "total matches closed-form coefficient sum " + num(closed) + " within 3 stderr");
    r.check(std::abs(b.total - kPrintedTotal) <= 3.0 * b.total_stderr + kPrintedTotalHalfUlp,
            "total = 1.200 within 3 stderr + 5e-4 (printed precision)");
    return r.done();
}

CriterionResult zero_tau_reduction(const Options& opts) {
    Report r(3, "tau = 0 reduction is bit-exact");
    std::size_t cos_mismatch = 0, avg_mismatch = 0, inside = 0;
    const auto dirs = random_directions(kReductionPoints, opts.seed);
    for (std::size_t i = 0; i < kReductionPoints; ++i) {
        const PhasePoint pt = random_point(i);
        inside += in_domain(pt) ? 1 : 0;
        const double base = kernel_comm(pt);
        cos_mismatch += same_bits(kernel_cos(pt, ThetaVector(dirs[i], 0.0)), base) ? 0 : 1;
        avg_mismatch += same_bits(kernel_avg(pt, 0.0), base) ? 0 : 1;
    }
    r.note(std::to_string(kReductionPoints) + " points, " + std::to_string(inside) + " in domain");
    r.check(cos_mismatch == 0, "kernel_cos(tau=0) == kernel_comm bitwise (" + std::to_string(cos_mismatch) + " mismatches)");
    r.check(avg_mismatch == 0, "kernel_avg(tau=0) == kernel_comm bitwise (" + std::to_string(avg_mismatch) + " mismatches)");
    const auto cfg = sampler(kReductionSamples, opts.seed);
    const auto a = eps2b_tau(0.0, cfg, opts.workers);
    const auto b = eps2b_commutative(cfg, opts.workers);
    r.check(same_bits(a, b), "eps2b_tau(0) byte-identical to eps2b_commutative (" + num(a.mean) + ")");
    return r.done();
}

CriterionResult small_tau_law(const Options& opts) {
    Report r(4, "small-tau quadratic law with coefficient -R/(32 pi^5)");
    const auto cfg = sampler(kSweepSamples, opts.seed);
    std::vector<double> taus{0.0};
    taus.insert(taus.end(), kSmallTaus.begin(), kSmallTaus.end());
    const auto sweep = eps2b_tau_sweep(taus, cfg, opts.workers);
    const RCoefficient rc = r_coefficient(cfg, opts.workers);
    const double b_expected = -rc.value / (32.0 * std::pow(pi, 5));

    std::vector<double> x, y, lx, ly;
    for (std::size_t i = 1; i < taus.size(); ++i) {
        x.push_back(taus[i] * taus[i]);
        y.push_back(sweep[i].mean);
        lx.push_back(std::log(taus[i]));
        ly.push_back(std::log(sweep[0].mean - sweep[i].mean));
    }
    const auto [a, b] = linear_fit(x, y);
    const double slope = linear_fit(lx, ly).second;
    r.note("R = " + num(rc.value) + " +- " + num(rc.std_error));
    r.note("fit a = " + num(a) + ", b = " + num(b) + ", -R/(32 pi^5) = " + num(b_expected));
    r.check(std::abs(b / b_expected - 1.0) <= kCurvatureTolerance,
            "b within 10% of -R/(32 pi^5) (ratio " + num(b / b_expected) + ")");
    r.check(std::abs(slope - kSlopeTarget) <= kSlopeTolerance, "log-log slope " + num(slope) + " = 2.0 +- 0.1");
    return r.done();
}

CriterionResult large_tau_decay(const Options& opts) {
    Report r(5, "exchange term decays to zero at large tau");
    const auto sweep = eps2b_tau_sweep(kLargeTaus, sampler(kSweepSamples, opts.seed), opts.workers);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        r.note("eps2b(" + format_shortest(kLargeTaus[i]) + ") = " + num(sweep[i].mean) + " +- " + num(sweep[i].std_error));
    }
    const auto& tail = sweep.back();
    r.check(std::abs(tail.mean) <= 3.0 * tail.std_error, "eps2b(1000) consistent with 0 within 3 stderr");
    bool monotone = true;
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        const double rise = std::abs(sweep[i].mean) - std::abs(sweep[i - 1].mean);
        monotone = monotone && rise <= combined(sweep[i].std_error, sweep[i - 1].std_error);
    }
    r.check(monotone, "|eps2b| non-increasing across tau in {0,1,10,100,1000} up to 1 sigma");
    return r.done();
}

CriterionResult reality(const Options& opts) {
    Report r(6, "reality of the phase-deformed term and direction isotropy");
    // The fixed-direction phase is 2 tau theta_hat.(q x (k-p)); its direction
    // average is sinc(2 tau |q x (k-p)|). ThetaVector tau = 1/2 therefore
    // corresponds to the averaged kernel at tau = 1.
    const ThetaVector theta(Vec3{1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0}, 0.5 * kDirectionTau);
    const auto cfg = sampler(kSweepSamples, opts.seed);
    const PhaseEstimate phase = eps2b_phase(theta, cfg, opts.workers);
    const IntegralEstimate cosine = eps2b_cos(theta, cfg, opts.workers);
    r.note("Re = " + num(phase.real.mean) + " +- " + num(phase.real.std_error) + ", Im = " + num(phase.imag.mean) +
           " +- " + num(phase.imag.std_error));
    r.check(std::abs(phase.imag.mean) <= 3.0 * phase.imag.std_error, "imaginary part consistent with 0 within 3 stderr");
    r.check(same_bits(phase.real, cosine), "real part byte-identical to the cosine estimator");

    const auto dirs = random_directions(kDirectionCount, opts.seed + 1);
    std::vector<ThetaVector> thetas;
    for (const auto& d : dirs) thetas.emplace_back(d, 0.5 * kDirectionTau);
    const std::vector<Kernel> kernels{
        [&thetas](const PhasePoint& pt) {
            double s = 0.0;
            for (const auto& t : thetas) s += kernel_cos(pt, t);
            return s / static_cast<double>(thetas.size());
        },
        [](const PhasePoint& pt) { return kernel_avg(pt, kDirectionTau); },
    };
    const auto cfg_dir = sampler(kDirectionSamples, opts.seed);
    auto est = estimate_sweep(kernels, cfg_dir, opts.workers);
    const double pref = analytic_constants().prefactor;
    const auto fixed = est[0].scaled(pref), averaged = est[1].scaled(pref);
    r.note("20-direction mean = " + num(fixed.mean) + " +- " + num(fixed.std_error) + ", sinc-averaged = " +
           num(averaged.mean) + " +- " + num(averaged.std_error));
    r.check(std::abs(fixed.mean - averaged.mean) <= 3.0 * combined(fixed.std_error, averaged.std_error),
            "direction mean agrees with sinc-averaged estimate within 3 combined sigma");
    return r.done();
}

CriterionResult estimator_soundness(const Options& opts) {
    Report r(7, "estimator soundness: closed forms, 1/sqrt(N) scaling, oracle agreement");
    constexpr double kBall = 4.0 * pi / 3.0;
    struct TestIntegral {
        const char* name;
        Kernel kernel;
        double exact;
    };
    const std::vector<TestIntegral> tests{
        {"shell", [](const PhasePoint& pt) {
             const double q2 = norm2(pt.q);
             return (norm2(pt.k) < 1.0 && norm2(pt.p) < 1.0 && q2 > 1.0 && q2 < 4.0) ? 1.0 : 0.0;
         }, kBall * kBall * kBall * 7.0},
        {"gaussian", [](const PhasePoint& pt) {
             return std::exp(-0.5 * (norm2(pt.q) + norm2(pt.k) + norm2(pt.p)));
         }, 154.31748262378764},
        {"polynomial", [](const PhasePoint& pt) {
             return norm2(pt.q) < 1.0 ? (1.0 + pt.k.x * pt.k.x) * pt.p.z * pt.p.z : 0.0;
         }, 17.639126289237231},
    };
    std::vector<Kernel> kernels;
    for (const auto& t : tests) kernels.push_back(t.kernel);
    std::vector<int> hits(tests.size(), 0);
    for (int rep = 0; rep < kSoundnessRepetitions; ++rep) {
        const auto est = estimate_sweep(kernels, sampler(kSoundnessSamples, opts.seed + 1000 + rep), opts.workers);
        for (std::size_t j = 0; j < tests.size(); ++j) {
            hits[j] += std::abs(est[j].mean - tests[j].exact) <= 3.0 * est[j].std_error ? 1 : 0;
        }
    }
    for (std::size_t j = 0; j < tests.size(); ++j) {
        r.check(hits[j] >= kSoundnessRequired,
                std::string(tests[j].name) + " integral within 3 sigma in " + std::to_string(hits[j]) + "/100 runs");
    }

    const auto small = estimate(kernel_comm, sampler(kScalingSamples, opts.seed), opts.workers);
    const auto large = estimate(kernel_comm, sampler(4 * kScalingSamples, opts.seed), opts.workers);
    const double ratio = large.std_error / small.std_error;
    r.check(ratio >= 0.4 && ratio <= 0.6, "stderr(4N)/stderr(N) = " + num(ratio) + " in [0.4, 0.6]");

    const ThetaVector theta(Vec3{0.0, 0.6, 0.8}, 0.5);
    const std::vector<std::pair<const char*, Kernel>> physics{
        {"kernel_comm", kernel_comm},
        {"kernel_cos", [theta](const PhasePoint& pt) { return kernel_cos(pt, theta); }},
        {"kernel_avg", [](const PhasePoint& pt) { return kernel_avg(pt, 1.0); }},
        {"kernel_r", kernel_r},
    };
    std::vector<Kernel> physics_kernels;
    for (const auto& p : physics) physics_kernels.push_back(p.second);
    const auto main_est = estimate_sweep(physics_kernels, sampler(kSweepSamples, opts.seed), opts.workers);
    auto ocfg = sampler(kOracleSamples, opts.seed);
    ocfg.oracle_box = kOracleBox;
    for (std::size_t j = 0; j < physics.size(); ++j) {
        const auto oracle = oracle_estimate(physics[j].second, ocfg, opts.workers);
        // Only the R integrand decays slowly enough (Q^-2) for the cube to
        // truncate visibly; its leading tail is added back analytically.
        const double tail = j == 3 ? r_cube_tail(kOracleBox) : 0.0;
        const double gap = std::abs(main_est[j].mean - (oracle.mean + tail));
        const double allowed = 3.0 * combined(main_est[j].std_error, oracle.std_error) +
                               kTruncationAllowance * std::abs(main_est[j].mean);
        r.check(gap <= allowed, std::string(physics[j].first) + ": estimate " + num(main_est[j].mean) + " vs oracle " +
                                    num(oracle.mean) + (j == 3 ? " + tail " + num(tail) : std::string()) + " +- " +
                                    num(oracle.std_error));
    }
    return r.done();
}

CriterionResult determinism(const Options& opts) {
    Report r(8, "end-to-end determinism across runs and worker counts");
    RunConfig cfg;
    cfg.rs_grid = {0.5, 1.0, 2.0};
    cfg.tau_grid = {0.0, 0.05, 0.1, 1.0};
    cfg.sampler = sampler(500'000, opts.seed);
    cfg.sampler.batch_size = 4096;
    cfg.outputs = {"results.csv", "plot.svg", "manifest.json"};
    const auto ref = run_sweep(cfg, {.workers = 1});
    r.check(ref.complete, "reference run completed");
    for (unsigned workers : {1u, 4u, 16u}) {
        const auto run = run_sweep(cfg, {.workers = workers});
        r.check(run.csv == ref.csv && run.svg == ref.svg && run.manifest == ref.manifest,
                "CSV, SVG and manifest identical with " + std::to_string(workers) + " worker(s)");
    }
    return r.done();
}

const std::vector<Criterion>& all_criteria() {
    static const std::vector<Criterion> criteria{commutative_value, energy_coefficients, zero_tau_reduction,
                                                 small_tau_law,     large_tau_decay,    reality,
                                                 estimator_soundness, determinism};
    return criteria;
}

std::vector<CriterionResult> run_all(const Options& opts, const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    for (const auto& criterion : all_criteria()) {
        out.push_back(criterion(opts));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& result) {
    std::string out = std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) + " " +
                      result.title + "\n";
    for (const auto& d : result.details) out += "         " + d + "\n";
    return out;
}

} // namespace ncgas::acceptance
