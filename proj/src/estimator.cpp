#include "ncgas/estimator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ncgas/errors.hpp"

namespace ncgas {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

IntegralEstimate finish(const Moments& m, std::uint64_t in_domain) noexcept {
    IntegralEstimate out;
    out.mean = m.mean;
    out.n_samples = m.count;
    out.n_in_domain = in_domain;
    out.acceptance_rate = m.count == 0 ? 0.0 : static_cast<double>(in_domain) / static_cast<double>(m.count);
    if (m.count > 1) {
        const double variance = m.m2 / static_cast<double>(m.count - 1);
        out.std_error = std::sqrt(variance / static_cast<double>(m.count));
    }
    return out;
}

} // namespace

IntegralEstimate IntegralEstimate::scaled(double factor) const noexcept {
    IntegralEstimate out = *this;
    out.mean *= factor;
    out.std_error *= std::abs(factor);
    return out;
}

Moments Moments::of(std::span<const double> terms) noexcept {
    Moments m;
    m.count = terms.size();
    if (terms.empty()) return m;
    CompensatedSum sum;
    for (double t : terms) sum.add(t);
    m.mean = sum.value() / static_cast<double>(terms.size());
    CompensatedSum sq;
    for (double t : terms) {
        const double d = t - m.mean;
        sq.add(d * d);
    }
    m.m2 = sq.value();
    return m;
}

Moments Moments::merge(const Moments& a, const Moments& b) noexcept {
    if (a.count == 0) return b;
    if (b.count == 0) return a;
    Moments m;
    m.count = a.count + b.count;
    const double na = static_cast<double>(a.count);
    const double nb = static_cast<double>(b.count);
    const double n = static_cast<double>(m.count);
    const double delta = b.mean - a.mean;
    m.mean = a.mean + delta * (nb / n);
    m.m2 = a.m2 + b.m2 + delta * delta * (na * nb / n);
    return m;
}

Moments Moments::reduce_tree(std::span<const Moments> blocks) noexcept {
    if (blocks.empty()) return {};
    if (blocks.size() == 1) return blocks.front();
    const std::size_t half = blocks.size() / 2;
    return merge(reduce_tree(blocks.first(half)), reduce_tree(blocks.subspan(half)));
}

namespace detail {

unsigned resolve_workers(unsigned requested, std::uint64_t n_batches) noexcept {
    unsigned w = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(1, n_batches)));
}

void parallel_batches(std::uint64_t n_batches, unsigned workers, const std::function<void(std::uint64_t)>& body) {
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const std::uint64_t batch = next.fetch_add(1, std::memory_order_relaxed);
            if (batch >= n_batches) return;
            try {
                body(batch);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
                return;
            }
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run);
    }
    if (error) std::rethrow_exception(error);
}

} // namespace detail

std::vector<IntegralEstimate> estimate_sweep(std::span<const Kernel> kernels, const SamplerConfig& config,
                                             unsigned workers) {
    if (kernels.empty()) throw ValidationError("estimate_sweep needs at least one kernel");
    if (config.n_samples == 0) throw BudgetExhaustedError("sample budget is zero");
    config.validate();

    const std::size_t n_kernels = kernels.size();
    const std::uint64_t batch = config.batch_size;
    const std::uint64_t n_batches = (config.n_samples + batch - 1) / batch;

    // moments[b * n_kernels + j]
    std::vector<Moments> moments(n_batches * n_kernels);
    std::vector<std::uint64_t> domain_hits(n_batches, 0);

    detail::parallel_batches(n_batches, detail::resolve_workers(workers, n_batches), [&](std::uint64_t b) {
        const std::uint64_t begin = b * batch;
        const std::uint64_t end = std::min(config.n_samples, begin + batch);
        const std::size_t len = end - begin;
        std::vector<double> terms(len * n_kernels);
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            const SampleDraw draw = sample_point(i, config.seed, config.q_tail_scale);
            hits += in_domain(draw.point) ? 1 : 0;
            for (std::size_t j = 0; j < n_kernels; ++j) {
                const double f = kernels[j](draw.point);
                const double t = f * draw.weight;
                if (!std::isfinite(t)) {
                    throw NonFiniteKernelError("kernel " + std::to_string(j) + " returned a non-finite value at sample " +
                                               std::to_string(i));
                }
                terms[j * len + (i - begin)] = t;
            }
        }
        for (std::size_t j = 0; j < n_kernels; ++j) {
            moments[b * n_kernels + j] = Moments::of(std::span<const double>(terms).subspan(j * len, len));
        }
        domain_hits[b] = hits;
    });

    std::uint64_t total_in_domain = 0;
    for (auto h : domain_hits) total_in_domain += h;

    std::vector<IntegralEstimate> out;
    out.reserve(n_kernels);
    std::vector<Moments> column(n_batches);
    for (std::size_t j = 0; j < n_kernels; ++j) {
        for (std::uint64_t b = 0; b < n_batches; ++b) column[b] = moments[b * n_kernels + j];
        out.push_back(finish(Moments::reduce_tree(column), total_in_domain));
    }
    return out;
}

IntegralEstimate estimate(const Kernel& kernel, const SamplerConfig& config, unsigned workers) {
    return estimate_sweep(std::span<const Kernel>(&kernel, 1), config, workers).front();
}

} // namespace ncgas
