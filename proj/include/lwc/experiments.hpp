#pragma once

#include "lwc/config_model.hpp"
#include "lwc/neighborhood.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lwc::experiments {

// runs f(0..count-1) on up to `threads` workers; results land by index
template <class T>
std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)>& f) {
    std::vector<T> out(count);
    std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

// ---- cycle statistics in CM(D) --------------------------------------------

struct CycleRow {
    int length = 0;
    double mean = 0;
    double std_error = 0;
    double intensity = 0;  // limiting mean from the pattern intensity
};

struct CycleReport {
    int n = 0, d = 0, samples = 0;
    std::vector<CycleRow> rows;
    long simple = 0;        // samples with no loop or multi-edge
    double alpha_target = 0;  // exp(-lambda_1 - lambda_2)
    double acceptance() const { return samples ? static_cast<double>(simple) / samples : 0.0; }
    double acceptance_sigma() const;
};

// number of l-cycles (3 <= l), weighting parallel edges multiplicatively
long count_cycles(const Multigraph& G, int length);

CycleReport cycles(int n, int d, int samples, int max_length, std::uint64_t seed, int threads = 1);

// ---- local convergence -----------------------------------------------------

struct ConvergeRow {
    int n = 0;
    double tv = 0;
    double acceptance = 0;
};

// degree sequence on n vertices whose degree frequencies are exactly P (n * P(k) integral)
DegreeSequence sequence_for(const ExactLaw& P, int n);

// TV between the sample mean of U(G_n)_depth, G_n uniform in G(D_n, girth_h), and marginal_ugw(P, depth)
std::vector<ConvergeRow> converge(const ExactLaw& P, const std::vector<int>& n_list, int samples, int depth, int girth_h,
                                  std::uint64_t seed, int threads = 1);

// ---- concentration ----------------------------------------------------------

struct TailPoint {
    double t = 0;
    double empirical = 0;
    double envelope = 0;  // 2 exp(-delta n t^2)
};

struct ConcentrationRow {
    int n = 0;
    double mean = 0, sd = 0;
    double scale = 0;  // sd * sqrt(n)
    std::vector<TailPoint> tail;
};

struct ConcentrationReport {
    int d = 0, samples = 0;
    double kappa = 0, delta = 0;
    std::vector<ConcentrationRow> rows;
};

// frequency of the simple d-star depth-1 class in CM of the d-regular sequence
ConcentrationReport concentrate(int d, const std::vector<int>& n_list, int samples, std::uint64_t seed, int threads = 1);

}  // namespace lwc::experiments
