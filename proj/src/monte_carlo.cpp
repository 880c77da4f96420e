#include "birkhoff/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace birkhoff {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Fill one solid-simplex point of dimension d into out[0..d).
void sample_simplex_row(int d, UnitSampler& rng, double* out) {
    double u[8];
    for (int i = 0; i < d; ++i) u[i] = rng.next();
    std::sort(u, u + d);
    double prev = 0.0;
    for (int i = 0; i < d; ++i) {
        out[i] = u[i] - prev;  // spacings; the last spacing 1-u[d-1] is dropped
        prev = u[i];
    }
}

std::uint64_t run_chunk(int n, std::uint64_t trials, std::uint64_t chunk_seed) {
    int d = n - 1;
    UnitSampler rng(chunk_seed);
    std::vector<double> m(static_cast<std::size_t>(d) * d);
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < trials; ++k) {
        for (int i = 0; i < d; ++i) sample_simplex_row(d, rng, m.data() + i * d);
        if (is_in_A(m, n)) ++hits;
    }
    return hits;
}

}  // namespace

std::vector<double> sample_row_stochastic(int n, UnitSampler& rng) {
    if (n < 2 || n > 8) throw std::invalid_argument("sample_row_stochastic: order must be in 2..8");
    int d = n - 1;
    std::vector<double> m(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i) sample_simplex_row(d, rng, m.data() + i * d);
    return m;
}

bool is_in_A(const std::vector<double>& m, int n) {
    int d = n - 1;
    if (m.size() != static_cast<std::size_t>(d) * d)
        throw std::invalid_argument("is_in_A: matrix must be (n-1)x(n-1)");
    double total = 0.0;
    for (int j = 0; j < d; ++j) {
        double col = 0.0;
        for (int i = 0; i < d; ++i) col += m[static_cast<std::size_t>(i) * d + j];
        if (col > 1.0) return false;
        total += col;
    }
    return total >= static_cast<double>(n - 2);
}

SampleReport estimate_alpha(int n, std::uint64_t trials, std::uint64_t seed, int partitions,
                            int threads) {
    if (n < 2 || n > 8) throw std::invalid_argument("estimate_alpha: order must be in 2..8");
    if (trials < 1) throw std::invalid_argument("estimate_alpha: trials must be >= 1");
    if (partitions < 1) partitions = 1;
    if (static_cast<std::uint64_t>(partitions) > trials)
        partitions = static_cast<int>(trials);

    // chunk p gets trials/partitions, the first trials%partitions get one extra
    std::vector<std::uint64_t> chunk_trials(partitions, trials / partitions);
    for (std::uint64_t p = 0; p < trials % partitions; ++p) ++chunk_trials[p];

    // hash the master seed before indexing, so nearby seeds cannot
    // produce permutations of the same chunk-seed set
    std::uint64_t stream_base = splitmix64(seed);
    std::vector<std::uint64_t> chunk_hits(partitions, 0);
    auto work = [&](int p) {
        chunk_hits[p] = run_chunk(n, chunk_trials[p],
                                  splitmix64(stream_base + static_cast<std::uint64_t>(p)));
    };
    if (threads <= 1 || partitions == 1) {
        for (int p = 0; p < partitions; ++p) work(p);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int p = next.fetch_add(1);
                if (p >= partitions) break;
                work(p);
            }
        };
        std::vector<std::thread> pool;
        int nthreads = std::min(threads, partitions);
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SampleReport r;
    r.n = n;
    r.trials = trials;
    for (int p = 0; p < partitions; ++p) r.hits += chunk_hits[p];
    r.alpha_hat = static_cast<double>(r.hits) / static_cast<double>(trials);
    r.stderr_est = std::sqrt(r.alpha_hat * (1.0 - r.alpha_hat) / static_cast<double>(trials));
    r.seed = seed;
    r.partitions = partitions;
    return r;
}

BigRational exact_alpha(int n, const BigInt& relvol) {
    if (n < 1 || n > 8) throw std::invalid_argument("exact_alpha: order must be in 1..8");
    unsigned d = static_cast<unsigned>((n - 1) * (n - 1));
    return BigRational(relvol * ipow(factorial(static_cast<unsigned>(n - 1)),
                                     static_cast<unsigned>(n - 1)),
                       factorial(d));
}

}  // namespace birkhoff
