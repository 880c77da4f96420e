#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "birkhoff/bigint.hpp"

namespace birkhoff {

// Result of a Monte Carlo estimate of alpha_n = vol(A_n)/vol(C_n),
// where C_n is the product of n-1 solid unit simplices (rows of an
// (n-1)x(n-1) nonnegative matrix with row sums <= 1) and A_n the subset
// with column sums <= 1 and total entry sum >= n-2 (the truncated image
// of B_n).  Fully reproducible: a function of (n, trials, seed,
// partitions) only.
struct SampleReport {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double alpha_hat = 0.0;
    double stderr_est = 0.0;  // sqrt(alpha_hat (1 - alpha_hat) / trials)
    std::uint64_t seed = 0;
    int partitions = 1;
    std::string rng = "mt19937_64/splitmix64";

    BigRational alpha_exact_ratio() const { return BigRational(hits, trials); }
};

// mt19937_64 with an explicit u64 -> [0,1) mapping; std::uniform_real_
// distribution is implementation-defined, which would break seed
// reproducibility across platforms.
class UnitSampler {
  public:
    explicit UnitSampler(std::uint64_t seed) : rng_(seed) {}
    double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 rng_;
};

// One point of C_n: each of the n-1 rows drawn uniformly from the solid
// unit simplex {x >= 0 : sum x <= 1} in dimension n-1, via spacings of
// sorted uniforms.  Row-major (n-1)x(n-1).
std::vector<double> sample_row_stochastic(int n, UnitSampler& rng);

// Membership in A_n: all column sums <= 1 and total entry sum >= n-2
// (row sums hold by construction).  Exact comparisons; the boundary has
// measure zero.
bool is_in_A(const std::vector<double>& m, int n);

// Monte Carlo estimate of alpha_n.  Trials are split into `partitions`
// chunks with independent seed streams derived from the master seed, so
// the result is identical for a fixed partition count no matter how
// many threads execute the chunks.
SampleReport estimate_alpha(int n, std::uint64_t trials, std::uint64_t seed, int partitions = 1,
                            int threads = 1);

// alpha_n from a known relative volume of B_n:
// relvol ((n-1)!)^(n-1) / ((n-1)^2)!.
BigRational exact_alpha(int n, const BigInt& relvol);

}  // namespace birkhoff
