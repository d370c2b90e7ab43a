#pragma once

// Signed-sum solution counts R_k and R_k^*, level sets of the character-sum
// energy, and the "bad vector" sets whose every large sub-vector is additively
// rich, with exact enumeration of their sizes.

#include "symsing/fpcore.hpp"
#include "symsing/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace symsing {

/// Tuple budget n^{2k} 4^k for the brute-force counters.
inline constexpr std::uint64_t kBruteForceBudget = 100'000'000;

/// Number of (i_1..i_2k, eps) in [n]^{2k} x {+-1}^{2k} with sum eps_j a_{i_j} = 0
/// mod p, by direct enumeration. Throws BudgetExceeded past kBruteForceBudget.
Integer rk_bruteforce(const FpVector& a, unsigned k);

/// Same count as rk_bruteforce: the k-fold cyclic self-convolution N of the
/// step-count function, then sum_x N(x) N(-x).
Integer rk_convolution(const FpVector& a, unsigned k);

/// Solutions in which some index occurs exactly once, by enumeration.
Integer rk_star(const FpVector& a, unsigned k);

/// rk_convolution minus the solutions where every index repeats; no tuple
/// enumeration.
Integer rk_star_convolution(const FpVector& a, unsigned k);

/// (1/p) sum_kappa (sum_j 2 cos(2 pi kappa a_j / p))^{2k} in double precision.
/// Diagnostic only; rk_convolution is the source of truth.
double rk_fourier(const FpVector& a, unsigned k);

struct RkGapReport {
    Integer rk;
    Integer rk_star;
    Integer slack;  // (16k)^k n^k
    bool ok = false;
};

/// Checks R_k <= R_k^* + (16k)^k n^k. Requires 1 <= k <= n.
RkGapReport check_rk_gap(const FpVector& a, unsigned k);

/// Residues kappa with sum_j ||kappa a_j / p||^2 <= t, ascending.
std::vector<std::uint32_t> level_set(const FpVector& a, const Rational& t);
std::size_t level_set_size(const FpVector& a, const Rational& t);

/// Budget on (m-1) * p * |T_t| for the iterated-sumset construction.
inline constexpr std::uint64_t kSumsetBudget = 10'000'000;

struct SumsetReport {
    std::size_t level_size = 0;      // |T_t|
    std::size_t sumset_size = 0;     // |m T_t|
    std::size_t wide_level_size = 0; // |T_{m^2 t}|
    bool contained = false;          // m T_t within T_{m^2 t}
    bool small_threshold = false;    // t < |supp(a)| / 100
    bool level_below_p = true;       // |T_t| < p, checked when small_threshold
    bool ok() const { return contained && level_below_p; }
};

SumsetReport check_sumset_containment(const FpVector& a, const Rational& t, unsigned m);

enum class BadSetMode {
    /// Every sub-vector on an index subset of size >= s.
    Global,
    /// Support of size exactly d, and every subset of the support with size in
    /// [s1, s2].
    Window,
};

struct BadSetParams {
    unsigned k = 1;
    std::size_t s1 = 1;
    std::size_t s2 = 1;
    std::size_t d = 0;
    std::uint64_t t = 1;

    static BadSetParams global(unsigned k, std::size_t s, std::uint64_t t) { return {k, s, s, 0, t}; }
    static BadSetParams window(unsigned k, std::size_t s1, std::size_t s2, std::size_t d, std::uint64_t t)
    {
        return {k, s1, s2, d, t};
    }

    /// Throws std::invalid_argument unless k >= 1, t >= 1, 1 <= s1 <= s2 <= n
    /// (global mode checks only 1 <= s1 <= n), and in window mode 1 <= d <= n.
    void validate(std::size_t n, BadSetMode mode) const;
};

/// Subset budget for is_bad_vector.
inline constexpr std::uint64_t kSubsetBudget = 1'000'000;

/// True iff every qualifying sub-vector b has R_k^*(b) p >= t 4^k |b|^{2k}.
/// Subsets are visited by size, then lexicographically, stopping at the first
/// failure. In window mode a vector whose support is not of size d is not bad.
bool is_bad_vector(const FpVector& a, const BadSetParams& params, BadSetMode mode);

/// Bad-set size by full enumeration of F_p^n (p^n <= 10^6).
struct BadSetCount {
    Integer count;
    /// Paper-form upper bound as a double (for reporting).
    double bound = 0;
    /// count <= bound, decided in exact integer arithmetic.
    bool within_bound = false;
    /// Every vector bad at t + 1 was also bad at t.
    bool monotone_in_t = true;
};

inline constexpr std::uint64_t kSpaceBudget = 1'000'000;

/// Workers split the space by first coordinate and sum their counts.
BadSetCount enumerate_bad_set(std::size_t n, const PrimeField& field, const BadSetParams& params, BadSetMode mode,
                              unsigned workers = 1);

/// (s/n)^{2k-1} p^n t^{-n+s}
double counting_lemma_bound(std::uint64_t p, std::size_t n, unsigned k, std::size_t s, std::uint64_t t);
bool counting_lemma_holds(const Integer& count, std::uint64_t p, std::size_t n, unsigned k, std::size_t s,
                          std::uint64_t t);

/// C(n,d) p^{d+s2} t^{-d+s1 d/s2}
double corollary_bound(std::uint64_t p, std::size_t n, std::size_t d, std::size_t s1, std::size_t s2,
                       std::uint64_t t);
bool corollary_holds(const Integer& count, std::uint64_t p, std::size_t n, std::size_t d, std::size_t s1,
                     std::size_t s2, std::uint64_t t);

/// Richness threshold value meaning "bad for every t" (no qualifying subset).
inline constexpr std::uint64_t kUnboundedThreshold = std::numeric_limits<std::uint64_t>::max();

/// Distribution of the largest admissible t over all vectors of a space.
/// A vector with threshold T lies in the bad set for exactly the t <= T.
struct ThresholdProfile {
    std::map<std::uint64_t, Integer> histogram;
    Integer total;

    /// |B_{>= t}|
    Integer count_at_least(std::uint64_t t) const;
    /// 1 and every finite threshold above 1. Since |B_{>= t}| is constant on
    /// each gap between consecutive thresholds, a non-increasing bound holds
    /// for all finite t iff it holds at these points.
    std::vector<std::uint64_t> critical_points() const;
    /// Some vector is bad for every t.
    bool unbounded() const;
};

/// Precomputed per-size richness minima for every vector of a space, grouped
/// into orbits under coordinate permutation or nonzero scaling (both preserve
/// R_k^* of every sub-vector), so that bad-set sizes for all (s, t) or
/// (s1, s2, t) come from one pass.
class BadSetSurvey {
public:
    enum class Orbits { Auto, Scaling, Multisets, None };

    /// All of F_p^n (global mode).
    static BadSetSurvey global(std::size_t n, const PrimeField& field, unsigned k, Orbits orbits = Orbits::Auto);
    /// Vectors of (F_p^*)^d; window profiles scale by C(n, d).
    static BadSetSurvey window(std::size_t d, const PrimeField& field, unsigned k, Orbits orbits = Orbits::Auto);

    std::size_t length() const noexcept { return length_; }
    std::uint32_t modulus() const noexcept { return p_; }
    unsigned k() const noexcept { return k_; }
    std::size_t representatives() const noexcept { return weights_.size(); }

    ThresholdProfile profile_global(std::size_t s) const;
    ThresholdProfile profile_window(std::size_t n, std::size_t s1, std::size_t s2) const;

private:
    static BadSetSurvey build(std::size_t len, std::uint32_t lo, const PrimeField& field, unsigned k, Orbits orbits);

    std::size_t length_ = 0;
    std::uint32_t p_ = 0;
    unsigned k_ = 1;
    // minima_[r][j] = min over size-j sub-vectors b of rep r of
    // floor(R_k^*(b) p / (4^k j^{2k})), j = 1..length_.
    std::vector<std::vector<std::uint64_t>> minima_;
    std::vector<Integer> weights_;
};

}  // namespace symsing
