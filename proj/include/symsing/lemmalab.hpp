#pragma once

// Executable checks for the rank-reduction, decoupling, structural and
// anti-concentration lemmas, the Halasz inequality over F_p, the parameter
// schedule, and the final bound assembly.

#include "symsing/anticon.hpp"
#include "symsing/fpcore.hpp"
#include "symsing/matcore.hpp"
#include "symsing/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace symsing {

using Witness = std::variant<IntVector, FpVector, IntMatrix>;

/// "(1,-1,0)" for vectors, "[[1,1],[1,1]]" for matrices.
std::string witness_string(const Witness& w);

struct EventVerdict {
    std::string event;
    bool verdict = true;
    /// Present only when verdict is false.
    std::optional<Witness> witness;
    /// Set when a sup over mu in [0, 1/2] was replaced by a finite grid.
    bool grid_approximate = false;
};

struct Interval {
    double lo = 0;
    double hi = 1;
};

/// Wilson score interval for `successes` out of `trials`; trials > 0.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

// ---------------------------------------------------------------------------
// Rank reduction

struct OdlyzkoReport {
    std::uint64_t count = 0;  // +-1 vectors in the span
    std::size_t dimension = 0;
    Integer bound;            // 2^dimension
    bool ok = false;
};

inline constexpr std::size_t kMaxOdlyzkoDim = 20;

/// Counts the +-1 vectors of length n lying in the rational span of basis.
OdlyzkoReport odlyzko_check(std::span<const IntVector> basis, std::size_t n);

struct RankStepReport {
    std::size_t n = 0;
    std::size_t ell = 0;
    bool exhaustive = false;
    std::uint64_t conditioned = 0;  // samples with rank(M_n) = ell
    std::uint64_t successes = 0;    // of those, rank(M_{n+1}) = ell + 2
    Rational frequency;
    Rational bound;                 // 1 - 2^{-n+ell}
    Interval wilson;                // z = 3; degenerate in exhaustive mode
    bool ok = false;
};

/// M_n is the top-left block of M_{n+1}; the conditioning is by filtering.
/// Requires ell + 2 <= n.
RankStepReport rank_step_exhaustive(std::size_t n, std::size_t ell);
RankStepReport rank_step_sampled(std::size_t n, std::size_t ell, std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers = 1);

/// x_1 det(A) - sum_{i,j} c_ij x_i x_j for M = [[x_1, x^T], [x, A]], with c_ij
/// the cofactors of A.
Integer laplace_expansion(const IntMatrix& m);

/// [[x1, x^T], [x, A]]
IntMatrix bordered(const Integer& x1, const IntVector& x, const IntMatrix& a);

struct AdjugateFactorization {
    Rational lambda;   // adj(A) = lambda a a^T
    IntVector a;       // primitive, first nonzero coordinate positive, A a = 0
    /// det [[x1, x^T], [x, A]] = det_scale (a.x)^2; equals -lambda.
    Rational det_scale;
};

/// A symmetric of corank exactly 1.
AdjugateFactorization adjugate_factorization(const IntMatrix& a);

/// sum_{j in U2} w_j col_j(adj A). A invertible; indices zero-based and
/// distinct, w aligned with u2 as given.
IntVector r_vector(const IntMatrix& a, std::span<const std::size_t> u2, const IntVector& w);

// ---------------------------------------------------------------------------
// Decoupling

struct DecouplingReport {
    Rational lhs;  // Pr[E]^4
    Rational rhs;  // Pr[E(Y,Z) E(Y',Z) E(Y,Z') E(Y',Z')]
    bool ok = false;
};

using EventPredicate = std::function<bool(std::size_t y, std::size_t z)>;

/// Y and Z independent with the given finite marginals.
DecouplingReport decoupling_check(std::span<const Rational> py, std::span<const Rational> pz,
                                  const EventPredicate& event);
/// joint[i][j] = Pr[Y = y_i, Z = z_j]; rejected unless it is a product law.
DecouplingReport decoupling_check(const std::vector<std::vector<Rational>>& joint, const EventPredicate& event);

// ---------------------------------------------------------------------------
// Events

/// Every nonzero integer kernel vector of A has grid-sup atom probability at
/// most rho. Only corank <= 1 is supported.
EventVerdict null_event_check(const IntMatrix& a, const Rational& rho, std::span<const MuParam> grid);

/// Budget on p^n for the F_p event sweeps.
inline constexpr std::uint64_t kEventSpaceBudget = 1'000'000;

/// No nonzero a in F_p^n orthogonal to at least n - beta_n rows of M has
/// grid-sup atom probability above alpha.
EventVerdict orth_event_check(const SymMatrix& m, const Rational& alpha, std::size_t beta_n,
                              const PrimeField& field, std::span<const MuParam> grid);

/// Every nonzero a in F_p^n orthogonal to at least n - beta_n rows of M has
/// support of size at least d.
EventVerdict spt_event_check(const SymMatrix& m, std::size_t d, std::size_t beta_n, const PrimeField& field);

/// Fraction of all n x n symmetric matrices failing the F_p orthogonality
/// event. Descriptive only.
Rational orth_failure_frequency(std::size_t n, const Rational& alpha, std::size_t beta_n, const PrimeField& field,
                                std::span<const MuParam> grid);

struct EntropyReport {
    Integer sum;   // sum_{t <= beta n} C(n, t)
    double bound;  // 2^{n H(beta)}
    bool ok = false;
};

/// 0 <= beta <= 1/2.
EntropyReport entropy_bound(const Rational& beta, std::size_t n);

double binary_entropy(double x);

// ---------------------------------------------------------------------------
// Halasz over F_p

struct HalaszReport {
    Rational lhs;      // grid max over mu of rho_mu(a) over F_p
    MuParam lhs_mu = MuParam::zero();
    Integer rk;
    /// R_k / (4^k n^{2k} sqrt f), the coefficient of C.
    double x_term = 0;
    double tail = 0;   // e^{-f/2}
    double rhs = 0;    // 1/p + C x_term + tail
    /// Smallest C >= 0 with lhs <= rhs on this instance.
    double c_min = 0;
    bool vacuous = false;  // rhs >= 1
    bool holds = false;    // lhs <= rhs at the probe constant
    bool grid_approximate = true;
};

HalaszReport halasz_check(const FpVector& a, unsigned k, const Rational& f, double c_probe,
                          std::span<const MuParam> grid);

struct HalaszUsable {
    bool as_printed = false;  // p <= min{e^{-s1/2k}, (4k/s1)^k}
    bool inverted = false;    // p <= min{e^{s1/2k}, (s1/4k)^k}
};

/// Both readings of the admissibility condition on p. The printed one is empty
/// for p >= 2 whenever k <= s1; the inverted one is what the checks use.
HalaszUsable halasz_usable(std::uint64_t p, unsigned k, std::size_t s1);

// ---------------------------------------------------------------------------
// Parameters and assembly

struct ParamSchedule {
    std::uint64_t n = 0;
    std::uint64_t k = 0;       // floor(n^{1/4})
    std::uint64_t s1 = 0;      // floor(n^{1/2} log n)
    std::uint64_t s2 = 0;      // floor(n^{3/4} sqrt(log n))
    std::uint64_t beta_n = 0;  // floor(n^{1/4} sqrt(log n) / 128)
    std::uint64_t d = 0;       // floor(n^{2/3})
    double log2_alpha = 0;     // -n^{1/4} sqrt(log n) / 64
    double alpha = 0;
    double log2_p_nominal = 0; // n^{1/4} sqrt(log n) / 32
    /// next_prime_in_doubling(max(3, ceil(nominal p))) while nominal p <= 2^62.
    std::optional<std::uint64_t> p;
    double log2_target = 0;    // -n^{1/4} sqrt(log n) / 1000
};

/// Natural logarithms throughout; n >= 2.
ParamSchedule param_schedule(std::uint64_t n);

/// alpha + p_null + (2^{beta_n} alpha + 2^{1 - beta_n} + p_orth)^{1/4}, clipped
/// to [0, 1]. beta_n may be +infinity.
double assemble_bound(double alpha, double beta_n, double p_orth_fail, double p_null_fail);

}  // namespace symsing
