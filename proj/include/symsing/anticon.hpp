#pragma once

// Exact mu-atom probabilities over Z and F_p, restrictions, and the Fourier
// (character-sum) upper bounds on them.

#include "symsing/fpcore.hpp"
#include "symsing/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace symsing {

/// Probability of a zero step, 0 <= mu <= 1/2.
class MuParam {
public:
    explicit MuParam(Rational mu);
    static MuParam zero() { return MuParam(Rational(0)); }
    static MuParam half() { return MuParam(Rational(1, 2)); }

    const Rational& value() const noexcept { return mu_; }

    friend bool operator==(const MuParam&, const MuParam&) = default;

private:
    Rational mu_;
};

/// {j / denominator : 0 <= j <= denominator / 2}. The default is j/64.
std::vector<MuParam> mu_grid(unsigned denominator = 64);

enum class Ring { Integers, PrimeField };

/// Exact law of a signed sum. Every mass is weight / denominator with a
/// shared integer denominator; the weights sum to the denominator exactly.
class ExactDist {
public:
    static ExactDist point_mass_integers();
    static ExactDist point_mass_fp(const PrimeField& field);

    Ring ring() const noexcept { return ring_; }
    /// Modulus for F_p laws, 0 for Z.
    std::uint32_t modulus() const noexcept { return p_; }
    const Integer& denominator() const noexcept { return den_; }

    Rational mass(const Integer& value) const;
    Rational max_mass() const;
    Rational total_mass() const;
    /// Values with nonzero mass, ascending (residues in [0, p) for F_p).
    std::vector<Integer> support_values() const;

    /// Convolves with {0: mu, +step: (1-mu)/2, -step: (1-mu)/2}.
    void add_step(const Integer& step, const MuParam& mu);
    void add_step(std::uint32_t residue, const MuParam& mu);

private:
    ExactDist() = default;

    Ring ring_ = Ring::Integers;
    std::uint32_t p_ = 0;
    Integer den_ = 1;
    std::map<Integer, Integer> sparse_;  // Z
    std::vector<Integer> dense_;         // F_p, length p
};

ExactDist walk_distribution(const IntVector& a, const MuParam& mu);
ExactDist walk_distribution(const FpVector& a, const MuParam& mu);

/// sup_c Pr[sum a_i x_i = c]; 1 for the empty vector.
Rational atom_probability(const IntVector& a, const MuParam& mu);
Rational atom_probability(const FpVector& a, const MuParam& mu);

/// Maximum of the atom probability over a finite mu grid. This approximates
/// the supremum over [0, 1/2] from below and is always flagged as such.
struct GridSup {
    Rational value;
    MuParam argmax = MuParam::zero();
    bool grid_approximate = true;
};

GridSup atom_probability_sup(const IntVector& a, std::span<const MuParam> grid);
GridSup atom_probability_sup(const FpVector& a, std::span<const MuParam> grid);

/// Subvector on the index set (zero-based, any order, no repeats), kept in
/// ascending index order.
IntVector restrict(const IntVector& a, std::span<const std::size_t> indices);
FpVector restrict(const FpVector& a, std::span<const std::size_t> indices);

/// Character-sum upper bounds on the F_p atom probability.
struct CharSumBound {
    /// (1/p) sum_k prod_j |mu + (1-mu) cos(2 pi k a_j / p)|
    double cosine = 0;
    /// (1/p) sum_k exp(-1/2 sum_j ||k a_j / p||^2)
    double exponential = 0;
};

/// Float slack for comparing CharSumBound values against exact rationals.
inline constexpr double kCharSumSlack = 1e-9;

CharSumBound char_sum_bound(const FpVector& a, const MuParam& mu);

}  // namespace symsing
