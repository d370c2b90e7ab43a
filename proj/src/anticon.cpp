#include "symsing/anticon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace symsing {

MuParam::MuParam(Rational mu) : mu_(std::move(mu))
{
    if (mu_ < 0 || mu_ > Rational(1, 2)) throw std::invalid_argument("mu must lie in [0, 1/2]");
}

std::vector<MuParam> mu_grid(unsigned denominator)
{
    if (denominator == 0) throw std::invalid_argument("mu grid denominator must be positive");
    std::vector<MuParam> grid;
    for (unsigned j = 0; 2 * j <= denominator; ++j) grid.emplace_back(Rational(j, denominator));
    return grid;
}

namespace {

// For mu = u/v in lowest terms one step has integer weights 2u (zero) and v-u
// (each sign) over the step denominator 2v.
struct StepWeights {
    Integer zero;
    Integer sign;
    Integer den;
};

StepWeights step_weights(const MuParam& mu)
{
    Integer u = boost::multiprecision::numerator(mu.value());
    Integer v = boost::multiprecision::denominator(mu.value());
    return {2 * u, v - u, 2 * v};
}

}  // namespace

ExactDist ExactDist::point_mass_integers()
{
    ExactDist d;
    d.ring_ = Ring::Integers;
    d.sparse_.emplace(Integer(0), Integer(1));
    return d;
}

ExactDist ExactDist::point_mass_fp(const PrimeField& field)
{
    ExactDist d;
    d.ring_ = Ring::PrimeField;
    d.p_ = field.modulus();
    d.dense_.assign(d.p_, Integer(0));
    d.dense_[0] = 1;
    return d;
}

Rational ExactDist::mass(const Integer& value) const
{
    if (ring_ == Ring::Integers) {
        auto it = sparse_.find(value);
        return it == sparse_.end() ? Rational(0) : Rational(it->second, den_);
    }
    Integer r = value % p_;
    if (r < 0) r += p_;
    return Rational(dense_[r.convert_to<std::size_t>()], den_);
}

Rational ExactDist::max_mass() const
{
    Integer best = 0;
    if (ring_ == Ring::Integers) {
        for (const auto& [v, w] : sparse_) best = std::max(best, w);
    } else {
        for (const auto& w : dense_) best = std::max(best, w);
    }
    return Rational(best, den_);
}

Rational ExactDist::total_mass() const
{
    Integer total = 0;
    if (ring_ == Ring::Integers) {
        for (const auto& [v, w] : sparse_) total += w;
    } else {
        for (const auto& w : dense_) total += w;
    }
    return Rational(total, den_);
}

std::vector<Integer> ExactDist::support_values() const
{
    std::vector<Integer> out;
    if (ring_ == Ring::Integers) {
        for (const auto& [v, w] : sparse_)
            if (w != 0) out.push_back(v);
    } else {
        for (std::size_t r = 0; r < dense_.size(); ++r)
            if (dense_[r] != 0) out.emplace_back(r);
    }
    return out;
}

void ExactDist::add_step(const Integer& step, const MuParam& mu)
{
    if (ring_ == Ring::PrimeField) {
        Integer r = step % p_;
        if (r < 0) r += p_;
        add_step(r.convert_to<std::uint32_t>(), mu);
        return;
    }
    const auto w = step_weights(mu);
    den_ *= w.den;
    if (step == 0) {
        for (auto& [v, m] : sparse_) m *= w.zero + 2 * w.sign;
        return;
    }
    std::map<Integer, Integer> next;
    for (const auto& [v, m] : sparse_) {
        if (w.zero != 0) next[v] += m * w.zero;
        next[v + step] += m * w.sign;
        next[v - step] += m * w.sign;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    sparse_ = std::move(next);
}

void ExactDist::add_step(std::uint32_t residue, const MuParam& mu)
{
    if (ring_ == Ring::Integers) {
        add_step(Integer(residue), mu);
        return;
    }
    if (residue >= p_) throw std::invalid_argument("residue outside [0, p)");
    const auto w = step_weights(mu);
    den_ *= w.den;
    if (residue == 0) {
        const Integer scale = w.zero + 2 * w.sign;
        for (auto& m : dense_) m *= scale;
        return;
    }
    std::vector<Integer> next(p_);
    for (std::uint32_t r = 0; r < p_; ++r) {
        const std::uint32_t lo = r >= residue ? r - residue : r + p_ - residue;
        const std::uint32_t hi = r + residue >= p_ ? r + residue - p_ : r + residue;
        mpz_ptr out = next[r].backend().data();
        mpz_add(out, dense_[lo].backend().data(), dense_[hi].backend().data());
        mpz_mul(out, out, w.sign.backend().data());
        if (w.zero != 0) mpz_addmul(out, dense_[r].backend().data(), w.zero.backend().data());
    }
    dense_ = std::move(next);
}

ExactDist walk_distribution(const IntVector& a, const MuParam& mu)
{
    auto d = ExactDist::point_mass_integers();
    for (const auto& c : a) d.add_step(c, mu);
    return d;
}

ExactDist walk_distribution(const FpVector& a, const MuParam& mu)
{
    auto d = ExactDist::point_mass_fp(a.field());
    for (auto c : a) d.add_step(c, mu);
    return d;
}

Rational atom_probability(const IntVector& a, const MuParam& mu)
{
    return walk_distribution(a, mu).max_mass();
}

Rational atom_probability(const FpVector& a, const MuParam& mu)
{
    return walk_distribution(a, mu).max_mass();
}

namespace {

template <typename Vec>
GridSup grid_sup(const Vec& a, std::span<const MuParam> grid)
{
    if (grid.empty()) throw std::invalid_argument("mu grid must be nonempty");
    GridSup out;
    bool first = true;
    for (const auto& mu : grid) {
        auto rho = atom_probability(a, mu);
        if (first || rho > out.value) {
            out.value = std::move(rho);
            out.argmax = mu;
            first = false;
        }
    }
    return out;
}

std::vector<std::size_t> checked_indices(std::span<const std::size_t> indices, std::size_t n)
{
    std::vector<std::size_t> idx(indices.begin(), indices.end());
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("restriction index set has repeats");
    if (!idx.empty() && idx.back() >= n) throw std::out_of_range("restriction index out of range");
    return idx;
}

}  // namespace

GridSup atom_probability_sup(const IntVector& a, std::span<const MuParam> grid)
{
    return grid_sup(a, grid);
}

GridSup atom_probability_sup(const FpVector& a, std::span<const MuParam> grid)
{
    return grid_sup(a, grid);
}

IntVector restrict(const IntVector& a, std::span<const std::size_t> indices)
{
    std::vector<Integer> out;
    for (auto i : checked_indices(indices, a.size())) out.push_back(a[i]);
    return IntVector(std::move(out));
}

FpVector restrict(const FpVector& a, std::span<const std::size_t> indices)
{
    std::vector<std::uint32_t> out;
    for (auto i : checked_indices(indices, a.size())) out.push_back(a[i]);
    return FpVector(a.field(), std::move(out));
}

CharSumBound char_sum_bound(const FpVector& a, const MuParam& mu)
{
    const std::uint32_t p = a.modulus();
    const double m = to_double(mu.value());
    std::vector<double> cos_table(p), dist_sq(p);
    for (std::uint32_t r = 0; r < p; ++r) {
        cos_table[r] = std::cos(2.0 * std::numbers::pi * r / p);
        const double d = static_cast<double>(std::min(r, p - r)) / p;
        dist_sq[r] = d * d;
    }
    const auto& field = a.field();
    double cosine = 0, exponential = 0;
    for (std::uint32_t k = 0; k < p; ++k) {
        double prod = 1, energy = 0;
        for (auto aj : a) {
            const auto r = field.mul(k, aj);
            prod *= std::abs(m + (1 - m) * cos_table[r]);
            energy += dist_sq[r];
        }
        cosine += prod;
        exponential += std::exp(-0.5 * energy);
    }
    return {cosine / p, exponential / p};
}

}  // namespace symsing
