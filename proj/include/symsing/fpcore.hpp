#pragma once

// Prime-field arithmetic, coefficient vectors over Z and F_p, and the Z -> F_p
// reduction.

#include "symsing/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace symsing {

/// Desk-scale bound on the modulus of a PrimeField.
inline constexpr std::uint64_t kMaxDeskModulus = 1'000'000;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t x);

/// Smallest prime in [x, 2x]; x >= 2.
std::uint64_t next_prime_in_doubling(std::uint64_t x);

/// An odd prime modulus 3 <= p <= kMaxDeskModulus.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t x) const noexcept
    {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t reduce(const Integer& x) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;

    /// Signed view: residues above p/2 read as negative.
    std::int64_t signed_value(std::uint32_t r) const noexcept
    {
        return r > p_ / 2 ? static_cast<std::int64_t>(r) - p_ : static_cast<std::int64_t>(r);
    }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

/// Integer coefficient vector. May be empty (the restriction to no coordinates).
class IntVector {
public:
    IntVector() = default;
    explicit IntVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    IntVector(std::initializer_list<std::int64_t> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Integer> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }
    bool is_zero() const;

    friend bool operator==(const IntVector&, const IntVector&) = default;

private:
    std::vector<Integer> coords_;
};

/// Residue vector over a PrimeField; every coordinate lies in [0, p).
class FpVector {
public:
    FpVector(PrimeField field, std::vector<std::uint32_t> coords);
    FpVector(PrimeField field, std::initializer_list<std::int64_t> coords);

    const PrimeField& field() const noexcept { return field_; }
    std::uint32_t modulus() const noexcept { return field_.modulus(); }
    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }
    std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
    std::span<const std::uint32_t> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }
    bool is_zero() const;

    friend bool operator==(const FpVector&, const FpVector&) = default;

private:
    PrimeField field_;
    std::vector<std::uint32_t> coords_;
};

/// a / gcd(a), first nonzero coordinate positive. Throws on the zero vector.
IntVector normalize_gcd(const IntVector& a);

FpVector reduce_mod_p(const IntVector& a, const PrimeField& field);

/// Zero-based indices of nonzero coordinates, ascending.
std::vector<std::size_t> support(const IntVector& a);
std::vector<std::size_t> support(const FpVector& a);

}  // namespace symsing
