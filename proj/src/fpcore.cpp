#include "symsing/fpcore.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace symsing {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t x)
{
    if (x < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (x % q == 0) return x == q;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a deterministic witness set below 3.3e24.
    for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t y = powmod(base, d, x);
        if (y == 1 || y == x - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            y = mulmod(y, y, x);
            if (y == x - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime_in_doubling(std::uint64_t x)
{
    if (x < 2) throw std::invalid_argument("next_prime_in_doubling requires x >= 2");
    if (x > (std::uint64_t{1} << 62)) throw std::invalid_argument("next_prime_in_doubling: x exceeds 2^62");
    for (std::uint64_t c = x;; ++c)
        if (is_prime(c)) return c;
}

PrimeField::PrimeField(std::uint64_t p)
{
    if (p < 3 || p > kMaxDeskModulus || !is_prime(p))
        throw std::invalid_argument("PrimeField requires an odd prime in [3, " + std::to_string(kMaxDeskModulus) +
                                    "], got " + std::to_string(p));
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeField::reduce(const Integer& x) const
{
    Integer r = x % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint32_t>();
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a % p_ == 0) throw std::domain_error("zero has no inverse in F_p");
    return static_cast<std::uint32_t>(powmod(a, p_ - 2, p_));
}

IntVector::IntVector(std::initializer_list<std::int64_t> coords)
{
    coords_.reserve(coords.size());
    for (auto c : coords) coords_.emplace_back(c);
}

bool IntVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

FpVector::FpVector(PrimeField field, std::vector<std::uint32_t> coords) : field_(field), coords_(std::move(coords))
{
    for (auto c : coords_)
        if (c >= field_.modulus()) throw std::invalid_argument("FpVector coordinate outside [0, p)");
}

FpVector::FpVector(PrimeField field, std::initializer_list<std::int64_t> coords) : field_(field)
{
    coords_.reserve(coords.size());
    for (auto c : coords) coords_.push_back(field_.reduce(c));
}

bool FpVector::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](std::uint32_t c) { return c == 0; });
}

IntVector normalize_gcd(const IntVector& a)
{
    Integer g = 0;
    for (const auto& c : a) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("zero vector has no normalization");
    auto first = std::find_if(a.begin(), a.end(), [](const Integer& c) { return c != 0; });
    if (*first < 0) g = -g;
    std::vector<Integer> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c / g);
    return IntVector(std::move(out));
}

FpVector reduce_mod_p(const IntVector& a, const PrimeField& field)
{
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(field.reduce(c));
    return FpVector(field, std::move(out));
}

std::vector<std::size_t> support(const IntVector& a)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) idx.push_back(i);
    return idx;
}

std::vector<std::size_t> support(const FpVector& a)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) idx.push_back(i);
    return idx;
}

}  // namespace symsing
