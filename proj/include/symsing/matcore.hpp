#pragma once

// Exact linear algebra for symmetric +-1 matrices: sampling, enumeration, rank
// over Q and F_p, determinant, cofactors, adjugate, kernels, and permutation
// conjugation. No floating point anywhere in this module.

#include "symsing/fpcore.hpp"
#include "symsing/numeric.hpp"
#include "symsing/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace symsing {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& v) const;
    IntMatrix& operator*=(const Integer& c);
    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    /// Copy with row i and column j removed.
    IntMatrix minor_matrix(std::size_t i, std::size_t j) const;
    bool is_symmetric() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Symmetric +-1 matrix stored as its bit-packed upper triangle (diagonal
/// included), row-major. Bit 1 is entry +1, bit 0 is entry -1.
class SymMatrix {
public:
    /// Largest dimension whose upper triangle fits the 64-bit code.
    static constexpr std::size_t kMaxCodeDim = 10;

    explicit SymMatrix(std::size_t n);  // all entries -1

    /// The code's bit b is the b-th upper-triangle entry in row-major order.
    static SymMatrix from_code(std::size_t n, std::uint64_t code);
    /// From a full +-1 matrix; throws if asymmetric or an entry is not +-1.
    static SymMatrix from_int_matrix(const IntMatrix& a);

    std::size_t dim() const noexcept { return n_; }
    std::size_t bit_count() const noexcept { return n_ * (n_ + 1) / 2; }

    int entry(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, int value);
    /// Only valid for dim() <= kMaxCodeDim.
    std::uint64_t code() const;

    IntMatrix to_int_matrix() const;
    /// Top-left k x k block.
    SymMatrix leading(std::size_t k) const;
    /// Drops row and column i.
    SymMatrix without(std::size_t i) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const noexcept;

    std::size_t n_;
    std::vector<std::uint64_t> bits_;
};

/// Every upper-triangle entry an independent fair +-1 draw. n >= 1.
SymMatrix sample_symmetric(std::size_t n, RngStream& rng);

/// Visits all 2^{n(n+1)/2} matrices in code order. Requires n(n+1)/2 <= 30.
class SymmetricEnumeration {
public:
    static constexpr std::size_t kMaxBits = 30;

    explicit SymmetricEnumeration(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    std::uint64_t count() const noexcept { return std::uint64_t{1} << (n_ * (n_ + 1) / 2); }
    SymMatrix at(std::uint64_t code) const { return SymMatrix::from_code(n_, code); }

    class iterator {
    public:
        using value_type = SymMatrix;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(std::size_t n, std::uint64_t code) : n_(n), code_(code) {}
        SymMatrix operator*() const { return SymMatrix::from_code(n_, code_); }
        iterator& operator++()
        {
            ++code_;
            return *this;
        }
        iterator operator++(int)
        {
            auto tmp = *this;
            ++code_;
            return tmp;
        }
        bool operator==(const iterator& o) const { return code_ == o.code_; }

    private:
        std::size_t n_ = 0;
        std::uint64_t code_ = 0;
    };

    iterator begin() const { return {n_, 0}; }
    iterator end() const { return {n_, count()}; }

private:
    std::size_t n_;
};

SymmetricEnumeration enumerate_symmetric(std::size_t n);

std::size_t rank_fp(const IntMatrix& a, const PrimeField& field);
std::size_t rank_fp(const SymMatrix& m, const PrimeField& field);

/// Rank over Q by Bareiss fraction-free elimination.
std::size_t rank_q(const IntMatrix& a);
std::size_t rank_q(const SymMatrix& m);

/// Exact determinant by Bareiss elimination. Throws on non-square input.
Integer det_int(const IntMatrix& a);
Integer det_int(const SymMatrix& m);

/// Determinant through a 64-bit Bareiss path; exact for +-1 matrices of
/// dimension <= 12, falls back to det_int above that.
std::int64_t det_small(const SymMatrix& m);

/// (-1)^{i+j} det(A without row i, column j); zero-based indices.
Integer cofactor(const IntMatrix& a, std::size_t i, std::size_t j);

/// Transpose of the cofactor matrix; [[1]] for 1 x 1 input.
IntMatrix adjugate(const IntMatrix& a);

/// Basis of the rational kernel; each vector primitive with first nonzero
/// coordinate positive.
std::vector<IntVector> kernel_q(const IntMatrix& a);

/// Entry (i, j) of the result is entry (sigma(i), sigma(j)) of m; sigma is
/// zero-based.
SymMatrix conjugate_by_permutation(const SymMatrix& m, std::span<const std::size_t> sigma);

}  // namespace symsing
