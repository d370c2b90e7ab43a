#include "symsing/matcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace symsing {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix rows must have equal length");
        for (auto v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const
{
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return IntVector(std::move(out));
}

IntMatrix& IntMatrix::operator*=(const Integer& c)
{
    for (auto& x : data_) x *= c;
    return *this;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(std::vector<Integer>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t j) const
{
    std::vector<Integer> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return IntVector(std::move(out));
}

IntMatrix IntMatrix::minor_matrix(std::size_t i, std::size_t j) const
{
    if (i >= rows_ || j >= cols_) throw std::out_of_range("minor index out of range");
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m(rr, cc++) = (*this)(r, c);
        }
        ++rr;
    }
    return m;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

// --- SymMatrix -------------------------------------------------------------

SymMatrix::SymMatrix(std::size_t n) : n_(n), bits_((n * (n + 1) / 2 + 63) / 64, 0)
{
    if (n == 0) throw std::invalid_argument("SymMatrix dimension must be >= 1");
}

std::size_t SymMatrix::index(std::size_t i, std::size_t j) const noexcept
{
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
}

SymMatrix SymMatrix::from_code(std::size_t n, std::uint64_t code)
{
    SymMatrix m(n);
    if (m.bit_count() > 64) throw std::invalid_argument("code only addresses matrices with <= 64 upper-triangle bits");
    if (m.bit_count() < 64) code &= (std::uint64_t{1} << m.bit_count()) - 1;
    m.bits_[0] = code;
    return m;
}

SymMatrix SymMatrix::from_int_matrix(const IntMatrix& a)
{
    if (!a.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
    SymMatrix m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (a(i, j) != 1 && a(i, j) != -1) throw std::invalid_argument("entries must be +1 or -1");
            m.set(i, j, a(i, j) == 1 ? 1 : -1);
        }
    return m;
}

int SymMatrix::entry(std::size_t i, std::size_t j) const
{
    if (i >= n_ || j >= n_) throw std::out_of_range("SymMatrix index out of range");
    auto b = index(i, j);
    return (bits_[b / 64] >> (b % 64)) & 1 ? 1 : -1;
}

void SymMatrix::set(std::size_t i, std::size_t j, int value)
{
    if (i >= n_ || j >= n_) throw std::out_of_range("SymMatrix index out of range");
    if (value != 1 && value != -1) throw std::invalid_argument("SymMatrix entries are +1 or -1");
    auto b = index(i, j);
    auto mask = std::uint64_t{1} << (b % 64);
    if (value == 1)
        bits_[b / 64] |= mask;
    else
        bits_[b / 64] &= ~mask;
}

std::uint64_t SymMatrix::code() const
{
    if (n_ > kMaxCodeDim) throw std::invalid_argument("matrix too large for a 64-bit code");
    return bits_[0];
}

IntMatrix SymMatrix::to_int_matrix() const
{
    IntMatrix a(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) a(i, j) = entry(i, j);
    return a;
}

SymMatrix SymMatrix::leading(std::size_t k) const
{
    if (k == 0 || k > n_) throw std::invalid_argument("leading block size out of range");
    SymMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) m.set(i, j, entry(i, j));
    return m;
}

SymMatrix SymMatrix::without(std::size_t r) const
{
    if (n_ < 2 || r >= n_) throw std::invalid_argument("cannot remove row/column from this matrix");
    SymMatrix m(n_ - 1);
    for (std::size_t i = 0, ii = 0; i < n_; ++i) {
        if (i == r) continue;
        for (std::size_t j = i, jj = ii; j < n_; ++j) {
            if (j == r) continue;
            m.set(ii, jj++, entry(i, j));
        }
        ++ii;
    }
    return m;
}

SymMatrix sample_symmetric(std::size_t n, RngStream& rng)
{
    if (n == 0) throw std::invalid_argument("sample_symmetric requires n >= 1");
    SymMatrix m(n);
    // One raw draw feeds 64 consecutive upper-triangle entries.
    std::uint64_t word = 0;
    std::size_t left = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (left == 0) {
                word = rng.next();
                left = 64;
            }
            m.set(i, j, (word & 1) ? 1 : -1);
            word >>= 1;
            --left;
        }
    return m;
}

SymmetricEnumeration::SymmetricEnumeration(std::size_t n) : n_(n)
{
    if (n == 0) throw std::invalid_argument("enumerate_symmetric requires n >= 1");
    if (n * (n + 1) / 2 > kMaxBits) throw BudgetExceeded("enumeration bound exceeded: n(n+1)/2 must be <= 30");
}

SymmetricEnumeration enumerate_symmetric(std::size_t n)
{
    return SymmetricEnumeration(n);
}

// --- elimination -----------------------------------------------------------

namespace {

// Fraction-free elimination over a rectangular working copy. Returns the rank;
// when `det` is non-null and the matrix is square, stores the determinant.
template <typename T>
std::size_t bareiss(std::vector<T>& m, std::size_t rows, std::size_t cols, T* det)
{
    T prev = 1;
    std::size_t r = 0;
    bool negate = false;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) {
            if (det) {
                *det = 0;
                det = nullptr;
            }
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
            negate = !negate;
        }
        const T pivot = m[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const T lead = m[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                T v = pivot * m[i * cols + j] - lead * m[r * cols + j];
                m[i * cols + j] = v / prev;
            }
            m[i * cols + c] = 0;
        }
        prev = pivot;
        ++r;
    }
    if (det) *det = negate ? T(-prev) : prev;
    return r;
}

std::vector<Integer> copy_entries(const IntMatrix& a)
{
    std::vector<Integer> m;
    m.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.push_back(a(i, j));
    return m;
}

}  // namespace

std::size_t rank_q(const IntMatrix& a)
{
    auto m = copy_entries(a);
    return bareiss<Integer>(m, a.rows(), a.cols(), nullptr);
}

std::size_t rank_q(const SymMatrix& m)
{
    const auto n = m.dim();
    if (n <= 12) {
        std::vector<std::int64_t> w(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m.entry(i, j);
        return bareiss<std::int64_t>(w, n, n, nullptr);
    }
    return rank_q(m.to_int_matrix());
}

Integer det_int(const IntMatrix& a)
{
    if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0) return 1;
    auto m = copy_entries(a);
    Integer det;
    bareiss<Integer>(m, a.rows(), a.cols(), &det);
    return det;
}

Integer det_int(const SymMatrix& m)
{
    return det_int(m.to_int_matrix());
}

std::int64_t det_small(const SymMatrix& m)
{
    const auto n = m.dim();
    if (n > 12) return det_int(m).convert_to<std::int64_t>();
    std::vector<std::int64_t> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m.entry(i, j);
    std::int64_t det = 0;
    bareiss<std::int64_t>(w, n, n, &det);
    return det;
}

std::size_t rank_fp(const IntMatrix& a, const PrimeField& field)
{
    const auto rows = a.rows(), cols = a.cols();
    std::vector<std::uint32_t> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = field.reduce(a(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        const auto inv = field.inv(m[r * cols + c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const auto f = field.mul(m[i * cols + c], inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = field.sub(m[i * cols + j], field.mul(f, m[r * cols + j]));
        }
        ++r;
    }
    return r;
}

std::size_t rank_fp(const SymMatrix& m, const PrimeField& field)
{
    return rank_fp(m.to_int_matrix(), field);
}

Integer cofactor(const IntMatrix& a, std::size_t i, std::size_t j)
{
    if (!a.is_square()) throw std::invalid_argument("cofactor of a non-square matrix");
    if (i >= a.rows() || j >= a.cols()) throw std::out_of_range("cofactor index out of range");
    Integer d = det_int(a.minor_matrix(i, j));
    return ((i + j) % 2) ? Integer(-d) : d;
}

IntMatrix adjugate(const IntMatrix& a)
{
    if (!a.is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
    const auto n = a.rows();
    if (n == 1) return IntMatrix{{1}};
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) adj(j, i) = cofactor(a, i, j);
    return adj;
}

std::vector<IntVector> kernel_q(const IntMatrix& a)
{
    const auto rows = a.rows(), cols = a.cols();
    std::vector<Rational> m(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = Rational(a(i, j));

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        const Rational inv = 1 / m[r * cols + c];
        for (std::size_t j = c; j < cols; ++j) m[r * cols + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i * cols + c] == 0) continue;
            const Rational f = m[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) m[i * cols + j] -= f * m[r * cols + j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m[k * cols + free];
        Integer l = 1;
        for (const auto& x : v) l = lcm(l, Integer(boost::multiprecision::denominator(x)));
        std::vector<Integer> iv;
        iv.reserve(cols);
        for (const auto& x : v) iv.push_back(Integer(x * l));
        basis.push_back(normalize_gcd(IntVector(std::move(iv))));
    }
    return basis;
}

SymMatrix conjugate_by_permutation(const SymMatrix& m, std::span<const std::size_t> sigma)
{
    const auto n = m.dim();
    if (sigma.size() != n) throw std::invalid_argument("permutation length does not match matrix dimension");
    std::vector<bool> seen(n, false);
    for (auto s : sigma) {
        if (s >= n || seen[s]) throw std::invalid_argument("invalid permutation");
        seen[s] = true;
    }
    SymMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) out.set(i, j, m.entry(sigma[i], sigma[j]));
    return out;
}

}  // namespace symsing
