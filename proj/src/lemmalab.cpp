#include "symsing/lemmalab.hpp"

#include "symsing/addstruct.hpp"
#include "symsing/parallel.hpp"
#include "symsing/rng.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace symsing {

namespace {

template <typename Range>
std::string join_coords(const Range& r)
{
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (const auto& c : r) {
        if (!first) out << ',';
        out << c;
        first = false;
    }
    out << ')';
    return out.str();
}

}  // namespace

std::string witness_string(const Witness& w)
{
    if (const auto* v = std::get_if<IntVector>(&w)) return join_coords(*v);
    if (const auto* v = std::get_if<FpVector>(&w)) return join_coords(*v);
    const auto& m = std::get<IntMatrix>(w);
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) out << ',';
        out << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j);
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0) throw std::invalid_argument("Wilson interval needs at least one trial");
    if (successes > trials) throw std::invalid_argument("successes exceed trials");
    const double n = static_cast<double>(trials);
    const double phat = successes / n;
    const double z2 = z * z;
    const double centre = (phat + z2 / (2 * n)) / (1 + z2 / n);
    const double half = z / (1 + z2 / n) * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
    return {successes == 0 ? 0.0 : std::max(0.0, centre - half), successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

OdlyzkoReport odlyzko_check(std::span<const IntVector> basis, std::size_t n)
{
    if (n > kMaxOdlyzkoDim) throw BudgetExceeded("odlyzko_check enumerates 2^n sign vectors; n must be <= 20");
    for (const auto& v : basis)
        if (v.size() != n) throw std::invalid_argument("basis vector length differs from n");

    OdlyzkoReport out;
    std::vector<std::vector<std::int64_t>> kernel;
    if (basis.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> e(n, 0);
            e[i] = 1;
            kernel.push_back(std::move(e));
        }
    } else {
        IntMatrix b(basis.size(), n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = basis[i][j];
        out.dimension = rank_q(b);
        const Integer limit = Integer(1) << 40;
        for (const auto& k : kernel_q(b)) {
            std::vector<std::int64_t> row;
            for (const auto& c : k) {
                if (abs(c) >= limit) throw BudgetExceeded("kernel coefficients too large for the sign-vector sweep");
                row.push_back(c.convert_to<std::int64_t>());
            }
            kernel.push_back(std::move(row));
        }
    }
    // v lies in the row space iff it is orthogonal to the whole kernel.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool in_span = true;
        for (const auto& k : kernel) {
            std::int64_t dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += (mask >> j & 1) ? k[j] : -k[j];
            if (dot != 0) {
                in_span = false;
                break;
            }
        }
        out.count += in_span;
    }
    out.bound = Integer(1) << out.dimension;
    out.ok = Integer(out.count) <= out.bound;
    return out;
}

namespace {

void check_rank_step_args(std::size_t n, std::size_t ell)
{
    if (ell + 2 > n) throw std::invalid_argument("rank step requires ell <= n - 2");
}

Rational rank_step_bound(std::size_t n, std::size_t ell)
{
    return Rational(1) - Rational(Integer(1), Integer(1) << (n - ell));
}

void finish_rank_step(RankStepReport& r)
{
    if (r.conditioned == 0) throw std::domain_error("conditioning event has probability zero");
    r.frequency = Rational(Integer(r.successes), Integer(r.conditioned));
    r.bound = rank_step_bound(r.n, r.ell);
}

}  // namespace

RankStepReport rank_step_exhaustive(std::size_t n, std::size_t ell)
{
    check_rank_step_args(n, ell);
    SymmetricEnumeration all(n + 1);
    RankStepReport r;
    r.n = n;
    r.ell = ell;
    r.exhaustive = true;
    for (std::uint64_t code = 0; code < all.count(); ++code) {
        const auto m = all.at(code);
        if (rank_q(m.leading(n)) != ell) continue;
        ++r.conditioned;
        r.successes += rank_q(m) == ell + 2;
    }
    finish_rank_step(r);
    const double f = to_double(r.frequency);
    r.wilson = {f, f};
    r.ok = r.frequency >= r.bound;
    return r;
}

RankStepReport rank_step_sampled(std::size_t n, std::size_t ell, std::uint64_t trials, std::uint64_t seed,
                                 unsigned workers)
{
    check_rank_step_args(n, ell);
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    // 0: outside the conditioning event, 1: conditioned failure, 2: success.
    std::vector<unsigned char> outcome(trials, 0);
    parallel_for(trials, workers, [&](std::size_t t) {
        RngStream rng(seed, t);
        const auto m = sample_symmetric(n + 1, rng);
        if (rank_q(m.leading(n)) != ell) return;
        outcome[t] = rank_q(m) == ell + 2 ? 2 : 1;
    });
    RankStepReport r;
    r.n = n;
    r.ell = ell;
    for (auto o : outcome) {
        r.conditioned += o != 0;
        r.successes += o == 2;
    }
    finish_rank_step(r);
    r.wilson = wilson_interval(r.successes, r.conditioned, 3.0);
    r.ok = r.wilson.hi >= to_double(r.bound);
    return r;
}

Integer laplace_expansion(const IntMatrix& m)
{
    if (!m.is_square() || m.rows() < 2) throw std::invalid_argument("laplace_expansion needs a square matrix of size >= 2");
    const std::size_t n = m.rows();
    const IntMatrix a = m.minor_matrix(0, 0);
    Integer value = m(0, 0) * det_int(a);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            if (m(i, 0) == 0 || m(0, j) == 0) continue;
            value -= cofactor(a, i - 1, j - 1) * m(i, 0) * m(0, j);
        }
    return value;
}

IntMatrix bordered(const Integer& x1, const IntVector& x, const IntMatrix& a)
{
    if (!a.is_square() || a.rows() != x.size()) throw std::invalid_argument("border length must match the matrix");
    const std::size_t n = a.rows() + 1;
    IntMatrix m(n, n);
    m(0, 0) = x1;
    for (std::size_t i = 1; i < n; ++i) {
        m(0, i) = x[i - 1];
        m(i, 0) = x[i - 1];
        for (std::size_t j = 1; j < n; ++j) m(i, j) = a(i - 1, j - 1);
    }
    return m;
}

AdjugateFactorization adjugate_factorization(const IntMatrix& a)
{
    if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("adjugate_factorization needs a nonempty square matrix");
    if (!a.is_symmetric()) throw std::invalid_argument("adjugate_factorization needs a symmetric matrix");
    const std::size_t n = a.rows();
    if (rank_q(a) + 1 != n) throw std::invalid_argument("adjugate_factorization needs corank exactly 1");

    const IntMatrix adj = adjugate(a);
    auto kernel = kernel_q(a);
    if (kernel.size() != 1) throw std::logic_error("corank-1 matrix with kernel dimension != 1");
    AdjugateFactorization out;
    out.a = std::move(kernel.front());
    std::size_t pivot = 0;
    while (out.a[pivot] == 0) ++pivot;
    out.lambda = Rational(adj(pivot, pivot), out.a[pivot] * out.a[pivot]);
    if (out.lambda == 0) throw std::logic_error("adjugate vanished on a corank-1 matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (Rational(adj(i, j)) != out.lambda * out.a[i] * out.a[j])
                throw std::logic_error("adjugate is not lambda a a^T");
    out.det_scale = -out.lambda;
    return out;
}

IntVector r_vector(const IntMatrix& a, std::span<const std::size_t> u2, const IntVector& w)
{
    if (!a.is_square()) throw std::invalid_argument("r_vector needs a square matrix");
    if (u2.empty()) throw std::invalid_argument("U2 must be nonempty");
    if (w.size() != u2.size()) throw std::invalid_argument("w must have one entry per index of U2");
    std::vector<std::size_t> sorted(u2.begin(), u2.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("U2 has repeated indices");
    if (sorted.back() >= a.rows()) throw std::out_of_range("U2 index out of range");
    if (det_int(a) == 0) throw std::invalid_argument("r_vector needs an invertible matrix");

    const IntMatrix adj = adjugate(a);
    std::vector<Integer> r(a.rows(), Integer(0));
    for (std::size_t q = 0; q < u2.size(); ++q)
        for (std::size_t i = 0; i < a.rows(); ++i) r[i] += w[q] * adj(i, u2[q]);
    return IntVector(std::move(r));
}

namespace {

void check_marginal(std::span<const Rational> p, const char* name)
{
    if (p.empty()) throw std::invalid_argument(std::string(name) + " marginal is empty");
    Rational total = 0;
    for (const auto& x : p) {
        if (x < 0) throw std::invalid_argument(std::string(name) + " marginal has a negative mass");
        total += x;
    }
    if (total != 1) throw std::invalid_argument(std::string(name) + " marginal does not sum to 1");
}

}  // namespace

DecouplingReport decoupling_check(std::span<const Rational> py, std::span<const Rational> pz,
                                  const EventPredicate& event)
{
    check_marginal(py, "Y");
    check_marginal(pz, "Z");
    const std::size_t ny = py.size();
    const std::size_t nz = pz.size();
    std::vector<char> e(ny * nz);
    Rational pe = 0;
    for (std::size_t i = 0; i < ny; ++i)
        for (std::size_t j = 0; j < nz; ++j) {
            e[i * nz + j] = event(i, j);
            if (e[i * nz + j]) pe += py[i] * pz[j];
        }
    // sum over (y, y') of Pr[y] Pr[y'] (sum_z Pr[z] E(y,z) E(y',z))^2
    Rational rhs = 0;
    for (std::size_t i = 0; i < ny; ++i)
        for (std::size_t i2 = 0; i2 < ny; ++i2) {
            Rational s = 0;
            for (std::size_t j = 0; j < nz; ++j)
                if (e[i * nz + j] && e[i2 * nz + j]) s += pz[j];
            rhs += py[i] * py[i2] * s * s;
        }
    DecouplingReport out;
    out.lhs = pe * pe * pe * pe;
    out.rhs = std::move(rhs);
    out.ok = out.lhs <= out.rhs;
    return out;
}

DecouplingReport decoupling_check(const std::vector<std::vector<Rational>>& joint, const EventPredicate& event)
{
    if (joint.empty() || joint.front().empty()) throw std::invalid_argument("joint law is empty");
    const std::size_t nz = joint.front().size();
    std::vector<Rational> py(joint.size(), Rational(0)), pz(nz, Rational(0));
    for (std::size_t i = 0; i < joint.size(); ++i) {
        if (joint[i].size() != nz) throw std::invalid_argument("joint law rows differ in length");
        for (std::size_t j = 0; j < nz; ++j) {
            py[i] += joint[i][j];
            pz[j] += joint[i][j];
        }
    }
    for (std::size_t i = 0; i < joint.size(); ++i)
        for (std::size_t j = 0; j < nz; ++j)
            if (joint[i][j] != py[i] * pz[j]) throw std::invalid_argument("decoupling requires independence");
    return decoupling_check(py, pz, event);
}

EventVerdict null_event_check(const IntMatrix& a, const Rational& rho, std::span<const MuParam> grid)
{
    if (!a.is_square()) throw std::invalid_argument("null_event_check needs a square matrix");
    EventVerdict v;
    v.event = "null";
    v.grid_approximate = !(grid.size() == 1 && grid.front().value() == 0);
    const std::size_t rank = rank_q(a);
    const std::size_t corank = a.rows() - rank;
    if (corank == 0) return v;
    if (corank >= 2) throw std::invalid_argument("enumerate kernel lattice not supported");
    auto kernel = kernel_q(a);
    const auto sup = atom_probability_sup(kernel.front(), grid);
    if (sup.value > rho) {
        v.verdict = false;
        v.witness = kernel.front();
    }
    return v;
}

namespace {

std::uint64_t space_size(std::uint32_t p, std::size_t n)
{
    const Integer s = ipow(Integer(p), static_cast<unsigned>(n));
    if (s > kEventSpaceBudget) throw BudgetExceeded("p^n exceeds the event sweep budget");
    return s.convert_to<std::uint64_t>();
}

// Visits every nonzero a in F_p^n (last coordinate fastest) that is orthogonal
// to at least n - beta_n rows of m; stops when visit returns false.
template <typename Visit>
void for_each_orthogonal(const SymMatrix& m, std::size_t beta_n, const PrimeField& field, Visit&& visit)
{
    const std::size_t n = m.dim();
    const std::uint32_t p = field.modulus();
    space_size(p, n);
    const std::size_t need = beta_n >= n ? 0 : n - beta_n;
    std::vector<std::uint32_t> a(n, 0);
    while (true) {
        std::size_t i = n;
        while (i > 0 && ++a[i - 1] == p) a[--i] = 0;
        if (i == 0) return;
        std::size_t orthogonal = 0;
        for (std::size_t r = 0; r < n; ++r) {
            std::uint32_t dot = 0;
            for (std::size_t c = 0; c < n; ++c) dot = m.entry(r, c) > 0 ? field.add(dot, a[c]) : field.sub(dot, a[c]);
            orthogonal += dot == 0;
        }
        if (orthogonal >= need && !visit(a)) return;
    }
}

}  // namespace

EventVerdict orth_event_check(const SymMatrix& m, const Rational& alpha, std::size_t beta_n,
                              const PrimeField& field, std::span<const MuParam> grid)
{
    if (grid.empty()) throw std::invalid_argument("mu grid must be nonempty");
    EventVerdict v;
    v.event = "orth";
    v.grid_approximate = true;
    for_each_orthogonal(m, beta_n, field, [&](const std::vector<std::uint32_t>& a) {
        FpVector vec(field, a);
        for (const auto& mu : grid) {
            if (atom_probability(vec, mu) > alpha) {
                v.verdict = false;
                v.witness = std::move(vec);
                return false;
            }
        }
        return true;
    });
    return v;
}

EventVerdict spt_event_check(const SymMatrix& m, std::size_t d, std::size_t beta_n, const PrimeField& field)
{
    EventVerdict v;
    v.event = "spt";
    for_each_orthogonal(m, beta_n, field, [&](const std::vector<std::uint32_t>& a) {
        const auto weight = static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](auto x) { return x != 0; }));
        if (weight < d) {
            v.verdict = false;
            v.witness = FpVector(field, a);
            return false;
        }
        return true;
    });
    return v;
}

Rational orth_failure_frequency(std::size_t n, const Rational& alpha, std::size_t beta_n, const PrimeField& field,
                                std::span<const MuParam> grid)
{
    SymmetricEnumeration all(n);
    std::uint64_t failures = 0;
    for (const auto& m : all) failures += !orth_event_check(m, alpha, beta_n, field, grid).verdict;
    return Rational(Integer(failures), Integer(all.count()));
}

double binary_entropy(double x)
{
    if (x <= 0 || x >= 1) return 0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

EntropyReport entropy_bound(const Rational& beta, std::size_t n)
{
    if (beta < 0) throw std::invalid_argument("beta must be nonnegative");
    if (beta > Rational(1, 2)) throw std::invalid_argument("entropy bound requires beta <= 1/2");
    const Rational bn = beta * n;
    const Integer top = boost::multiprecision::numerator(bn) / boost::multiprecision::denominator(bn);
    const auto t_max = top.convert_to<unsigned>();
    EntropyReport out;
    for (unsigned t = 0; t <= t_max; ++t) out.sum += binomial(static_cast<unsigned>(n), t);
    const double exponent = n * binary_entropy(to_double(beta));
    out.bound = std::exp2(exponent);
    long e2 = 0;
    const double mant = mpz_get_d_2exp(&e2, out.sum.backend().data());
    const double log2_sum = std::log2(mant) + static_cast<double>(e2);
    out.ok = log2_sum <= exponent + 1e-9;
    return out;
}

HalaszReport halasz_check(const FpVector& a, unsigned k, const Rational& f, double c_probe,
                          std::span<const MuParam> grid)
{
    if (grid.empty()) throw std::invalid_argument("mu grid must be nonempty");
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (a.is_zero()) throw std::invalid_argument("a must be nonzero");
    if (f <= 0) throw std::invalid_argument("f must be positive");
    const std::size_t n = a.size();
    const std::size_t supp = support(a).size();
    if (f * 100 > Rational(supp)) throw std::invalid_argument("f must not exceed |supp(a)|/100");
    if (f * k > Rational(n)) throw std::invalid_argument("k must not exceed n/f");

    HalaszReport out;
    const auto sup = atom_probability_sup(a, grid);
    out.lhs = sup.value;
    out.lhs_mu = sup.argmax;
    out.rk = rk_convolution(a, k);
    const Rational normalized(out.rk, (Integer(1) << (2 * k)) * ipow(Integer(n), 2 * k));
    const double fd = to_double(f);
    out.x_term = to_double(normalized) / std::sqrt(fd);
    out.tail = std::exp(-fd / 2);
    const double base = 1.0 / a.modulus() + out.tail;
    out.rhs = base + c_probe * out.x_term;
    const double excess = to_double(out.lhs) - base;
    out.c_min = excess <= 0 ? 0.0
                            : std::nextafter(std::nextafter(excess / out.x_term, HUGE_VAL), HUGE_VAL);
    out.vacuous = out.rhs >= 1;
    out.holds = excess <= c_probe * out.x_term;
    return out;
}

HalaszUsable halasz_usable(std::uint64_t p, unsigned k, std::size_t s1)
{
    if (k == 0 || s1 == 0) throw std::invalid_argument("halasz_usable needs k, s1 >= 1");
    const double lp = std::log(static_cast<double>(p));
    const double ratio = static_cast<double>(s1) / (4.0 * k);
    const double half = static_cast<double>(s1) / (2.0 * k);
    HalaszUsable out;
    out.as_printed = lp <= -half && lp <= -k * std::log(ratio);
    out.inverted = lp <= half && lp <= k * std::log(ratio);
    return out;
}

namespace {

std::uint64_t integer_root(std::uint64_t x, unsigned r)
{
    // Largest y with y^r <= x.
    auto pow_le = [&](std::uint64_t y) {
        unsigned __int128 acc = 1;
        for (unsigned i = 0; i < r; ++i) {
            acc *= y;
            if (acc > x) return false;
        }
        return true;
    };
    std::uint64_t y = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 1.0 / r));
    while (y > 0 && !pow_le(y)) --y;
    while (pow_le(y + 1)) ++y;
    return y;
}

}  // namespace

ParamSchedule param_schedule(std::uint64_t n)
{
    if (n < 2) throw std::invalid_argument("param_schedule needs n >= 2");
    using Dec = boost::multiprecision::cpp_dec_float_50;
    const Dec nn(n);
    const Dec ln = log(nn);
    const Dec x = pow(nn, Dec(1) / 4) * sqrt(ln);  // n^{1/4} sqrt(log n)

    ParamSchedule s;
    s.n = n;
    s.k = integer_root(n, 4);
    if (n <= std::numeric_limits<std::uint32_t>::max()) {
        s.d = integer_root(n * n, 3);
    } else {
        s.d = static_cast<std::uint64_t>(floor(pow(nn, Dec(2) / 3)));
    }
    s.s1 = static_cast<std::uint64_t>(floor(sqrt(nn) * ln));
    s.s2 = static_cast<std::uint64_t>(floor(pow(nn, Dec(3) / 4) * sqrt(ln)));
    s.beta_n = static_cast<std::uint64_t>(floor(x / 128));
    s.log2_alpha = static_cast<double>(-x / 64);
    s.alpha = std::exp2(s.log2_alpha);
    s.log2_p_nominal = static_cast<double>(x / 32);
    if (x / 32 <= 62) {
        const Dec nominal = pow(Dec(2), x / 32);
        const auto c = static_cast<std::uint64_t>(ceil(nominal));
        s.p = next_prime_in_doubling(std::max<std::uint64_t>(3, c));
    }
    s.log2_target = static_cast<double>(-x / 1000);
    return s;
}

double assemble_bound(double alpha, double beta_n, double p_orth_fail, double p_null_fail)
{
    auto unit = [](double v, const char* name) {
        if (!(v >= 0 && v <= 1)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    };
    unit(alpha, "alpha");
    unit(p_orth_fail, "orthogonality failure probability");
    unit(p_null_fail, "null failure probability");
    if (!(beta_n >= 0)) throw std::invalid_argument("beta_n must be nonnegative");
    const double grow = alpha == 0 ? 0.0 : std::exp2(beta_n) * alpha;
    const double inner = grow + std::exp2(1 - beta_n) + p_orth_fail;
    const double total = alpha + p_null_fail + std::pow(inner, 0.25);
    return std::clamp(total, 0.0, 1.0);
}

}  // namespace symsing
