#include "symsing/addstruct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace symsing {

namespace {

std::uint64_t checked_tuple_count(std::size_t n, unsigned k)
{
    // (2n)^{2k}, saturating past the budget.
    std::uint64_t total = 1;
    for (unsigned j = 0; j < 2 * k; ++j) {
        total *= 2 * static_cast<std::uint64_t>(n);
        if (total > kBruteForceBudget) return kBruteForceBudget + 1;
    }
    return total;
}

void require_k(unsigned k)
{
    if (k == 0) throw std::invalid_argument("k must be at least 1");
}

// Walks every (index, sign) tuple of length 2k and calls visit(counts) on the
// zero-sum ones, where counts[i] is the multiplicity of index i.
template <typename Visit>
void for_each_solution(const FpVector& a, unsigned k, Visit&& visit)
{
    require_k(k);
    const std::size_t n = a.size();
    if (checked_tuple_count(n, k) > kBruteForceBudget)
        throw BudgetExceeded("n^{2k} 4^k exceeds the brute-force budget; use rk_convolution");
    if (n == 0) return;
    const auto& field = a.field();
    const unsigned len = 2 * k;
    std::vector<unsigned> counts(n, 0);
    auto walk = [&](auto& self, unsigned depth, std::uint32_t sum) -> void {
        if (depth == len) {
            if (sum == 0) visit(counts);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            ++counts[i];
            self(self, depth + 1, field.add(sum, a[i]));
            self(self, depth + 1, field.sub(sum, a[i]));
            --counts[i];
        }
    };
    walk(walk, 0, 0);
}

// Counts tuples in which every index occurs at least twice: a DP over
// coordinates with state (slots used, residue).
template <typename C>
C all_repeated(std::span<const std::uint32_t> values, std::uint32_t p, unsigned k)
{
    const unsigned len = 2 * k;
    std::vector<std::vector<C>> binom(len + 1, std::vector<C>(len + 1, C(0)));
    for (unsigned i = 0; i <= len; ++i) {
        binom[i][0] = 1;
        for (unsigned j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : C(0));
    }
    std::map<std::pair<unsigned, std::uint32_t>, C> state;
    state[{0, 0}] = 1;
    for (auto v : values) {
        std::map<std::pair<unsigned, std::uint32_t>, C> next = state;
        for (const auto& [key, ways] : state) {
            const auto [used, r] = key;
            for (unsigned m = 2; used + m <= len; ++m) {
                const C place = binom[len - used][m] * ways;
                for (unsigned neg = 0; neg <= m; ++neg) {
                    const std::int64_t coeff = static_cast<std::int64_t>(m) - 2 * static_cast<std::int64_t>(neg);
                    std::int64_t shift = (coeff % static_cast<std::int64_t>(p)) * v % static_cast<std::int64_t>(p);
                    if (shift < 0) shift += p;
                    const auto nr = static_cast<std::uint32_t>((r + static_cast<std::uint64_t>(shift)) % p);
                    next[{used + m, nr}] += place * binom[m][neg];
                }
            }
        }
        state = std::move(next);
    }
    auto it = state.find({len, 0});
    return it == state.end() ? C(0) : it->second;
}

// R_k by meet in the middle: list the (2n)^k half-sums and sum the squared
// multiplicities (the step set is symmetric, so N(x) = N(-x)).
std::uint64_t rk_mitm(std::span<const std::uint32_t> values, std::uint32_t p, unsigned k)
{
    std::vector<std::uint32_t> sums{0};
    for (unsigned j = 0; j < k; ++j) {
        std::vector<std::uint32_t> next;
        next.reserve(sums.size() * 2 * values.size());
        for (auto s : sums)
            for (auto v : values) {
                next.push_back(static_cast<std::uint32_t>((s + static_cast<std::uint64_t>(v)) % p));
                next.push_back(static_cast<std::uint32_t>((s + static_cast<std::uint64_t>(p - v)) % p));
            }
        sums = std::move(next);
    }
    std::sort(sums.begin(), sums.end());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < sums.size();) {
        std::size_t j = i;
        while (j < sums.size() && sums[j] == sums[i]) ++j;
        total += static_cast<std::uint64_t>(j - i) * (j - i);
        i = j;
    }
    return total;
}

Integer power_of_four(unsigned k) { return Integer(1) << (2 * k); }

}  // namespace

Integer rk_bruteforce(const FpVector& a, unsigned k)
{
    std::uint64_t count = 0;
    for_each_solution(a, k, [&](const std::vector<unsigned>&) { ++count; });
    return Integer(count);
}

Integer rk_star(const FpVector& a, unsigned k)
{
    std::uint64_t count = 0;
    for_each_solution(a, k, [&](const std::vector<unsigned>& counts) {
        if (std::find(counts.begin(), counts.end(), 1u) != counts.end()) ++count;
    });
    return Integer(count);
}

Integer rk_convolution(const FpVector& a, unsigned k)
{
    require_k(k);
    const std::uint32_t p = a.modulus();
    const auto& field = a.field();
    std::vector<std::uint32_t> step_count(p, 0);
    for (auto v : a) {
        ++step_count[v];
        ++step_count[field.neg(v)];
    }
    std::vector<std::pair<std::uint32_t, Integer>> steps;
    for (std::uint32_t r = 0; r < p; ++r)
        if (step_count[r]) steps.emplace_back(r, Integer(step_count[r]));

    std::vector<Integer> dist(p);
    dist[0] = 1;
    std::vector<std::uint32_t> live{0};
    for (unsigned j = 0; j < k; ++j) {
        std::vector<Integer> next(p);
        std::vector<char> seen(p, 0);
        std::vector<std::uint32_t> next_live;
        for (auto x : live) {
            for (const auto& [r, c] : steps) {
                const auto y = field.add(x, r);
                mpz_addmul(next[y].backend().data(), dist[x].backend().data(), c.backend().data());
                if (!seen[y]) {
                    seen[y] = 1;
                    next_live.push_back(y);
                }
            }
        }
        dist = std::move(next);
        live = std::move(next_live);
    }
    Integer total = 0;
    for (auto x : live) mpz_addmul(total.backend().data(), dist[x].backend().data(), dist[field.neg(x)].backend().data());
    return total;
}

Integer rk_star_convolution(const FpVector& a, unsigned k)
{
    return rk_convolution(a, k) - all_repeated<Integer>(a.coords(), a.modulus(), k);
}

double rk_fourier(const FpVector& a, unsigned k)
{
    require_k(k);
    const std::uint32_t p = a.modulus();
    const auto& field = a.field();
    double total = 0;
    for (std::uint32_t kappa = 0; kappa < p; ++kappa) {
        double s = 0;
        for (auto v : a) s += 2.0 * std::cos(2.0 * std::numbers::pi * field.mul(kappa, v) / p);
        total += std::pow(s, 2.0 * k);
    }
    return total / p;
}

RkGapReport check_rk_gap(const FpVector& a, unsigned k)
{
    require_k(k);
    if (k > a.size()) throw std::invalid_argument("check_rk_gap requires k <= n");
    RkGapReport out;
    out.rk = rk_convolution(a, k);
    out.rk_star = rk_star_convolution(a, k);
    out.slack = ipow(Integer(16 * static_cast<std::uint64_t>(k)), k) * ipow(Integer(a.size()), k);
    out.ok = out.rk_star <= out.rk && out.rk <= out.rk_star + out.slack;
    return out;
}

namespace {

// p^2 sum_j ||kappa a_j / p||^2, an integer.
std::vector<Integer> scaled_energies(const FpVector& a)
{
    const std::uint32_t p = a.modulus();
    const auto& field = a.field();
    std::vector<Integer> out(p);
    for (std::uint32_t kappa = 0; kappa < p; ++kappa) {
        std::uint64_t e = 0;
        for (auto v : a) {
            const std::uint64_t r = field.mul(kappa, v);
            const std::uint64_t d = std::min<std::uint64_t>(r, p - r);
            e += d * d;
        }
        out[kappa] = e;
    }
    return out;
}

bool within(const Integer& scaled_energy, const Rational& t, std::uint32_t p)
{
    // E / p^2 <= num / den
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return scaled_energy * denominator(t) <= numerator(t) * Integer(p) * p;
}

}  // namespace

std::vector<std::uint32_t> level_set(const FpVector& a, const Rational& t)
{
    const auto energies = scaled_energies(a);
    std::vector<std::uint32_t> out;
    for (std::uint32_t kappa = 0; kappa < energies.size(); ++kappa)
        if (within(energies[kappa], t, a.modulus())) out.push_back(kappa);
    return out;
}

std::size_t level_set_size(const FpVector& a, const Rational& t)
{
    return level_set(a, t).size();
}

SumsetReport check_sumset_containment(const FpVector& a, const Rational& t, unsigned m)
{
    if (m == 0) throw std::invalid_argument("sumset order m must be at least 1");
    const std::uint32_t p = a.modulus();
    const auto energies = scaled_energies(a);
    std::vector<std::uint32_t> level;
    for (std::uint32_t kappa = 0; kappa < p; ++kappa)
        if (within(energies[kappa], t, p)) level.push_back(kappa);
    if (static_cast<std::uint64_t>(m - 1) * p * level.size() > kSumsetBudget)
        throw BudgetExceeded("m-fold sumset enumeration exceeds budget");

    std::vector<char> in_sum(p, 0);
    for (auto x : level) in_sum[x] = 1;
    for (unsigned j = 1; j < m; ++j) {
        std::vector<char> next(p, 0);
        for (std::uint32_t x = 0; x < p; ++x) {
            if (!in_sum[x]) continue;
            for (auto y : level) next[(x + y) % p] = 1;
        }
        in_sum = std::move(next);
    }

    const Rational wide = t * m * m;
    SumsetReport out;
    out.level_size = level.size();
    out.contained = true;
    for (std::uint32_t x = 0; x < p; ++x) {
        const bool in_wide = within(energies[x], wide, p);
        out.wide_level_size += in_wide;
        if (in_sum[x]) {
            ++out.sumset_size;
            if (!in_wide) out.contained = false;
        }
    }
    out.small_threshold = t * 100 < Rational(support(a).size());
    if (out.small_threshold) out.level_below_p = out.level_size < p;
    return out;
}

void BadSetParams::validate(std::size_t n, BadSetMode mode) const
{
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (s1 < 1 || s1 > n) throw std::invalid_argument("s must satisfy 1 <= s <= n");
    if (mode == BadSetMode::Window) {
        if (s2 < s1 || s2 > n) throw std::invalid_argument("window requires s1 <= s2 <= n");
        if (d < 1 || d > n) throw std::invalid_argument("window requires 1 <= d <= n");
    }
}

namespace {

// Lexicographic successor of a size-j combination of [0, n); false when done.
bool next_combination(std::vector<std::size_t>& c, std::size_t n)
{
    const std::size_t j = c.size();
    std::size_t i = j;
    while (i > 0) {
        --i;
        if (c[i] < n - j + i) {
            ++c[i];
            for (std::size_t q = i + 1; q < j; ++q) c[q] = c[q - 1] + 1;
            return true;
        }
    }
    return false;
}

// R^*(b) p >= t 4^k |b|^{2k}
bool rich(const Integer& rstar, std::uint32_t p, std::uint64_t t, unsigned k, std::size_t size)
{
    return rstar * p >= Integer(t) * power_of_four(k) * ipow(Integer(size), 2 * k);
}

Integer subset_count(std::size_t n, std::size_t lo, std::size_t hi)
{
    Integer total = 0;
    for (std::size_t j = lo; j <= hi && j <= n; ++j)
        total += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
    return total;
}

}  // namespace

bool is_bad_vector(const FpVector& a, const BadSetParams& params, BadSetMode mode)
{
    params.validate(a.size(), mode);
    std::vector<std::uint32_t> pool;
    std::size_t lo = params.s1;
    std::size_t hi = a.size();
    if (mode == BadSetMode::Window) {
        const auto supp = support(a);
        if (supp.size() != params.d) return false;
        for (auto i : supp) pool.push_back(a[i]);
        hi = std::min(params.s2, pool.size());
    } else {
        pool.assign(a.begin(), a.end());
    }
    if (subset_count(pool.size(), lo, hi) > kSubsetBudget)
        throw BudgetExceeded("candidate subset count exceeds budget");

    const auto& field = a.field();
    for (std::size_t j = lo; j <= hi; ++j) {
        std::vector<std::size_t> c(j);
        std::iota(c.begin(), c.end(), 0);
        do {
            std::vector<std::uint32_t> sub;
            sub.reserve(j);
            for (auto i : c) sub.push_back(pool[i]);
            const auto rstar = rk_star_convolution(FpVector(field, std::move(sub)), params.k);
            if (!rich(rstar, field.modulus(), params.t, params.k, j)) return false;
        } while (next_combination(c, pool.size()));
    }
    return true;
}

double counting_lemma_bound(std::uint64_t p, std::size_t n, unsigned k, std::size_t s, std::uint64_t t)
{
    const double logb = (2.0 * k - 1) * std::log(static_cast<double>(s) / n) + n * std::log(static_cast<double>(p)) -
                        (static_cast<double>(n) - s) * std::log(static_cast<double>(t));
    return std::exp(logb);
}

bool counting_lemma_holds(const Integer& count, std::uint64_t p, std::size_t n, unsigned k, std::size_t s,
                          std::uint64_t t)
{
    const unsigned e = 2 * k - 1;
    const Integer lhs = count * ipow(Integer(n), e) * ipow(Integer(t), static_cast<unsigned>(n - s));
    const Integer rhs = ipow(Integer(s), e) * ipow(Integer(p), static_cast<unsigned>(n));
    return lhs <= rhs;
}

double corollary_bound(std::uint64_t p, std::size_t n, std::size_t d, std::size_t s1, std::size_t s2,
                       std::uint64_t t)
{
    const double logc = std::lgamma(n + 1.0) - std::lgamma(d + 1.0) - std::lgamma(n - d + 1.0);
    const double logb = logc + (static_cast<double>(d) + s2) * std::log(static_cast<double>(p)) +
                        (-static_cast<double>(d) + static_cast<double>(s1) * d / s2) * std::log(static_cast<double>(t));
    return std::exp(logb);
}

bool corollary_holds(const Integer& count, std::uint64_t p, std::size_t n, std::size_t d, std::size_t s1,
                     std::size_t s2, std::uint64_t t)
{
    // count <= C p^{d+s2} t^{-d(s2-s1)/s2}, raised to the power s2.
    const auto e = static_cast<unsigned>(s2);
    const Integer lhs = ipow(count, e) * ipow(Integer(t), static_cast<unsigned>(d * (s2 - s1)));
    const Integer base = binomial(static_cast<unsigned>(n), static_cast<unsigned>(d)) *
                         ipow(Integer(p), static_cast<unsigned>(d + s2));
    return lhs <= ipow(base, e);
}

BadSetCount enumerate_bad_set(std::size_t n, const PrimeField& field, const BadSetParams& params, BadSetMode mode,
                              unsigned workers)
{
    params.validate(n, mode);
    const std::uint32_t p = field.modulus();
    Integer space = ipow(Integer(p), static_cast<unsigned>(n));
    if (space > kSpaceBudget) throw BudgetExceeded("p^n exceeds the enumeration budget");
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    workers = std::max(1u, std::min<unsigned>(workers, p));

    auto next_params = params;
    ++next_params.t;
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<char> monotone(workers, 1);
    std::vector<std::exception_ptr> errors(workers);

    // Worker w owns the vectors whose first coordinate is congruent to w.
    auto run = [&](unsigned w) {
        try {
            std::vector<std::uint32_t> v(n, 0);
            for (std::uint32_t head = w; head < p; head += workers) {
                v.assign(n, 0);
                v[0] = head;
                while (true) {
                    FpVector a(field, v);
                    const bool bad = is_bad_vector(a, params, mode);
                    counts[w] += bad;
                    if (!bad && is_bad_vector(a, next_params, mode)) monotone[w] = 0;
                    std::size_t i = n;
                    while (i > 1 && ++v[i - 1] == p) v[--i] = 0;
                    if (i <= 1) break;
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    BadSetCount out;
    for (auto c : counts) out.count += c;
    out.monotone_in_t = std::all_of(monotone.begin(), monotone.end(), [](char c) { return c != 0; });
    if (mode == BadSetMode::Global) {
        out.bound = counting_lemma_bound(p, n, params.k, params.s1, params.t);
        out.within_bound = counting_lemma_holds(out.count, p, n, params.k, params.s1, params.t);
    } else {
        out.bound = corollary_bound(p, n, params.d, params.s1, params.s2, params.t);
        out.within_bound = corollary_holds(out.count, p, n, params.d, params.s1, params.s2, params.t);
    }
    return out;
}

Integer ThresholdProfile::count_at_least(std::uint64_t t) const
{
    Integer total = 0;
    for (auto it = histogram.lower_bound(t); it != histogram.end(); ++it) total += it->second;
    return total;
}

std::vector<std::uint64_t> ThresholdProfile::critical_points() const
{
    std::vector<std::uint64_t> out{1};
    for (const auto& [T, w] : histogram)
        if (T > 1 && T != kUnboundedThreshold) out.push_back(T);
    return out;
}

bool ThresholdProfile::unbounded() const
{
    return histogram.count(kUnboundedThreshold) > 0;
}

namespace {

// Work bound on representatives x subsets for one survey.
constexpr std::uint64_t kSurveyBudget = 50'000'000;

struct Rep {
    std::vector<std::uint32_t> values;
    Integer weight;
};

// Nondecreasing sequences of the given length over [lo, p), with multinomial
// weights.
void multiset_reps(std::size_t len, std::uint32_t lo, std::uint32_t p, std::vector<Rep>& out)
{
    std::vector<std::uint32_t> v(len, lo);
    const Integer total_perm = [&] {
        Integer f = 1;
        for (std::size_t i = 2; i <= len; ++i) f *= i;
        return f;
    }();
    while (true) {
        Integer w = total_perm;
        for (std::size_t i = 0; i < len;) {
            std::size_t j = i;
            while (j < len && v[j] == v[i]) ++j;
            Integer f = 1;
            for (std::size_t q = 2; q <= j - i; ++q) f *= q;
            w /= f;
            i = j;
        }
        out.push_back({v, w});
        std::size_t i = len;
        while (i > 0 && v[i - 1] == p - 1) --i;
        if (i == 0) return;
        const std::uint32_t nv = v[i - 1] + 1;
        for (std::size_t q = i - 1; q < len; ++q) v[q] = nv;
    }
}

// Odometer over [lo, p)^len starting at the given prefix.
void all_tails(std::vector<std::uint32_t> prefix, std::size_t len, std::uint32_t lo, std::uint32_t p,
               const Integer& weight, std::vector<Rep>& out)
{
    const std::size_t start = prefix.size();
    prefix.resize(len, lo);
    while (true) {
        out.push_back({prefix, weight});
        std::size_t i = len;
        while (i > start && ++prefix[i - 1] == p) prefix[--i] = lo;
        if (i == start) return;
    }
}

// Zero vector plus, for each first-nonzero position, that coordinate set to 1.
void scaling_reps(std::size_t len, std::uint32_t lo, std::uint32_t p, std::vector<Rep>& out)
{
    const Integer w(p - 1);
    if (lo == 0) {
        out.push_back({std::vector<std::uint32_t>(len, 0), Integer(1)});
        for (std::size_t f = 0; f < len; ++f) {
            std::vector<std::uint32_t> prefix(f, 0);
            prefix.push_back(1);
            all_tails(prefix, len, 0, p, w, out);
        }
    } else if (len > 0) {
        all_tails({1}, len, 1, p, w, out);
    }
}

Integer multiset_count(std::size_t len, std::uint32_t alphabet)
{
    return binomial(static_cast<unsigned>(len + alphabet - 1), alphabet - 1);
}

Integer scaling_count(std::size_t len, std::uint32_t lo, std::uint32_t p)
{
    if (lo == 0) return (ipow(Integer(p), static_cast<unsigned>(len)) - 1) / (p - 1) + 1;
    return len == 0 ? Integer(0) : ipow(Integer(p - 1), static_cast<unsigned>(len - 1));
}

}  // namespace

namespace {

BadSetSurvey::Orbits resolve(BadSetSurvey::Orbits orbits, std::size_t len, std::uint32_t lo, std::uint32_t p)
{
    if (orbits != BadSetSurvey::Orbits::Auto) return orbits;
    return multiset_count(len, p - lo) <= scaling_count(len, lo, p) ? BadSetSurvey::Orbits::Multisets
                                                                    : BadSetSurvey::Orbits::Scaling;
}

}  // namespace

BadSetSurvey BadSetSurvey::build(std::size_t len, std::uint32_t lo, const PrimeField& field, unsigned k,
                                 Orbits orbits)
{
    require_k(k);
    if (len == 0) throw std::invalid_argument("survey length must be at least 1");
    if (len > 24) throw BudgetExceeded("survey length exceeds subset budget");
    const std::uint32_t p = field.modulus();
    orbits = resolve(orbits, len, lo, p);
    Integer reps_needed = orbits == Orbits::Multisets ? multiset_count(len, p - lo)
                          : orbits == Orbits::Scaling ? scaling_count(len, lo, p)
                                                      : ipow(Integer(p - lo), static_cast<unsigned>(len));
    if (reps_needed * (Integer(1) << len) > kSurveyBudget)
        throw BudgetExceeded("bad-set survey exceeds its work budget");
    // (2 len)^{2k} p must stay well inside 64 bits for the fast counters.
    if (std::pow(2.0 * len, 2.0 * k) * p > 1e18) throw BudgetExceeded("survey counts exceed 64-bit range");

    std::vector<Rep> reps;
    if (orbits == Orbits::Multisets)
        multiset_reps(len, lo, p, reps);
    else if (orbits == Orbits::Scaling)
        scaling_reps(len, lo, p, reps);
    else
        all_tails({}, len, lo, p, Integer(1), reps);

    BadSetSurvey out;
    out.length_ = len;
    out.p_ = p;
    out.k_ = k;
    const std::uint64_t four_k = std::uint64_t{1} << (2 * k);
    std::vector<std::uint64_t> denom(len + 1, 0);
    for (std::size_t j = 1; j <= len; ++j) {
        std::uint64_t d = four_k;
        for (unsigned e = 0; e < 2 * k; ++e) d *= j;
        denom[j] = d;
    }

    std::map<std::vector<std::uint32_t>, std::uint64_t> memo;
    auto rstar_of = [&](std::vector<std::uint32_t> sub) {
        std::sort(sub.begin(), sub.end());
        auto it = memo.find(sub);
        if (it != memo.end()) return it->second;
        const std::uint64_t rk = rk_mitm(sub, p, k);
        const std::uint64_t rep = all_repeated<std::uint64_t>(sub, p, k);
        memo.emplace(sub, rk - rep);
        return rk - rep;
    };

    out.minima_.reserve(reps.size());
    out.weights_.reserve(reps.size());
    std::vector<std::uint32_t> sub;
    for (auto& rep : reps) {
        std::vector<std::uint64_t> minima(len + 1, kUnboundedThreshold);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
            sub.clear();
            for (std::size_t i = 0; i < len; ++i)
                if (mask >> i & 1) sub.push_back(rep.values[i]);
            const std::size_t j = sub.size();
            const std::uint64_t value = rstar_of(sub) * p / denom[j];
            minima[j] = std::min(minima[j], value);
        }
        out.minima_.push_back(std::move(minima));
        out.weights_.push_back(std::move(rep.weight));
    }
    return out;
}

BadSetSurvey BadSetSurvey::global(std::size_t n, const PrimeField& field, unsigned k, Orbits orbits)
{
    return build(n, 0, field, k, orbits);
}

BadSetSurvey BadSetSurvey::window(std::size_t d, const PrimeField& field, unsigned k, Orbits orbits)
{
    return build(d, 1, field, k, orbits);
}

ThresholdProfile BadSetSurvey::profile_global(std::size_t s) const
{
    if (s < 1 || s > length_) throw std::invalid_argument("s must satisfy 1 <= s <= n");
    ThresholdProfile out;
    for (std::size_t r = 0; r < minima_.size(); ++r) {
        std::uint64_t T = kUnboundedThreshold;
        for (std::size_t j = s; j <= length_; ++j) T = std::min(T, minima_[r][j]);
        out.histogram[T] += weights_[r];
        out.total += weights_[r];
    }
    return out;
}

ThresholdProfile BadSetSurvey::profile_window(std::size_t n, std::size_t s1, std::size_t s2) const
{
    if (s1 < 1 || s2 < s1 || s2 > n) throw std::invalid_argument("window requires 1 <= s1 <= s2 <= n");
    if (length_ > n) throw std::invalid_argument("window requires d <= n");
    const Integer placements = binomial(static_cast<unsigned>(n), static_cast<unsigned>(length_));
    ThresholdProfile out;
    for (std::size_t r = 0; r < minima_.size(); ++r) {
        std::uint64_t T = kUnboundedThreshold;
        for (std::size_t j = s1; j <= std::min(s2, length_); ++j) T = std::min(T, minima_[r][j]);
        const Integer w = weights_[r] * placements;
        out.histogram[T] += w;
        out.total += w;
    }
    return out;
}

}  // namespace symsing
