#include "symsing/experiment.hpp"

#include "symsing/addstruct.hpp"
#include "symsing/anticon.hpp"
#include "symsing/matcore.hpp"
#include "symsing/parallel.hpp"
#include "symsing/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace symsing {

QnEstimate estimate_qn(std::size_t n, QnMode mode, std::uint64_t trials, std::uint64_t seed, unsigned workers)
{
    if (n == 0) throw std::invalid_argument("n must be at least 1");
    QnEstimate q;
    q.n = n;
    q.mode = mode;
    q.comparison = Rational(Integer(1), Integer(1) << n);
    q.log2_target = -std::pow(static_cast<double>(n), 0.25) * std::sqrt(std::log(static_cast<double>(n))) / 1000;
    if (mode == QnMode::Exhaustive) {
        SymmetricEnumeration all(n);
        for (std::uint64_t code = 0; code < all.count(); ++code) q.singular += det_small(all.at(code)) == 0;
        q.total = all.count();
        q.estimate = Rational(Integer(q.singular), Integer(q.total));
        const double e = to_double(q.estimate);
        q.wilson = {e, e};
        return q;
    }
    if (trials == 0) throw std::invalid_argument("Monte Carlo mode needs trials > 0");
    std::vector<unsigned char> singular(trials, 0);
    parallel_for(trials, workers, [&](std::size_t t) {
        RngStream rng(seed, t);
        singular[t] = det_small(sample_symmetric(n, rng)) == 0;
    });
    for (auto s : singular) q.singular += s;
    q.total = trials;
    q.estimate = Rational(Integer(q.singular), Integer(q.total));
    q.wilson = wilson_interval(q.singular, q.total, 1.96);
    return q;
}

namespace {

constexpr std::uint32_t kSmallPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                          47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};

Row base_row(std::uint64_t instance, std::uint64_t seed)
{
    Row r;
    r.add("instance", Cell::uinteger(instance)).add("seed", Cell::uinteger(seed));
    return r;
}

std::vector<MuParam> grid_from(const ExperimentConfig& c, std::uint64_t fallback_den)
{
    const auto den = c.get_uint("mu_den", fallback_den);
    if (den == 0) return {MuParam::zero()};
    return mu_grid(static_cast<unsigned>(den));
}

template <typename Range>
std::string braces(const Range& r, char open = '(', char close = ')')
{
    std::ostringstream out;
    out << open;
    bool first = true;
    for (const auto& v : r) {
        if (!first) out << ',';
        out << v;
        first = false;
    }
    out << close;
    return out.str();
}

std::int64_t signed_draw(RngStream& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

using Verifier = std::function<VerifierOutput(const ExperimentConfig&, unsigned)>;

VerifierOutput verify_odlyzko(const ExperimentConfig& c, unsigned)
{
    const auto n = c.get_uint("n", 10);
    const auto dim = c.get_uint("dim", 2);
    const auto instances = c.trials.value_or(c.get_uint("instances", 100));
    if (n > kMaxOdlyzkoDim) throw BudgetExceeded("odlyzko_check enumerates 2^n sign vectors; n must be <= 20");
    VerifierOutput out;
    for (std::uint64_t i = 0; i < instances; ++i) {
        RngStream rng(c.seed, i);
        std::vector<IntVector> basis;
        for (std::uint64_t b = 0; b < dim; ++b) {
            std::vector<Integer> v;
            for (std::uint64_t j = 0; j < n; ++j) v.emplace_back(signed_draw(rng, -2, 2));
            basis.emplace_back(std::move(v));
        }
        const auto rep = odlyzko_check(basis, n);
        out.all_ok &= rep.ok;
        out.rows.push_back(base_row(i, c.seed)
                               .add("n", Cell::uinteger(n))
                               .add("span_dim", Cell::uinteger(rep.dimension))
                               .add("count", Cell::uinteger(rep.count))
                               .add("bound", Cell::integer(rep.bound))
                               .add("ok", Cell::boolean(rep.ok)));
    }
    return out;
}

VerifierOutput verify_rank_step(const ExperimentConfig& c, unsigned workers)
{
    const auto n = c.get_uint("n", 3);
    const auto ell = c.get_uint("ell", 1);
    const auto mode = c.get_string("mode", "exhaustive");
    RankStepReport r;
    if (mode == "exhaustive") r = rank_step_exhaustive(n, ell);
    else if (mode == "monte-carlo") r = rank_step_sampled(n, ell, c.trials.value_or(100000), c.seed, workers);
    else throw std::invalid_argument("mode must be exhaustive or monte-carlo");
    VerifierOutput out;
    out.all_ok = r.ok;
    out.rows.push_back(base_row(0, c.seed)
                           .add("n", Cell::uinteger(n))
                           .add("ell", Cell::uinteger(ell))
                           .add("mode", Cell::string(mode))
                           .add("conditioned", Cell::uinteger(r.conditioned))
                           .add("successes", Cell::uinteger(r.successes))
                           .add("frequency", Cell::rational(r.frequency))
                           .add("bound", Cell::rational(r.bound))
                           .add("wilson_lo", Cell::real(r.wilson.lo))
                           .add("wilson_hi", Cell::real(r.wilson.hi))
                           .add("ok", Cell::boolean(r.ok)));
    return out;
}

VerifierOutput verify_decoupling(const ExperimentConfig& c, unsigned)
{
    const auto trials = c.trials.value_or(10000);
    const auto max_support = std::max<std::uint64_t>(1, c.get_uint("max_support", 4));
    VerifierOutput out;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RngStream rng(c.seed, t);
        auto marginal = [&](std::size_t size) {
            std::vector<Integer> w(size);
            Integer total = 0;
            for (auto& x : w) {
                x = 1 + rng.below(8);
                total += x;
            }
            std::vector<Rational> p;
            for (const auto& x : w) p.emplace_back(x, total);
            return p;
        };
        const std::size_t ny = 1 + rng.below(max_support);
        const std::size_t nz = 1 + rng.below(max_support);
        const auto py = marginal(ny);
        const auto pz = marginal(nz);
        const std::uint64_t mask = rng.next() & ((std::uint64_t{1} << (ny * nz)) - 1);
        const auto rep = decoupling_check(py, pz, [&](std::size_t y, std::size_t z) { return (mask >> (y * nz + z)) & 1; });
        out.all_ok &= rep.ok;
        out.rows.push_back(base_row(t, c.seed)
                               .add("support_y", Cell::uinteger(ny))
                               .add("support_z", Cell::uinteger(nz))
                               .add("event_mask", Cell::uinteger(mask))
                               .add("lhs", Cell::rational(rep.lhs))
                               .add("rhs", Cell::rational(rep.rhs))
                               .add("ok", Cell::boolean(rep.ok)));
    }
    return out;
}

VerifierOutput verify_adjugate(const ExperimentConfig& c, unsigned)
{
    const auto n_max = c.get_uint("n_max", 4);
    VerifierOutput out;
    std::uint64_t instance = 0;
    for (std::size_t n = 2; n <= n_max; ++n) {
        SymmetricEnumeration all(n);
        for (std::uint64_t code = 0; code < all.count(); ++code) {
            const auto sm = all.at(code);
            if (rank_q(sm) + 1 != n) continue;
            const auto a = sm.to_int_matrix();
            const auto f = adjugate_factorization(a);
            bool kernel_ok = (a * f.a).is_zero();
            bool identity_ok = true;
            bool printed_ok = true;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{2} << n); ++mask) {
                std::vector<Integer> x;
                for (std::size_t i = 0; i < n; ++i) x.emplace_back((mask >> (i + 1) & 1) ? 1 : -1);
                Integer dot = 0;
                for (std::size_t i = 0; i < n; ++i) dot += f.a[i] * x[i];
                const Integer det = det_int(bordered((mask & 1) ? 1 : -1, IntVector(x), a));
                identity_ok &= Rational(det) == f.det_scale * dot * dot;
                printed_ok &= Rational(det) == f.lambda * dot * dot;
            }
            const bool ok = kernel_ok && identity_ok;
            out.all_ok &= ok;
            out.rows.push_back(base_row(instance++, c.seed)
                                   .add("n", Cell::uinteger(n))
                                   .add("code", Cell::uinteger(code))
                                   .add("lambda", Cell::rational(f.lambda))
                                   .add("a", Cell::string(braces(f.a)))
                                   .add("det_scale", Cell::rational(f.det_scale))
                                   .add("kernel_ok", Cell::boolean(kernel_ok))
                                   .add("bordered_identity", Cell::boolean(identity_ok))
                                   .add("printed_sign_identity", Cell::boolean(printed_ok))
                                   .add("ok", Cell::boolean(ok)));
        }
    }
    return out;
}

VerifierOutput verify_r_vector(const ExperimentConfig& c, unsigned)
{
    const auto instances = c.trials.value_or(c.get_uint("instances", 200));
    const auto m_max = std::max<std::uint64_t>(1, c.get_uint("m_max", 5));
    VerifierOutput out;
    for (std::uint64_t i = 0; i < instances; ++i) {
        RngStream rng(c.seed, i);
        const std::size_t m = 1 + rng.below(m_max);
        SymMatrix sm(m);
        do sm = sample_symmetric(m, rng);
        while (det_small(sm) == 0);
        const auto a = sm.to_int_matrix();
        std::vector<std::size_t> u2;
        while (u2.empty())
            for (std::size_t j = 0; j < m; ++j)
                if (rng.below(2)) u2.push_back(j);
        std::vector<Integer> w;
        bool w_zero = true;
        for (std::size_t j = 0; j < u2.size(); ++j) {
            w.emplace_back(2 * signed_draw(rng, -1, 1));
            w_zero &= w.back() == 0;
        }
        const auto r = r_vector(a, u2, IntVector(w));
        bool orthogonal = true;
        for (std::size_t row = 0; row < m; ++row) {
            if (std::find(u2.begin(), u2.end(), row) != u2.end()) continue;
            Integer dot = 0;
            for (std::size_t j = 0; j < m; ++j) dot += a(row, j) * r[j];
            orthogonal &= dot == 0;
        }
        const bool zero_iff = r.is_zero() == w_zero;
        const bool ok = orthogonal && zero_iff;
        out.all_ok &= ok;
        out.rows.push_back(base_row(i, c.seed)
                               .add("m", Cell::uinteger(m))
                               .add("u2", Cell::string(braces(u2, '{', '}')))
                               .add("w", Cell::string(braces(w)))
                               .add("r", Cell::string(braces(r)))
                               .add("orthogonal", Cell::boolean(orthogonal))
                               .add("zero_iff_w_zero", Cell::boolean(zero_iff))
                               .add("ok", Cell::boolean(ok)));
    }
    return out;
}

VerifierOutput verify_null_event(const ExperimentConfig& c, unsigned)
{
    const auto n = c.get_uint("n", 3);
    const auto rho = c.get_rational("rho", Rational(1, 2));
    const PrimeField field(c.get_uint("p", 3));
    const std::vector<MuParam> zero{MuParam::zero()};
    SymmetricEnumeration all(n);
    VerifierOutput out;
    for (std::uint64_t code = 0; code < all.count(); ++code) {
        const auto sm = all.at(code);
        const auto corank = n - rank_q(sm);
        if (corank > 1) continue;
        const auto v = null_event_check(sm.to_int_matrix(), rho, zero);
        // Failing the integer event must also fail the F_p event.
        const auto orth = orth_event_check(sm, rho, 0, field, zero);
        const bool ok = v.verdict || !orth.verdict;
        out.all_ok &= ok;
        out.rows.push_back(base_row(code, c.seed)
                               .add("n", Cell::uinteger(n))
                               .add("corank", Cell::uinteger(corank))
                               .add("verdict", Cell::boolean(v.verdict))
                               .add("witness", Cell::string(v.witness ? witness_string(*v.witness) : ""))
                               .add("orth_p_verdict", Cell::boolean(orth.verdict))
                               .add("ok", Cell::boolean(ok)));
    }
    return out;
}

// Re-derives, for a reported witness, the number of rows it is orthogonal to.
std::size_t orthogonal_rows(const SymMatrix& m, const FpVector& a)
{
    const auto& f = a.field();
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) dot += m.entry(i, j) * static_cast<std::int64_t>(a[j]);
        count += f.reduce(dot) == 0;
    }
    return count;
}

VerifierOutput verify_orth_event(const ExperimentConfig& c, unsigned)
{
    const auto n = c.get_uint("n", 3);
    const PrimeField field(c.get_uint("p", 3));
    const auto alpha = c.get_rational("alpha", Rational(1, 4));
    const auto beta_n = c.get_uint("beta_n", 0);
    const auto grid = grid_from(c, 64);
    SymmetricEnumeration all(n);
    VerifierOutput out;
    for (std::uint64_t code = 0; code < all.count(); ++code) {
        const auto sm = all.at(code);
        const auto v = orth_event_check(sm, alpha, beta_n, field, grid);
        bool ok = true;
        if (!v.verdict) {
            const auto& w = std::get<FpVector>(*v.witness);
            ok = !w.is_zero() && orthogonal_rows(sm, w) + beta_n >= n &&
                 atom_probability_sup(w, grid).value > alpha;
        }
        out.all_ok &= ok;
        out.rows.push_back(base_row(code, c.seed)
                               .add("n", Cell::uinteger(n))
                               .add("p", Cell::uinteger(field.modulus()))
                               .add("verdict", Cell::boolean(v.verdict))
                               .add("witness", Cell::string(v.witness ? witness_string(*v.witness) : ""))
                               .add("grid_approximate", Cell::boolean(v.grid_approximate))
                               .add("ok", Cell::boolean(ok)));
    }
    return out;
}

VerifierOutput verify_spt_event(const ExperimentConfig& c, unsigned)
{
    const auto n = c.get_uint("n", 3);
    const PrimeField field(c.get_uint("p", 3));
    const auto d = c.get_uint("d", 2);
    const auto beta_n = c.get_uint("beta_n", 0);
    SymmetricEnumeration all(n);
    VerifierOutput out;
    for (std::uint64_t code = 0; code < all.count(); ++code) {
        const auto sm = all.at(code);
        const auto v = spt_event_check(sm, d, beta_n, field);
        bool ok = true;
        if (!v.verdict) {
            const auto& w = std::get<FpVector>(*v.witness);
            ok = !w.is_zero() && orthogonal_rows(sm, w) + beta_n >= n && support(w).size() < d;
        }
        out.all_ok &= ok;
        out.rows.push_back(base_row(code, c.seed)
                               .add("n", Cell::uinteger(n))
                               .add("p", Cell::uinteger(field.modulus()))
                               .add("d", Cell::uinteger(d))
                               .add("verdict", Cell::boolean(v.verdict))
                               .add("witness", Cell::string(v.witness ? witness_string(*v.witness) : ""))
                               .add("ok", Cell::boolean(ok)));
    }
    return out;
}

VerifierOutput verify_entropy(const ExperimentConfig& c, unsigned)
{
    const auto n_max = c.get_uint("n_max", 30);
    VerifierOutput out;
    std::uint64_t instance = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        for (std::uint64_t j = 0; 2 * j <= n; ++j) {
            const Rational beta{Integer(j), Integer(n)};
            const auto rep = entropy_bound(beta, n);
            out.all_ok &= rep.ok;
            out.rows.push_back(base_row(instance++, c.seed)
                                   .add("n", Cell::uinteger(n))
                                   .add("beta", Cell::rational(beta))
                                   .add("sum", Cell::integer(rep.sum))
                                   .add("bound", Cell::real(rep.bound))
                                   .add("ok", Cell::boolean(rep.ok)));
        }
    return out;
}

// Either the explicit list "p" or every odd prime up to "p_max".
std::vector<std::uint64_t> prime_list(const ExperimentConfig& c)
{
    if (c.params.count("p_max")) {
        const auto p_max = std::min<std::uint64_t>(c.require_uint("p_max"), kMaxDeskModulus);
        std::vector<std::uint64_t> ps;
        for (std::uint64_t p = 3; p <= p_max; p += 2)
            if (is_prime(p)) ps.push_back(p);
        return ps;
    }
    auto ps = c.get_uint_list("p", {3});
    for (auto p : ps) PrimeField check(p);
    return ps;
}

VerifierOutput verify_counting_lemma(const ExperimentConfig& c, unsigned)
{
    const auto n_max = c.get_uint("n_max", 4);
    const auto k_max = c.get_uint("k_max", 2);
    VerifierOutput out;
    std::uint64_t instance = 0;
    for (auto p : prime_list(c)) {
        const PrimeField field(p);
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (ipow(Integer(p), static_cast<unsigned>(n)) > kSpaceBudget) break;
            for (unsigned k = 1; k <= k_max; ++k) {
                const auto survey = BadSetSurvey::global(n, field, k);
                for (std::size_t s = 1; s <= n; ++s) {
                    const auto profile = survey.profile_global(s);
                    for (auto t : profile.critical_points()) {
                        const auto count = profile.count_at_least(t);
                        const bool ok = counting_lemma_holds(count, p, n, k, s, t);
                        out.all_ok &= ok;
                        out.rows.push_back(base_row(instance++, c.seed)
                                               .add("p", Cell::uinteger(p))
                                               .add("n", Cell::uinteger(n))
                                               .add("k", Cell::uinteger(k))
                                               .add("s", Cell::uinteger(s))
                                               .add("t", Cell::uinteger(t))
                                               .add("count", Cell::integer(count))
                                               .add("bound", Cell::real(counting_lemma_bound(p, n, k, s, t)))
                                               .add("ok", Cell::boolean(ok)));
                    }
                }
            }
        }
    }
    return out;
}

VerifierOutput verify_counting_corollary(const ExperimentConfig& c, unsigned)
{
    const auto n_max = c.get_uint("n_max", 4);
    const auto k_max = c.get_uint("k_max", 2);
    VerifierOutput out;
    std::uint64_t instance = 0;
    for (auto p : prime_list(c)) {
        const PrimeField field(p);
        for (std::size_t n = 1; n <= n_max; ++n) {
            if (ipow(Integer(p), static_cast<unsigned>(n)) > kSpaceBudget) break;
            for (unsigned k = 1; k <= k_max; ++k)
                for (std::size_t d = 1; d <= n; ++d) {
                    const auto survey = BadSetSurvey::window(d, field, k);
                    for (std::size_t s2 = 1; s2 <= d; ++s2)
                        for (std::size_t s1 = 1; s1 <= s2; ++s1) {
                            const auto profile = survey.profile_window(n, s1, s2);
                            for (auto t : profile.critical_points()) {
                                const auto count = profile.count_at_least(t);
                                const bool ok = corollary_holds(count, p, n, d, s1, s2, t);
                                out.all_ok &= ok;
                                out.rows.push_back(base_row(instance++, c.seed)
                                                       .add("p", Cell::uinteger(p))
                                                       .add("n", Cell::uinteger(n))
                                                       .add("k", Cell::uinteger(k))
                                                       .add("d", Cell::uinteger(d))
                                                       .add("s1", Cell::uinteger(s1))
                                                       .add("s2", Cell::uinteger(s2))
                                                       .add("t", Cell::uinteger(t))
                                                       .add("count", Cell::integer(count))
                                                       .add("bound", Cell::real(corollary_bound(p, n, d, s1, s2, t)))
                                                       .add("ok", Cell::boolean(ok)));
                            }
                        }
                }
        }
    }
    return out;
}

VerifierOutput verify_rk_gap(const ExperimentConfig& c, unsigned)
{
    const auto n_max = c.get_uint("n_max", 3);
    const auto k_max = c.get_uint("k_max", 2);
    VerifierOutput out;
    std::uint64_t instance = 0;
    for (auto p : prime_list(c)) {
        const PrimeField field(p);
        for (std::size_t n = 1; n <= n_max; ++n) {
            std::vector<std::uint32_t> v(n, 0);
            while (true) {
                const FpVector a(field, v);
                for (unsigned k = 1; k <= std::min<std::uint64_t>(k_max, n); ++k) {
                    const auto gap = check_rk_gap(a, k);
                    const bool brute = gap.rk == rk_bruteforce(a, k) && gap.rk_star == rk_star(a, k);
                    const bool ok = gap.ok && brute;
                    out.all_ok &= ok;
                    out.rows.push_back(base_row(instance++, c.seed)
                                           .add("p", Cell::uinteger(p))
                                           .add("n", Cell::uinteger(n))
                                           .add("k", Cell::uinteger(k))
                                           .add("a", Cell::string(braces(v)))
                                           .add("rk", Cell::integer(gap.rk))
                                           .add("rk_star", Cell::integer(gap.rk_star))
                                           .add("slack", Cell::integer(gap.slack))
                                           .add("matches_bruteforce", Cell::boolean(brute))
                                           .add("ok", Cell::boolean(ok)));
                }
                std::size_t i = n;
                while (i > 0 && ++v[i - 1] == p) v[--i] = 0;
                if (i == 0) break;
            }
        }
    }
    return out;
}

FpVector random_fp_vector(RngStream& rng, const PrimeField& field, std::size_t n)
{
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng.below(field.modulus()));
    return FpVector(field, std::move(v));
}

VerifierOutput verify_sumset(const ExperimentConfig& c, unsigned)
{
    const auto instances = c.trials.value_or(c.get_uint("instances", 100));
    VerifierOutput out;
    for (std::uint64_t i = 0; i < instances; ++i) {
        RngStream rng(c.seed, i);
        const PrimeField field(kSmallPrimes[rng.below(std::size(kSmallPrimes))]);
        const std::size_t n = 1 + rng.below(300);
        const auto a = random_fp_vector(rng, field, n);
        const Rational t(Integer(rng.below(16)), Integer(4));
        const unsigned m = 1 + static_cast<unsigned>(rng.below(3));
        const auto rep = check_sumset_containment(a, t, m);
        out.all_ok &= rep.ok();
        out.rows.push_back(base_row(i, c.seed)
                               .add("p", Cell::uinteger(field.modulus()))
                               .add("n", Cell::uinteger(n))
                               .add("t", Cell::rational(t))
                               .add("m", Cell::uinteger(m))
                               .add("level_size", Cell::uinteger(rep.level_size))
                               .add("sumset_size", Cell::uinteger(rep.sumset_size))
                               .add("wide_level_size", Cell::uinteger(rep.wide_level_size))
                               .add("contained", Cell::boolean(rep.contained))
                               .add("small_threshold", Cell::boolean(rep.small_threshold))
                               .add("level_below_p", Cell::boolean(rep.level_below_p))
                               .add("ok", Cell::boolean(rep.ok())));
    }
    return out;
}

VerifierOutput verify_char_sum(const ExperimentConfig& c, unsigned)
{
    const auto instances = c.trials.value_or(c.get_uint("instances", 1000));
    VerifierOutput out;
    for (std::uint64_t i = 0; i < instances; ++i) {
        RngStream rng(c.seed, i);
        const PrimeField field(kSmallPrimes[rng.below(std::size(kSmallPrimes))]);
        const std::size_t n = 1 + rng.below(12);
        const auto a = random_fp_vector(rng, field, n);
        const MuParam mu(Rational(Integer(rng.below(9)), Integer(16)));
        const auto rho = atom_probability(a, mu);
        const auto bound = char_sum_bound(a, mu);
        const bool ok = bound.cosine + kCharSumSlack >= to_double(rho);
        out.all_ok &= ok;
        out.rows.push_back(base_row(i, c.seed)
                               .add("p", Cell::uinteger(field.modulus()))
                               .add("n", Cell::uinteger(n))
                               .add("mu", Cell::rational(mu.value()))
                               .add("rho", Cell::rational(rho))
                               .add("cosine", Cell::real(bound.cosine))
                               .add("exponential", Cell::real(bound.exponential))
                               .add("ok", Cell::boolean(ok)));
    }
    return out;
}

struct HalaszInstance {
    FpVector a;
    unsigned k;
    Rational f;
};

// Admissible instances: p <= 101, 100 <= n <= 300, f <= |supp|/100, k f <= n.
HalaszInstance random_halasz_instance(RngStream& rng)
{
    const PrimeField field(kSmallPrimes[rng.below(std::size(kSmallPrimes))]);
    const std::size_t n = 100 + rng.below(201);
    // Entries in [-r, r]; small r concentrates the walk well above 1/p.
    const std::uint64_t ranges[] = {1, 2, 4, field.modulus() / 2};
    const auto r = static_cast<std::int64_t>(ranges[rng.below(std::size(ranges))]);
    std::vector<std::uint32_t> coords(n);
    do {
        for (auto& x : coords) x = field.reduce(signed_draw(rng, -r, r));
    } while (std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; }));
    FpVector a(field, std::move(coords));
    const std::size_t supp = support(a).size();
    // f = j / 4 with 1 <= j <= 4 supp / 100.
    const std::uint64_t j_max = std::max<std::uint64_t>(1, 4 * supp / 100);
    Rational f(Integer(1 + rng.below(j_max)), Integer(4));
    if (f * 100 > Rational(supp)) f = Rational(Integer(supp), Integer(100));
    const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
    return {std::move(a), k, std::move(f)};
}

Row halasz_row(std::uint64_t instance, std::uint64_t seed, const HalaszInstance& in, const HalaszReport& r)
{
    return base_row(instance, seed)
        .add("p", Cell::uinteger(in.a.modulus()))
        .add("n", Cell::uinteger(in.a.size()))
        .add("support", Cell::uinteger(support(in.a).size()))
        .add("k", Cell::uinteger(in.k))
        .add("f", Cell::rational(in.f))
        .add("lhs", Cell::rational(r.lhs))
        .add("lhs_mu", Cell::rational(r.lhs_mu.value()))
        .add("rk", Cell::integer(r.rk))
        .add("x_term", Cell::real(r.x_term))
        .add("c_min", Cell::real(r.c_min))
        .add("vacuous", Cell::boolean(r.vacuous))
        .add("grid_approximate", Cell::boolean(r.grid_approximate));
}

VerifierOutput verify_halasz(const ExperimentConfig& c, unsigned workers)
{
    const auto instances = c.trials.value_or(c.get_uint("instances", 100));
    const auto grid = grid_from(c, 64);
    std::vector<HalaszInstance> corpus;
    for (std::uint64_t i = 0; i < instances; ++i) {
        RngStream rng(c.seed, i);
        corpus.push_back(random_halasz_instance(rng));
    }
    std::vector<HalaszReport> reports(instances);
    parallel_for(instances, workers,
                 [&](std::size_t i) { reports[i] = halasz_check(corpus[i].a, corpus[i].k, corpus[i].f, 1.0, grid); });
    double c_star = 0;
    for (const auto& r : reports) c_star = std::max(c_star, r.c_min);
    VerifierOutput out;
    for (std::uint64_t i = 0; i < instances; ++i) {
        const auto& r = reports[i];
        const double base = 1.0 / corpus[i].a.modulus() + r.tail;
        const bool ok = to_double(r.lhs) - base <= c_star * r.x_term;
        out.all_ok &= ok;
        out.rows.push_back(halasz_row(i, c.seed, corpus[i], r)
                               .add("c_star", Cell::real(c_star))
                               .add("rhs_envelope", Cell::real(base + c_star * r.x_term))
                               .add("ok", Cell::boolean(ok)));
    }
    return out;
}

const std::map<std::string, Verifier>& registry()
{
    static const std::map<std::string, Verifier> r = {
        {"adjugate", verify_adjugate},
        {"char-sum", verify_char_sum},
        {"counting-corollary", verify_counting_corollary},
        {"counting-lemma", verify_counting_lemma},
        {"decoupling", verify_decoupling},
        {"entropy", verify_entropy},
        {"halasz", verify_halasz},
        {"null-event", verify_null_event},
        {"odlyzko", verify_odlyzko},
        {"orth-event", verify_orth_event},
        {"r-vector", verify_r_vector},
        {"rank-step", verify_rank_step},
        {"rk-gap", verify_rk_gap},
        {"spt-event", verify_spt_event},
        {"sumset", verify_sumset},
    };
    return r;
}

VerifierOutput run_qn(const ExperimentConfig& c, unsigned workers)
{
    const auto n = c.require_uint("n");
    const auto mode_tag = c.get_string("mode", n * (n + 1) / 2 <= SymmetricEnumeration::kMaxBits && n <= 5
                                                   ? "exhaustive"
                                                   : "monte-carlo");
    QnMode mode;
    if (mode_tag == "exhaustive") mode = QnMode::Exhaustive;
    else if (mode_tag == "monte-carlo") mode = QnMode::MonteCarlo;
    else throw std::invalid_argument("mode must be exhaustive or monte-carlo");
    const auto q = estimate_qn(n, mode, c.trials.value_or(10000), c.seed, workers);
    VerifierOutput out;
    Row r = base_row(0, c.seed);
    r.add("n", Cell::uinteger(n))
        .add("mode", Cell::string(mode_tag))
        .add("singular", Cell::uinteger(q.singular))
        .add("total", Cell::uinteger(q.total))
        .add("estimate", Cell::rational(q.estimate));
    if (mode == QnMode::Exhaustive) {
        r.add("wilson_lo", Cell::rational(q.estimate)).add("wilson_hi", Cell::rational(q.estimate));
    } else {
        r.add("wilson_lo", Cell::real(q.wilson.lo)).add("wilson_hi", Cell::real(q.wilson.hi));
    }
    r.add("comparison_2_pow_minus_n", Cell::rational(q.comparison)).add("log2_target", Cell::real(q.log2_target));
    out.rows.push_back(std::move(r));
    return out;
}

VerifierOutput run_badset(const ExperimentConfig& c, unsigned workers)
{
    const auto n = c.require_uint("n");
    const PrimeField field(c.get_uint("p", 3));
    const auto k = static_cast<unsigned>(c.get_uint("k", 1));
    const auto t = c.get_uint("t", 1);
    const auto mode_tag = c.get_string("mode", "global");
    BadSetMode mode;
    BadSetParams params;
    if (mode_tag == "global") {
        mode = BadSetMode::Global;
        params = BadSetParams::global(k, c.get_uint("s", n), t);
    } else if (mode_tag == "window") {
        mode = BadSetMode::Window;
        params = BadSetParams::window(k, c.require_uint("s1"), c.require_uint("s2"), c.require_uint("d"), t);
    } else {
        throw std::invalid_argument("mode must be global or window");
    }
    const auto res = enumerate_bad_set(n, field, params, mode, workers);
    VerifierOutput out;
    out.all_ok = res.within_bound && res.monotone_in_t;
    Row r = base_row(0, c.seed);
    r.add("mode", Cell::string(mode_tag))
        .add("p", Cell::uinteger(field.modulus()))
        .add("n", Cell::uinteger(n))
        .add("k", Cell::uinteger(k))
        .add("s1", Cell::uinteger(params.s1))
        .add("s2", Cell::uinteger(params.s2))
        .add("d", Cell::uinteger(params.d))
        .add("t", Cell::uinteger(t))
        .add("count", Cell::integer(res.count))
        .add("bound", Cell::real(res.bound))
        .add("ratio", Cell::real(to_double(Rational(res.count)) / res.bound))
        .add("within_bound", Cell::boolean(res.within_bound))
        .add("monotone_in_t", Cell::boolean(res.monotone_in_t))
        .add("ok", Cell::boolean(out.all_ok));
    out.rows.push_back(std::move(r));
    return out;
}

VerifierOutput run_halasz(const ExperimentConfig& c, unsigned)
{
    const auto grid = grid_from(c, 64);
    HalaszInstance in{FpVector(PrimeField(3), std::vector<std::uint32_t>{}), 1, Rational(1)};
    if (c.params.count("a")) {
        const PrimeField field(c.get_uint("p", 101));
        std::vector<std::uint32_t> v;
        for (auto x : c.get_uint_list("a", {})) v.push_back(field.reduce(static_cast<std::int64_t>(x % field.modulus())));
        in = {FpVector(field, std::move(v)), static_cast<unsigned>(c.get_uint("k", 1)),
              c.get_rational("f", Rational(1))};
    } else if (c.params.count("n")) {
        const PrimeField field(c.get_uint("p", 101));
        RngStream rng(c.seed, 0);
        in = {random_fp_vector(rng, field, c.require_uint("n")), static_cast<unsigned>(c.get_uint("k", 1)),
              c.get_rational("f", Rational(1))};
    } else {
        RngStream rng(c.seed, 0);
        in = random_halasz_instance(rng);
    }
    const double probe = std::stod(c.get_string("c", "1.0"));
    const auto r = halasz_check(in.a, in.k, in.f, probe, grid);
    VerifierOutput out;
    out.all_ok = r.holds;
    out.rows.push_back(halasz_row(0, c.seed, in, r)
                           .add("c_probe", Cell::real(probe))
                           .add("rhs", Cell::real(r.rhs))
                           .add("ok", Cell::boolean(r.holds)));
    return out;
}

VerifierOutput run_schedule(const ExperimentConfig& c, unsigned)
{
    VerifierOutput out;
    std::uint64_t instance = 0;
    for (auto n : c.get_uint_list("n", {16, 10000})) {
        const auto s = param_schedule(n);
        out.rows.push_back(base_row(instance++, c.seed)
                               .add("n", Cell::uinteger(s.n))
                               .add("k", Cell::uinteger(s.k))
                               .add("s1", Cell::uinteger(s.s1))
                               .add("s2", Cell::uinteger(s.s2))
                               .add("beta_n", Cell::uinteger(s.beta_n))
                               .add("d", Cell::uinteger(s.d))
                               .add("log2_alpha", Cell::real(s.log2_alpha))
                               .add("log2_p_nominal", Cell::real(s.log2_p_nominal))
                               .add("p", s.p ? Cell::uinteger(*s.p) : Cell::string("none"))
                               .add("log2_target", Cell::real(s.log2_target)));
    }
    return out;
}

}  // namespace

std::vector<std::string> verifier_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

VerifierOutput run_verifier(const std::string& name, const ExperimentConfig& config, unsigned workers)
{
    auto it = registry().find(name);
    if (it == registry().end()) {
        std::string msg = "unknown verifier '" + name + "'; registered:";
        for (const auto& n : verifier_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return it->second(config, workers);
}

RunResult run_experiment(const ExperimentConfig& config, unsigned workers)
{
    VerifierOutput v;
    if (config.command == "qn") v = run_qn(config, workers);
    else if (config.command == "verify") v = run_verifier(config.verifier, config, workers);
    else if (config.command == "badset") v = run_badset(config, workers);
    else if (config.command == "halasz") v = run_halasz(config, workers);
    else if (config.command == "schedule") v = run_schedule(config, workers);
    else throw std::invalid_argument("unknown command '" + config.command + "'");

    RunResult out;
    out.all_ok = v.all_ok;
    out.report.meta = {std::string(kVersion), config.seed, config.hash(),
                       config.command == "verify" ? "verify " + config.verifier : config.command};
    std::stable_sort(v.rows.begin(), v.rows.end(), [](const Row& a, const Row& b) {
        const auto* x = a.find("instance");
        const auto* y = b.find("instance");
        if (!x || !y) return false;
        return Integer(x->text) < Integer(y->text);
    });
    out.report.rows = std::move(v.rows);
    return out;
}

}  // namespace symsing
