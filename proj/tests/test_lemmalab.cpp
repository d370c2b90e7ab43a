#include "symsing/addstruct.hpp"
#include "symsing/lemmalab.hpp"
#include "symsing/rng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace symsing;

namespace {

Rational q(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(num, den);
}

SymMatrix all_ones(std::size_t n)
{
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m.set(i, j, 1);
    return m;
}

const std::vector<MuParam> kZeroGrid{MuParam::zero()};

}  // namespace

TEST(Wilson, Basics)
{
    const auto w = wilson_interval(50, 100, 1.96);
    EXPECT_LT(w.lo, 0.5);
    EXPECT_GT(w.hi, 0.5);
    EXPECT_NEAR(w.lo + w.hi, 1.0, 1e-12);
    EXPECT_EQ(wilson_interval(0, 10, 3).lo, 0.0);
    EXPECT_EQ(wilson_interval(10, 10, 3).hi, 1.0);
    EXPECT_THROW(wilson_interval(1, 0, 3), std::invalid_argument);
}

TEST(Odlyzko, Examples)
{
    const std::vector<IntVector> ones{IntVector{1, 1, 1}};
    const auto r = odlyzko_check(ones, 3);
    EXPECT_EQ(r.count, 2u);
    EXPECT_EQ(r.dimension, 1u);
    EXPECT_EQ(r.bound, 2);
    EXPECT_TRUE(r.ok);
    const std::vector<IntVector> e1{IntVector{1, 0}};
    EXPECT_EQ(odlyzko_check(e1, 2).count, 0u);
    EXPECT_THROW(odlyzko_check(std::vector<IntVector>{}, 21), BudgetExceeded);
}

TEST(Odlyzko, RandomPlanesInDimensionTen)
{
    for (std::uint64_t t = 0; t < 100; ++t) {
        RngStream r(64, t);
        std::vector<IntVector> basis;
        for (int b = 0; b < 2; ++b) {
            std::vector<Integer> c(10);
            // Half the planes contain sign vectors, the rest are generic.
            for (auto& x : c) x = t % 2 ? static_cast<std::int64_t>(r.below(2)) * 2 - 1
                                        : static_cast<std::int64_t>(r.below(7)) - 3;
            basis.emplace_back(std::move(c));
        }
        const auto rep = odlyzko_check(basis, 10);
        EXPECT_LE(rep.count, 4u);
        EXPECT_TRUE(rep.ok);
    }
}

TEST(RankStep, ExhaustiveSmallCase)
{
    const auto r = rank_step_exhaustive(3, 1);
    EXPECT_EQ(r.conditioned, 128u);
    EXPECT_EQ(r.successes, 96u);
    EXPECT_EQ(r.frequency, q(3, 4));
    EXPECT_EQ(r.bound, q(3, 4));
    EXPECT_TRUE(r.ok);
    EXPECT_TRUE(r.exhaustive);
}

TEST(RankStep, ExhaustiveMatchesOracle)
{
    // Count extensions of every rank-2 4x4 matrix directly.
    std::uint64_t cond = 0, succ = 0;
    for (std::uint64_t code = 0; code < (1u << 15); ++code) {
        const auto m = oracle::sym_from_code(5, code);
        oracle::Mat lead(4, oracle::Vec(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) lead[i][j] = m[i][j];
        if (oracle::rank(lead) != 2) continue;
        ++cond;
        succ += oracle::rank(m) == 4;
    }
    const auto r = rank_step_exhaustive(4, 2);
    EXPECT_EQ(r.conditioned, cond);
    EXPECT_EQ(r.successes, succ);
    EXPECT_TRUE(r.ok);
}

TEST(RankStep, Errors)
{
    EXPECT_THROW(rank_step_exhaustive(2, 1), std::invalid_argument);
    try {
        rank_step_exhaustive(2, 0);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "conditioning event has probability zero");
    }
}

TEST(RankStep, SampledIsReproducibleAndWorkerIndependent)
{
    const auto a = rank_step_sampled(4, 2, 3000, 9, 1);
    const auto b = rank_step_sampled(4, 2, 3000, 9, 3);
    EXPECT_EQ(a.conditioned, b.conditioned);
    EXPECT_EQ(a.successes, b.successes);
    EXPECT_GE(a.wilson.hi, to_double(a.bound));
    EXPECT_FALSE(a.exhaustive);
}

TEST(Laplace, AllThreeByThreeBorders)
{
    for (const auto& s : enumerate_symmetric(3)) {
        const auto a = s.to_int_matrix();
        for (int x1 : {-1, 1})
            for (std::uint32_t mask = 0; mask < 8; ++mask) {
                const IntVector x{mask & 1 ? 1 : -1, mask & 2 ? 1 : -1, mask & 4 ? 1 : -1};
                const auto m = bordered(x1, x, a);
                ASSERT_EQ(laplace_expansion(m), det_int(m));
            }
    }
    EXPECT_THROW(laplace_expansion(IntMatrix{{1}}), std::invalid_argument);
}

TEST(Laplace, MatchesLeibnizOnGeneralIntegerMatrices)
{
    for (std::uint64_t t = 0; t < 200; ++t) {
        RngStream r(6, t);
        const std::size_t n = 2 + r.below(4);
        IntMatrix m(n, n);
        oracle::Mat ref(n, oracle::Vec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const auto v = static_cast<std::int64_t>(r.below(9)) - 4;
                m(i, j) = m(j, i) = v;
                ref[i][j] = ref[j][i] = v;
            }
        EXPECT_EQ(laplace_expansion(m), oracle::det(ref));
    }
}

TEST(Adjugate, Examples)
{
    const auto f = adjugate_factorization(IntMatrix{{1, 1}, {1, 1}});
    EXPECT_EQ(f.lambda, 1);
    EXPECT_EQ(f.a, (IntVector{1, -1}));
    EXPECT_EQ(f.det_scale, -1);
    const auto g = adjugate_factorization(IntMatrix{{1, -1}, {-1, 1}});
    EXPECT_EQ(g.lambda, 1);
    EXPECT_EQ(g.a, (IntVector{1, 1}));
    EXPECT_THROW(adjugate_factorization(IntMatrix{{1, 1}, {1, -1}}), std::invalid_argument);
    EXPECT_THROW(adjugate_factorization(IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), std::invalid_argument);
}

TEST(Adjugate, BorderedDeterminantIsMinusLambdaSquare)
{
    // With det A = 0 the expansion leaves -sum c_ij x_i x_j = -lambda (a.x)^2.
    std::size_t corank_one = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& s : enumerate_symmetric(n)) {
            const auto a = s.to_int_matrix();
            if (rank_q(a) + 1 != n) continue;
            ++corank_one;
            const auto f = adjugate_factorization(a);
            ASSERT_TRUE((a * f.a).is_zero());
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                std::vector<Integer> c(n);
                Integer dot = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    c[i] = (mask >> i & 1) ? 1 : -1;
                    dot += c[i] * f.a[i];
                }
                const auto m = bordered(1, IntVector(c), a);
                ASSERT_EQ(Rational(det_int(m)), f.det_scale * Rational(dot * dot));
                ASSERT_EQ(Rational(det_int(m)), -f.lambda * Rational(dot * dot));
            }
        }
    EXPECT_GT(corank_one, 0u);
}

TEST(RVector, Examples)
{
    const IntMatrix a{{1, 1}, {1, -1}};
    const std::vector<std::size_t> u2{0};
    const auto r = r_vector(a, u2, IntVector{2});
    EXPECT_EQ(r, (IntVector{-2, -2}));
    EXPECT_EQ((a * r)[1], 0);
    EXPECT_TRUE(r_vector(a, u2, IntVector{0}).is_zero());
    EXPECT_THROW(r_vector(IntMatrix{{1, 1}, {1, 1}}, u2, IntVector{1}), std::invalid_argument);
}

TEST(RVector, ProductIsDeterminantTimesW)
{
    // A adj(A) = det(A) I, so A R is det(A) w on U2 and zero elsewhere.
    for (std::uint64_t t = 0; t < 100; ++t) {
        RngStream r(12, t);
        const auto a = sample_symmetric(5, r).to_int_matrix();
        if (det_int(a) == 0) continue;
        const std::vector<std::size_t> u2{1, 3};
        const IntVector w{static_cast<std::int64_t>(r.below(5)) - 2, 3};
        const auto prod = a * r_vector(a, u2, w);
        const auto det = det_int(a);
        EXPECT_EQ(prod[0], 0);
        EXPECT_EQ(prod[1], det * w[0]);
        EXPECT_EQ(prod[2], 0);
        EXPECT_EQ(prod[3], det * w[1]);
        EXPECT_EQ(prod[4], 0);
    }
}

TEST(Decoupling, Examples)
{
    const std::vector<Rational> half{q(1, 2), q(1, 2)};
    const auto always = decoupling_check(half, half, [](std::size_t, std::size_t) { return true; });
    EXPECT_EQ(always.lhs, 1);
    EXPECT_EQ(always.rhs, 1);
    EXPECT_TRUE(always.ok);
    const auto eq = decoupling_check(half, half, [](std::size_t y, std::size_t z) { return y == z; });
    EXPECT_EQ(eq.lhs, q(1, 16));
    EXPECT_EQ(eq.rhs, q(1, 8));
    EXPECT_TRUE(eq.ok);
}

TEST(Decoupling, JointLaw)
{
    const std::vector<std::vector<Rational>> product{{q(1, 6), q(1, 3)}, {q(1, 6), q(1, 3)}};
    EXPECT_TRUE(decoupling_check(product, [](std::size_t y, std::size_t z) { return y != z; }).ok);
    const std::vector<std::vector<Rational>> coupled{{q(1, 2), q(0)}, {q(0), q(1, 2)}};
    try {
        decoupling_check(coupled, [](std::size_t, std::size_t) { return true; });
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "decoupling requires independence");
    }
}

TEST(Decoupling, RandomEventsAgainstDirectSum)
{
    for (std::uint64_t t = 0; t < 500; ++t) {
        RngStream r(17, t);
        auto marginal = [&](std::size_t size) {
            std::vector<std::int64_t> w(size);
            std::int64_t total = 0;
            for (auto& x : w) total += x = 1 + static_cast<std::int64_t>(r.below(5));
            std::vector<Rational> out;
            for (auto x : w) out.push_back(q(x, total));
            return out;
        };
        const auto py = marginal(1 + r.below(4));
        const auto pz = marginal(1 + r.below(4));
        const auto bits = r.next();
        auto event = [&](std::size_t y, std::size_t z) { return (bits >> (4 * y + z)) & 1; };
        Rational pe = 0, rhs = 0;
        for (std::size_t y = 0; y < py.size(); ++y)
            for (std::size_t z = 0; z < pz.size(); ++z)
                if (event(y, z)) pe += py[y] * pz[z];
        for (std::size_t y = 0; y < py.size(); ++y)
            for (std::size_t y2 = 0; y2 < py.size(); ++y2)
                for (std::size_t z = 0; z < pz.size(); ++z)
                    for (std::size_t z2 = 0; z2 < pz.size(); ++z2)
                        if (event(y, z) && event(y2, z) && event(y, z2) && event(y2, z2))
                            rhs += py[y] * py[y2] * pz[z] * pz[z2];
        const auto rep = decoupling_check(py, pz, event);
        ASSERT_EQ(rep.lhs, pe * pe * pe * pe);
        ASSERT_EQ(rep.rhs, rhs);
        ASSERT_TRUE(rep.ok);
    }
}

TEST(NullEvent, Examples)
{
    const IntMatrix ones{{1, 1}, {1, 1}};
    const auto ok = null_event_check(ones, q(1, 2), kZeroGrid);
    EXPECT_TRUE(ok.verdict);
    EXPECT_FALSE(ok.grid_approximate);
    const auto bad = null_event_check(ones, q(1, 4), kZeroGrid);
    EXPECT_FALSE(bad.verdict);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_EQ(witness_string(*bad.witness), "(1,-1)");
    EXPECT_TRUE(null_event_check(IntMatrix{{1, 1}, {1, -1}}, q(0), kZeroGrid).verdict);
    const auto grid = mu_grid(4);
    EXPECT_TRUE(null_event_check(ones, q(1, 2), grid).grid_approximate);
    try {
        null_event_check(IntMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, q(1, 2), kZeroGrid);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "enumerate kernel lattice not supported");
    }
}

TEST(OrthEvent, AllOnesExamples)
{
    const auto m = all_ones(3);
    const PrimeField f3(3);
    const auto fail = orth_event_check(m, q(1, 4), 0, f3, kZeroGrid);
    EXPECT_FALSE(fail.verdict);
    ASSERT_TRUE(fail.witness.has_value());
    const auto& w = std::get<FpVector>(*fail.witness);
    // The reported witness is the first failing vector; (1,1,1) fails too.
    EXPECT_EQ(witness_string(*fail.witness), "(0,1,2)");
    EXPECT_EQ(atom_probability(w, MuParam::zero()), q(1, 2));
    const FpVector ones3(f3, {1, 1, 1});
    EXPECT_EQ(atom_probability(ones3, MuParam::zero()), q(3, 8));
    EXPECT_GT(atom_probability(ones3, MuParam::zero()), q(1, 4));
    EXPECT_TRUE(orth_event_check(m, q(1, 2), 0, f3, kZeroGrid).verdict);
    EXPECT_TRUE(orth_event_check(m, q(1), 0, f3, mu_grid(8)).verdict);
}

TEST(SptEvent, Examples)
{
    const auto m = all_ones(3);
    const PrimeField f3(3);
    EXPECT_TRUE(spt_event_check(m, 1, 0, f3).verdict);
    EXPECT_TRUE(spt_event_check(m, 2, 0, f3).verdict);
    const auto strict = spt_event_check(m, 4, 0, f3);
    EXPECT_FALSE(strict.verdict);
    EXPECT_TRUE(strict.witness.has_value());
}

TEST(Events, AgreeWithBruteForceOracle)
{
    const PrimeField f3(3);
    const std::vector<MuParam> grid{MuParam::zero(), MuParam(q(1, 4)), MuParam::half()};
    const std::vector<Rational> grid_q{q(0), q(1, 4), q(1, 2)};
    for (const auto& m : enumerate_symmetric(3)) {
        const auto ref = oracle::sym_from_code(3, m.code());
        for (std::size_t beta : {0, 1})
            for (const auto& alpha : {q(1, 4), q(3, 8), q(1, 2)}) {
                ASSERT_EQ(orth_event_check(m, alpha, beta, f3, grid).verdict,
                          oracle::orth_event(ref, alpha, beta, 3, grid_q));
            }
        for (std::size_t beta : {0, 1})
            for (std::size_t d = 1; d <= 4; ++d)
                ASSERT_EQ(spt_event_check(m, d, beta, f3).verdict, oracle::spt_event(ref, d, beta, 3));
    }
}

TEST(Events, WitnessesAreGenuine)
{
    const PrimeField f5(5);
    for (std::uint64_t t = 0; t < 30; ++t) {
        RngStream r(90, t);
        const auto m = sample_symmetric(4, r);
        const auto v = orth_event_check(m, q(1, 3), 1, f5, kZeroGrid);
        if (v.verdict) continue;
        const auto& w = std::get<FpVector>(*v.witness);
        EXPECT_FALSE(w.is_zero());
        EXPECT_GT(atom_probability(w, MuParam::zero()), q(1, 3));
        const auto ref = oracle::sym_from_code(4, m.code());
        EXPECT_GE(oracle::orthogonal_rows(ref, oracle::Vec(w.begin(), w.end()), 5) + 1, 4u);
    }
}

TEST(Events, VerdictsAreMonotone)
{
    const PrimeField f3(3);
    for (const auto& m : enumerate_symmetric(3)) {
        // Raising alpha or lowering beta_n can only help the orth event.
        if (orth_event_check(m, q(1, 4), 1, f3, kZeroGrid).verdict) {
            EXPECT_TRUE(orth_event_check(m, q(1, 2), 1, f3, kZeroGrid).verdict);
            EXPECT_TRUE(orth_event_check(m, q(1, 4), 0, f3, kZeroGrid).verdict);
        }
        if (spt_event_check(m, 3, 1, f3).verdict) EXPECT_TRUE(spt_event_check(m, 2, 0, f3).verdict);
    }
}

TEST(Events, IntegerNullFailureReducesToFpOrthFailure)
{
    // A singular integer matrix has a primitive kernel vector v; its reduction
    // is nonzero mod p and orthogonal to every row, and reduction can only raise
    // the atom probability. So a null-event failure forces an orth failure.
    const PrimeField f3(3);
    const Rational rho = q(3, 8);
    for (const auto& m : enumerate_symmetric(3)) {
        const auto a = m.to_int_matrix();
        if (rank_q(a) + 1 != 3) continue;
        if (null_event_check(a, rho, kZeroGrid).verdict) continue;
        EXPECT_FALSE(orth_event_check(m, rho, 0, f3, kZeroGrid).verdict);
    }
}

TEST(Events, FailureFrequency)
{
    const PrimeField f3(3);
    const auto freq = orth_failure_frequency(2, q(1, 2), 0, f3, kZeroGrid);
    std::uint64_t fails = 0;
    for (const auto& m : enumerate_symmetric(2))
        fails += !oracle::orth_event(oracle::sym_from_code(2, m.code()), q(1, 2), 0, 3, {q(0)});
    EXPECT_EQ(freq, q(static_cast<std::int64_t>(fails), 8));
}

TEST(Entropy, Examples)
{
    const auto half = entropy_bound(q(1, 2), 10);
    EXPECT_EQ(half.sum, 638);
    EXPECT_DOUBLE_EQ(half.bound, 1024.0);
    EXPECT_TRUE(half.ok);
    const auto zero = entropy_bound(q(0), 10);
    EXPECT_EQ(zero.sum, 1);
    EXPECT_DOUBLE_EQ(zero.bound, 1.0);
    EXPECT_THROW(entropy_bound(q(3, 5), 10), std::invalid_argument);
}

TEST(Entropy, SweepHolds)
{
    for (std::size_t n = 1; n <= 30; ++n)
        for (std::size_t j = 0; 2 * j <= n; ++j) EXPECT_TRUE(entropy_bound(q(j, n), n).ok) << n << ' ' << j;
}

TEST(Halasz, AllOnesInstance)
{
    const PrimeField f101(101);
    const FpVector a(f101, std::vector<std::uint32_t>(200, 1));
    const auto grid = mu_grid();
    const auto rep = halasz_check(a, 2, q(2), 1.0, grid);
    // Exact grid maximum from an independent rational DP over the walk.
    const Rational oracle_lhs = parse_rational(
        "11318564332012910145675522134685520484313073709426667105165/"
        "200867255532373784442745261542645325315275374222849104412672");
    EXPECT_EQ(rep.lhs, oracle_lhs);
    EXPECT_EQ(rep.lhs_mu.value(), 0);
    EXPECT_EQ(rep.rk, Integer(6) * ipow(Integer(200), 4));
    EXPECT_NEAR(rep.x_term, 6.0 / (16.0 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(rep.tail, std::exp(-1.0), 1e-15);
    EXPECT_NEAR(rep.rhs, 1.0 / 101 + rep.x_term + rep.tail, 1e-12);
    EXPECT_TRUE(rep.holds);
    EXPECT_FALSE(rep.vacuous);
    EXPECT_EQ(rep.c_min, 0.0);
    EXPECT_TRUE(rep.grid_approximate);
}

TEST(Halasz, VacuousAtTinySupport)
{
    const FpVector a(PrimeField(7), {1, 2, 3, 0, 5});
    const auto rep = halasz_check(a, 1, q(1, 25), 1.0, mu_grid(8));
    EXPECT_TRUE(rep.vacuous);
    EXPECT_TRUE(rep.holds);
}

TEST(Halasz, MinimalConstantIsTight)
{
    for (std::uint64_t t = 0; t < 20; ++t) {
        RngStream r(5, t);
        const std::size_t n = 100 + r.below(50);
        std::vector<std::uint32_t> c(n);
        for (auto& x : c) x = static_cast<std::uint32_t>(r.below(2)) ? 1 : 12;
        const FpVector a(PrimeField(13), c);
        const auto rep = halasz_check(a, 1, q(1, 4), 1.0, mu_grid(8));
        const auto again = halasz_check(a, 1, q(1, 4), rep.c_min, mu_grid(8));
        EXPECT_TRUE(again.holds);
        EXPECT_GE(rep.c_min, 0.0);
    }
}

TEST(Halasz, Errors)
{
    const FpVector a(PrimeField(7), std::vector<std::uint32_t>(100, 1));
    const auto grid = mu_grid(4);
    EXPECT_THROW(halasz_check(FpVector(PrimeField(7), {0, 0}), 1, q(1, 100), 1, grid), std::invalid_argument);
    EXPECT_THROW(halasz_check(a, 1, q(0), 1, grid), std::invalid_argument);
    EXPECT_THROW(halasz_check(a, 1, q(2), 1, grid), std::invalid_argument);
    EXPECT_THROW(halasz_check(a, 101, q(1), 1, grid), std::invalid_argument);
    EXPECT_THROW(halasz_check(a, 1, q(1), 1, std::span<const MuParam>{}), std::invalid_argument);
}

TEST(Halasz, UsableReadings)
{
    const auto u = halasz_usable(3, 1, 16);
    EXPECT_FALSE(u.as_printed);
    EXPECT_TRUE(u.inverted);
    EXPECT_FALSE(halasz_usable(5, 1, 16).inverted);  // (16/4)^1 = 4 < 5
    for (std::uint64_t p : {3, 5, 101})
        for (std::size_t s1 = 1; s1 <= 40; ++s1) EXPECT_FALSE(halasz_usable(p, 1, s1).as_printed);
}

TEST(Schedule, SmallN)
{
    const auto s = param_schedule(16);
    EXPECT_EQ(s.k, 2u);
    EXPECT_EQ(s.d, 6u);
    EXPECT_EQ(s.s1, 11u);
    EXPECT_EQ(s.s2, 13u);
    EXPECT_EQ(s.beta_n, 0u);
    EXPECT_NEAR(s.log2_alpha, -0.05203466319735611, 1e-13);
    ASSERT_TRUE(s.p.has_value());
    EXPECT_EQ(*s.p, 3u);
    EXPECT_THROW(param_schedule(1), std::invalid_argument);
}

TEST(Schedule, MatchesHighPrecisionReference)
{
    // Reference values from 50-digit arithmetic.
    const auto s = param_schedule(10000);
    EXPECT_EQ(s.k, 10u);
    EXPECT_EQ(s.s1, 921u);
    EXPECT_EQ(s.s2, 3034u);
    EXPECT_EQ(s.beta_n, 0u);
    EXPECT_EQ(s.d, 464u);
    EXPECT_NEAR(s.log2_alpha, -0.47419597793285823, 1e-13);
    EXPECT_NEAR(s.log2_p_nominal, 0.94839195586571647, 1e-13);
    EXPECT_NEAR(s.log2_target, -0.030348542587702927, 1e-14);
    EXPECT_EQ(s.p.value(), 3u);

    const auto m = param_schedule(1000000);
    EXPECT_EQ(m.k, 31u);
    EXPECT_EQ(m.s1, 13815u);
    EXPECT_EQ(m.s2, 117539u);
    EXPECT_EQ(m.d, 10000u);  // exact cube root of 10^12
    EXPECT_NEAR(m.log2_p_nominal, 3.6731062507449994, 1e-12);
    EXPECT_EQ(m.p.value(), 13u);
}

TEST(Schedule, ExactRootsAtPerfectPowers)
{
    EXPECT_EQ(param_schedule(81).k, 3u);
    EXPECT_EQ(param_schedule(80).k, 2u);
    EXPECT_EQ(param_schedule(27).d, 9u);
    EXPECT_EQ(param_schedule(26).d, 8u);
}

TEST(Assemble, Examples)
{
    EXPECT_DOUBLE_EQ(assemble_bound(0, INFINITY, 0, 0), 0.0);
    EXPECT_NEAR(assemble_bound(1.0 / 16, 2, 0, 0), 1.0 / 16 + std::pow(0.75, 0.25), 1e-15);
    EXPECT_NEAR(assemble_bound(1.0 / 16, 2, 0, 0), 0.993, 5e-4);
    EXPECT_EQ(assemble_bound(1, 0, 1, 1), 1.0);
    EXPECT_THROW(assemble_bound(2, 0, 0, 0), std::invalid_argument);
    EXPECT_THROW(assemble_bound(0, -1, 0, 0), std::invalid_argument);
}

TEST(Assemble, MonotoneInEveryArgument)
{
    const double alphas[] = {0, 0.01, 0.1}, betas[] = {1, 3, 8}, fails[] = {0, 0.001, 0.05};
    for (double a : alphas)
        for (double b : betas)
            for (double f : fails) {
                const double base = assemble_bound(a, b, f, f);
                EXPECT_LE(base, assemble_bound(a + 0.01, b, f, f) + 1e-15);
                EXPECT_LE(base, assemble_bound(a, b, f + 0.01, f) + 1e-15);
                EXPECT_LE(base, assemble_bound(a, b, f, f + 0.01) + 1e-15);
            }
}

TEST(Witness, Strings)
{
    EXPECT_EQ(witness_string(Witness{IntVector{1, -1, 0}}), "(1,-1,0)");
    EXPECT_EQ(witness_string(Witness{IntMatrix{{1, 1}, {1, 1}}}), "[[1,1],[1,1]]");
    EXPECT_EQ(witness_string(Witness{FpVector(PrimeField(5), {4, 0})}), "(4,0)");
}
