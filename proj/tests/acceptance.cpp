// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "symsing/addstruct.hpp"
#include "symsing/anticon.hpp"
#include "symsing/experiment.hpp"
#include "symsing/lemmalab.hpp"
#include "symsing/matcore.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace symsing;
namespace fs = std::filesystem;

namespace {

Rational q(std::int64_t num, std::int64_t den = 1)
{
    return make_rational(num, den);
}

ExperimentConfig verify_config(const std::string& verifier, std::uint64_t seed = 0)
{
    ExperimentConfig c;
    c.command = "verify";
    c.verifier = verifier;
    c.seed = seed;
    return c;
}

unsigned workers()
{
    return std::max(1u, workers_from_env());
}

bool exact_qn(std::string& note)
{
    const auto q1 = estimate_qn(1, QnMode::Exhaustive, 0, 0).estimate;
    const auto q2 = estimate_qn(2, QnMode::Exhaustive, 0, 0).estimate;
    const auto q3 = estimate_qn(3, QnMode::Exhaustive, 0, 0).estimate;
    const auto q4 = estimate_qn(4, QnMode::Exhaustive, 0, 0).estimate;
    note = "q1=" + to_fraction_string(q1) + " q2=" + to_fraction_string(q2) + " q3=" + to_fraction_string(q3) +
           " q4=" + to_fraction_string(q4);
    return q1 == 0 && q2 == q(1, 2) && q3 == q(1, 2) && q4 == q(1, 2);
}

bool laplace_identity(std::string& note)
{
    std::size_t checked = 0;
    for (const auto& s : enumerate_symmetric(3)) {
        const auto a = s.to_int_matrix();
        for (int x1 : {-1, 1})
            for (std::uint32_t mask = 0; mask < 8; ++mask) {
                const IntVector x{mask & 1 ? 1 : -1, mask & 2 ? 1 : -1, mask & 4 ? 1 : -1};
                const auto m = bordered(x1, x, a);
                if (laplace_expansion(m) != det_int(m)) return false;
                ++checked;
            }
    }
    note = std::to_string(checked) + " bordered matrices";
    return checked == 64 * 16;
}

bool adjugate_factorization_all(std::string& note)
{
    std::size_t matrices = 0, borders = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& s : enumerate_symmetric(n)) {
            if (rank_q(s) + 1 != n) continue;
            const auto a = s.to_int_matrix();
            const auto f = adjugate_factorization(a);
            if (!(a * f.a).is_zero() || f.a.is_zero()) return false;
            const auto adj = adjugate(a);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (Rational(adj(i, j)) != f.lambda * f.a[i] * f.a[j]) return false;
            if (f.det_scale != -f.lambda) return false;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{2} << n); ++mask) {
                std::vector<Integer> x;
                Integer dot = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    x.emplace_back((mask >> (i + 1) & 1) ? 1 : -1);
                    dot += f.a[i] * x.back();
                }
                const Integer det = det_int(bordered((mask & 1) ? 1 : -1, IntVector(std::move(x)), a));
                if (Rational(det) != f.det_scale * dot * dot) return false;
                ++borders;
            }
            ++matrices;
        }
    note = std::to_string(matrices) + " corank-1 matrices, " + std::to_string(borders) +
           " borders, det = -lambda (a.x)^2";
    return matrices > 0;
}

bool decoupling(std::string& note)
{
    auto c = verify_config("decoupling", 1);
    c.trials = 10000;
    const auto r = run_verifier("decoupling", c, workers());
    note = std::to_string(r.rows.size()) + " pairs";
    return r.all_ok && r.rows.size() == 10000;
}

bool restriction_lemmas(std::string& note)
{
    const std::vector<MuParam> mus{MuParam::zero(), MuParam(q(1, 4)), MuParam::half()};
    std::map<std::pair<oracle::Vec, int>, Rational> memo;
    auto rho = [&](const oracle::Vec& v, int m) -> const Rational& {
        auto [it, fresh] = memo.try_emplace({v, m});
        if (fresh) {
            std::vector<Integer> c(v.begin(), v.end());
            it->second = atom_probability(IntVector(std::move(c)), mus[m]);
        }
        return it->second;
    };
    std::uint64_t checks = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
        oracle::Vec a(n, -3);
        while (true) {
            for (int m = 0; m < 3; ++m) {
                const auto& mu = mus[m].value();
                const Rational side = (1 - mu) / 2;
                const Rational base = mu > side ? mu : side;
                const auto& full = rho(a, m);
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    oracle::Vec sub;
                    unsigned dropped = 0;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (mask >> i & 1) sub.push_back(a[i]);
                        else ++dropped;
                    }
                    const auto& part = rho(sub, m);
                    Rational scale = 1;
                    for (unsigned i = 0; i < dropped; ++i) scale /= base;
                    if (full > part || part > scale * full) return false;
                    ++checks;
                }
            }
            std::size_t i = n;
            while (i > 0 && a[i - 1] == 3) a[--i] = -3;
            if (i == 0) break;
            ++a[i - 1];
        }
    }
    note = std::to_string(checks) + " subset checks";
    return true;
}

bool rk_cross_validation(std::string& note)
{
    std::uint64_t checks = 0;
    for (std::uint32_t p : {3u, 5u}) {
        const PrimeField field(p);
        for (std::size_t n = 1; n <= 3; ++n)
            oracle::for_each_fp(n, p, [&](const oracle::Vec& v) {
                std::vector<std::uint32_t> c(v.begin(), v.end());
                const FpVector a(field, std::move(c));
                for (unsigned k = 1; k <= 2; ++k) {
                    if (rk_convolution(a, k) != rk_bruteforce(a, k)) throw std::runtime_error("rk mismatch");
                    if (k <= n && !check_rk_gap(a, k).ok) throw std::runtime_error("rk gap violated");
                    ++checks;
                }
            });
    }
    note = std::to_string(checks) + " (a, k) pairs";
    return true;
}

bool counting(std::string& note)
{
    std::uint64_t rows = 0;
    bool ok = true;
    for (const std::string name : {"counting-lemma", "counting-corollary"}) {
        auto c = verify_config(name);
        c.params["p_max"] = "1000000";
        c.params["n_max"] = "20";
        const auto r = run_verifier(name, c, workers());
        ok &= r.all_ok;
        rows += r.rows.size();
    }
    note = std::to_string(rows) + " (p, n, k, s, t) rows over all p^n <= 10^6";
    return ok;
}

bool rank_step(std::string& note)
{
    const auto ex = rank_step_exhaustive(3, 1);
    const auto mc = rank_step_sampled(4, 2, 100000, 1, workers());
    note = "exhaustive " + to_fraction_string(ex.frequency) + " vs " + to_fraction_string(ex.bound) + "; sampled " +
           std::to_string(mc.successes) + "/" + std::to_string(mc.conditioned) + " wilson.hi " +
           std::to_string(mc.wilson.hi) + " vs " + to_fraction_string(mc.bound);
    return ex.ok && ex.frequency >= q(3, 4) && mc.ok;
}

bool halasz(std::string& note)
{
    auto c = verify_config("halasz", 1);
    c.trials = 100;
    const auto h = run_verifier("halasz", c, workers());
    auto s = verify_config("char-sum", 1);
    s.trials = 1000;
    const auto cs = run_verifier("char-sum", s, workers());
    const auto* c_star = h.rows.empty() ? nullptr : h.rows.front().find("c_star");
    note = "C* = " + (c_star ? c_star->text : std::string("?")) + ", " + std::to_string(cs.rows.size()) +
           " char-sum instances";
    return h.all_ok && h.rows.size() == 100 && cs.all_ok && cs.rows.size() == 1000;
}

bool sumset(std::string& note)
{
    auto c = verify_config("sumset", 1);
    c.trials = 100;
    const auto r = run_verifier("sumset", c, workers());
    std::size_t small = 0;
    for (const auto& row : r.rows) small += row.find("small_threshold")->text == "true";
    note = std::to_string(r.rows.size()) + " instances, " + std::to_string(small) + " below |supp|/100";
    return r.all_ok && r.rows.size() == 100;
}

bool events_vs_oracle(std::string& note)
{
    const PrimeField f3(3);
    const std::vector<MuParam> grid{MuParam::zero(), MuParam(q(1, 4)), MuParam::half()};
    const std::vector<Rational> grid_q{q(0), q(1, 4), q(1, 2)};
    std::size_t compared = 0;
    for (const auto& m : enumerate_symmetric(3)) {
        const auto ref = oracle::sym_from_code(3, m.code());
        for (std::size_t beta : {0, 1}) {
            for (const auto& alpha : {q(1, 4), q(3, 8), q(1, 2)}) {
                if (orth_event_check(m, alpha, beta, f3, grid).verdict !=
                    oracle::orth_event(ref, alpha, beta, 3, grid_q))
                    return false;
                ++compared;
            }
            for (std::size_t d = 1; d <= 4; ++d) {
                if (spt_event_check(m, d, beta, f3).verdict != oracle::spt_event(ref, d, beta, 3)) return false;
                ++compared;
            }
        }
    }
    note = std::to_string(compared) + " verdicts on 64 matrices";
    return true;
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool cli_rerun(std::string& note)
{
    const auto dir = fs::temp_directory_path() / "symsing_acceptance";
    fs::create_directories(dir);
    const std::string args = " verify halasz --trials 12 --seed 31 --format jsonl > ";
    std::uint64_t hashes[2];
    for (int i = 0; i < 2; ++i) {
        const auto out = dir / ("run" + std::to_string(i) + ".jsonl");
        const std::string env = i == 0 ? "SYMSING_THREADS=1 " : "SYMSING_THREADS=4 ";
        const int status = std::system((env + SYMSING_CLI_PATH + args + out.string()).c_str());
        if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) return false;
        hashes[i] = fnv1a64(slurp(out));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hashes[0]));
    note = std::string("fnv1a64 ") + buf;
    return hashes[0] == hashes[1];
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"exact q_1..q_4", exact_qn},
        {"laplace identity, 3x3", laplace_identity},
        {"adjugate factorization, corank 1, n <= 4", adjugate_factorization_all},
        {"decoupling, 10^4 pairs", decoupling},
        {"restriction lemmas, [-3,3]^n, n <= 5", restriction_lemmas},
        {"R_k convolution vs brute force, gap", rk_cross_validation},
        {"counting lemma and corollary, p^n <= 10^6", counting},
        {"rank step, exhaustive (3,1) and sampled (4,2)", rank_step},
        {"halasz envelope and char-sum bound", halasz},
        {"level-set sumset containment", sumset},
        {"orth/spt events vs brute force", events_vs_oracle},
        {"byte-identical CLI reruns", cli_rerun},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = criteria[i].second(note);
        } catch (const std::exception& e) {
            note = std::string("error: ") + e.what();
        }
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
        std::printf("%s %2zu %s (%.2f s) %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    took.count(), note.c_str());
        std::fflush(stdout);
        failed += !ok;
    }
    return failed == 0 ? 0 : 1;
}
