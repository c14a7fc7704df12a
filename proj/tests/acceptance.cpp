// Acceptance suite: one pass/fail line per criterion, each with its stated
// tolerance and runtime budget enforced.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ratcode/code.hpp"
#include "ratcode/gf.hpp"
#include "ratcode/zeta.hpp"

using namespace ratcode;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed > limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %d s", elapsed, static_cast<int>(limit_s));
    std::string line = std::string(ok ? "PASS" : "FAIL") + "  " + name + " (" + timing + ")";
    if (!detail.empty()) line += " -- " + detail;
    std::printf("%s\n", line.c_str());
    if (!ok) ++g_failures;
}

Code make_code(std::uint64_t p, unsigned alpha, unsigned h) {
    return Code(CodeParams(FieldSpec::make(p, alpha), h));
}

// independent oracle for the elliptic fixtures: count points of
// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 by exhaustion, plus infinity
std::uint64_t weierstrass_point_count(const FieldSpecPtr& f, std::uint64_t a1, std::uint64_t a3,
                                      std::uint64_t a2, std::uint64_t a4, std::uint64_t a6) {
    std::uint64_t count = 1;  // the point at infinity
    for (std::uint64_t xi = 0; xi < f->q(); ++xi)
        for (std::uint64_t yi = 0; yi < f->q(); ++yi) {
            const auto x = f->from_index(xi), y = f->from_index(yi);
            const auto lhs = y * y + f->from_index(a1) * x * y + f->from_index(a3) * y;
            const auto rhs =
                x * x * x + f->from_index(a2) * x * x + f->from_index(a4) * x + f->from_index(a6);
            if (lhs == rhs) ++count;
        }
    return count;
}

void criterion_1_rho1_table() {
    criterion("1. rho1 table reproduction", 5.0, [](std::string& detail) {
        const std::pair<std::uint64_t, double> table[] = {
            {4, 4.3461},  {9, 1.8541},   {16, 1.1606},  {25, 0.8348},  {49, 0.5276},
            {64, 0.4440}, {81, 0.3827},  {121, 0.2990}, {169, 0.2448}, {256, 0.1919}};
        for (const auto& [q, expected] : table) {
            const double got = rho1(q);
            if (std::abs(got - expected) > 1e-4) {
                detail = "q=" + std::to_string(q) + " got " + std::to_string(got);
                return false;
            }
        }
        return true;
    });
}

void criterion_2_code_size() {
    criterion("2. exact code size q^(2h+1)", 30.0, [](std::string& detail) {
        const std::tuple<std::uint64_t, unsigned, unsigned> cases[] = {
            {2, 1, 1}, {3, 1, 1}, {2, 2, 1}, {5, 1, 1}, {5, 1, 2}};
        for (const auto& [p, alpha, h] : cases) {
            Code code = make_code(p, alpha, h);
            const auto brute = code.brute_force();
            const auto words = code.enumerate();
            if (brute.size() != code.size() || words.size() != code.size()) {
                detail = "q=" + std::to_string(code.params().spec->q()) +
                         " h=" + std::to_string(h) + ": brute " + std::to_string(brute.size()) +
                         ", enumerate " + std::to_string(words.size()) + ", expected " +
                         std::to_string(code.size());
                return false;
            }
            std::set<std::vector<std::uint64_t>> distinct;
            for (const auto& [m, w] : words) {
                std::vector<std::uint64_t> key;
                for (const auto& s : w.symbols())
                    key.push_back(s.is_infinity() ? code.params().spec->q() : s.value().index());
                distinct.insert(std::move(key));
            }
            if (distinct.size() != code.size()) {
                detail = "enumerate produced duplicate words";
                return false;
            }
        }
        return true;
    });
}

void criterion_3_distance_bound() {
    criterion("3. distance bound (agreement <= h1+h2)", 60.0, [](std::string& detail) {
        for (auto [p, h] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {5, 1}}) {
            Code code = make_code(p, 1, h);
            const auto fset = code.brute_force();
            std::vector<RationalFunction> fs(fset.begin(), fset.end());
            std::vector<Codeword> ws;
            ws.reserve(fs.size());
            for (const auto& f : fs) ws.push_back(code.word_of(f));
            const unsigned N = code.params().N;
            unsigned min_dist = N + 1;
            for (std::size_t i = 0; i < fs.size(); ++i)
                for (std::size_t j = i + 1; j < fs.size(); ++j) {
                    const unsigned d = hamming_distance(ws[i], ws[j]);
                    min_dist = std::min(min_dist, d);
                    if (N - d > static_cast<unsigned>(fs[i].degree() + fs[j].degree())) {
                        detail = "q=" + std::to_string(p) + ": functions of degrees " +
                                 std::to_string(fs[i].degree()) + "," +
                                 std::to_string(fs[j].degree()) + " agree on " +
                                 std::to_string(N - d) + " points";
                        return false;
                    }
                }
            if (min_dist < N - 2 * h) {
                detail = "q=" + std::to_string(p) + ": min distance " + std::to_string(min_dist);
                return false;
            }
        }
        return true;
    });
}

void criterion_4_decoder_completeness() {
    criterion("4. decoder completeness at (q,h)=(7,1), e <= 2", 300.0, [](std::string& detail) {
        Code code = make_code(7, 1, 1);
        const unsigned N = code.params().N;  // 8
        const auto& spec = code.params().spec;
        std::mt19937_64 rng(86028157);

        // the q+1 alphabet letters
        std::vector<ProjectiveValue> letters;
        for (std::uint64_t i = 0; i < 7; ++i)
            letters.push_back(ProjectiveValue::finite(spec->from_index(i)));
        letters.push_back(ProjectiveValue::infinity(spec));

        const auto words = code.enumerate();
        for (unsigned e = 0; e <= 2; ++e) {
            // all position patterns of size e
            std::vector<std::vector<unsigned>> patterns;
            if (e == 0) patterns.push_back({});
            if (e == 1)
                for (unsigned i = 0; i < N; ++i) patterns.push_back({i});
            if (e == 2)
                for (unsigned i = 0; i < N; ++i)
                    for (unsigned j = i + 1; j < N; ++j) patterns.push_back({i, j});

            for (const auto& [m, w] : words) {
                const auto truth = code.function_of(m);
                for (const auto& pattern : patterns) {
                    const int draws = pattern.empty() ? 1 : 3;
                    for (int t = 0; t < draws; ++t) {
                        auto symbols = w.symbols();
                        for (unsigned pos : pattern) {
                            // a uniformly random wrong letter
                            ProjectiveValue wrong = letters[rng() % 8];
                            while (wrong == symbols[pos]) wrong = letters[rng() % 8];
                            symbols[pos] = wrong;
                        }
                        Codeword corrupted(code.params(), symbols);
                        try {
                            if (code.decode(corrupted, e) != truth) {
                                detail = "wrong function for m=" + std::to_string(m) +
                                         " e=" + std::to_string(e);
                                return false;
                            }
                        } catch (const Error& err) {
                            detail = "decode failed for m=" + std::to_string(m) +
                                     " e=" + std::to_string(e) + ": " + err.what();
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });
}

void criterion_5_bijection() {
    criterion("5. iota is a bijection", 60.0, [](std::string& detail) {
        for (auto [p, h] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {5, 1}}) {
            Code code = make_code(p, 1, h);
            for (std::uint64_t m = 0; m < code.size(); ++m)
                if (code.iota(code.function_of(m)) != m) {
                    detail = "q=" + std::to_string(p) + ": iota(encode(" + std::to_string(m) +
                             ")) != m";
                    return false;
                }
            std::set<std::uint64_t> images;
            for (const auto& f : code.brute_force()) images.insert(code.iota(f));
            if (images.size() != code.size()) {
                detail = "q=" + std::to_string(p) + ": iota not injective on C(h)";
                return false;
            }
        }
        return true;
    });
}

void criterion_6_counting_identities() {
    criterion("6. counting identities (convolution, Euler product, closed form, #J)", 60.0,
              [](std::string& detail) {
        const LPolynomial genus0 = LPolynomial::genus0(2);
        const LPolynomial e2(2, 1, {1, 0, 2});   // y^2 + y = x^3 over GF(2)
        const LPolynomial e5(5, 1, {1, 3, 5});   // y^2 = x^3 + x + 1 over GF(5)

        for (const LPolynomial* L : {&genus0, &e2, &e5}) {
            const auto M = mn_from_l(*L, 12);
            const auto A = ah_from_mn(M);
            for (std::size_t n = 0; n <= 12; ++n) {
                BigInt acc = 0;
                for (std::size_t h = 0; h <= n; ++h) acc += M[n - h] * A[h];
                if (acc != M[n] * M[n]) {
                    detail = "convolution identity fails at n=" + std::to_string(n);
                    return false;
                }
            }
            if (euler_product_mn(closed_points(*L, 10), 10) !=
                std::vector<BigInt>(M.begin(), M.begin() + 11)) {
                detail = "Euler-product oracle disagrees with the series route";
                return false;
            }
            const std::size_t nmin = L->genus() >= 1 ? 2 * L->genus() - 1 : 0;
            for (std::size_t n = nmin; n <= 12; ++n)
                if (m_closed_form(*L, n) != M[n]) {
                    detail = "closed form disagrees at n=" + std::to_string(n);
                    return false;
                }
        }

        // Jacobian sizes against brute-force point counts of the fixtures
        const auto n2 = weierstrass_point_count(FieldSpec::make(2, 1), 0, 1, 0, 0, 0);
        if (n2 != 3 || jacobian_size(e2) != BigInt(n2)) {
            detail = "GF(2) fixture: points " + std::to_string(n2);
            return false;
        }
        const auto n5 = weierstrass_point_count(FieldSpec::make(5, 1), 0, 0, 0, 1, 1);
        if (n5 != 9 || jacobian_size(e5) != BigInt(n5)) {
            detail = "GF(5) fixture: points " + std::to_string(n5);
            return false;
        }
        return true;
    });
}

void criterion_7_threshold_bounds() {
    criterion("7. threshold bound properties", 60.0, [](std::string& detail) {
        for (std::uint64_t q : {4ull, 9ull, 49ull}) {
            const double qd = static_cast<double>(q);
            const double thr = 2 * qd / (qd * qd - 1);
            for (int i = 1; i <= 200; ++i) {
                const double rho = 2.0 * i / 200;
                const double B = b_rho(q, rho).value;
                const double bound = std::pow(qd, rho) * (qd + 1) / (qd - 1);
                if (B > bound + 1e-9) {
                    detail = "B(rho) above bound at q=" + std::to_string(q) +
                             " rho=" + std::to_string(rho);
                    return false;
                }
                if (rho >= thr + 0.05 && bound - B < 1e-6) {
                    detail = "no strict margin at q=" + std::to_string(q) +
                             " rho=" + std::to_string(rho);
                    return false;
                }
            }
        }
        for (std::uint64_t q : {4ull, 9ull, 16ull, 25ull, 49ull, 64ull, 81ull, 121ull, 169ull,
                                256ull}) {
            const double qd = static_cast<double>(q);
            if (!(rho1(q) > 2 * qd / (qd * qd - 1))) {
                detail = "rho1 <= 2q/(q^2-1) at q=" + std::to_string(q);
                return false;
            }
        }
        return true;
    });
}

void criterion_8_degradation() {
    criterion("8. degradation expectation (seeded Monte Carlo)", 120.0, [](std::string& detail) {
        for (auto [p, h] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}}) {
            Code code = make_code(p, 1, h);
            const unsigned N = code.params().N;
            const std::uint64_t q = code.params().spec->q();
            const auto words = code.enumerate();

            const BigRat expected_rat = degradation_expectation(q, N, BigInt(code.size()));
            const double expected = static_cast<double>(expected_rat);

            constexpr int kTrials = 10000;
            std::mt19937_64 rng(977 + p);
            std::vector<double> counts;
            counts.reserve(kTrials);
            for (int t = 0; t < kTrials; ++t) {
                std::vector<std::uint64_t> forbidden(N);
                for (auto& f : forbidden) f = rng() % (q + 1);
                int survivors = 0;
                for (const auto& [m, w] : words) {
                    bool ok = true;
                    for (unsigned i = 0; i < N && ok; ++i) {
                        const std::uint64_t sym =
                            w[i].is_infinity() ? q : w[i].value().index();
                        ok = (sym != forbidden[i]);
                    }
                    survivors += ok;
                }
                counts.push_back(survivors);
            }
            double mean = 0;
            for (double c : counts) mean += c;
            mean /= kTrials;
            double var = 0;
            for (double c : counts) var += (c - mean) * (c - mean);
            var /= (kTrials - 1);
            const double se = std::sqrt(var / kTrials);
            if (std::abs(mean - expected) > 4 * se) {
                detail = "q=" + std::to_string(q) + ": mean " + std::to_string(mean) +
                         " vs expected " + std::to_string(expected) + " (4se = " +
                         std::to_string(4 * se) + ")";
                return false;
            }
        }
        return true;
    });
}

}  // namespace

int main() {
    criterion_1_rho1_table();
    criterion_2_code_size();
    criterion_3_distance_bound();
    criterion_4_decoder_completeness();
    criterion_5_bijection();
    criterion_6_counting_identities();
    criterion_7_threshold_bounds();
    criterion_8_degradation();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
