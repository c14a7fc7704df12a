#include "ratcode/zeta.hpp"

#include <cmath>
#include <complex>

namespace ratcode {

// ---- LPolynomial ----

LPolynomial::LPolynomial(std::uint64_t q, unsigned genus, std::vector<BigInt> coeffs)
    : q_(q), g_(genus), c_(std::move(coeffs)) {
    if (q_ < 2) throw InvalidL("q must be at least 2");
    if (c_.size() != 2 * static_cast<std::size_t>(g_) + 1)
        throw InvalidL("L-polynomial must have 2g+1 coefficients");
    if (c_[0] != 1) throw InvalidL("c_0 must be 1");
    // functional equation c_{2g-i} = q^{g-i} c_i for 0 <= i <= g
    BigInt qpow = 1;  // q^(g-i) built downward from q^g
    for (unsigned i = 0; i < g_; ++i) qpow *= q_;
    for (unsigned i = 0; i <= g_; ++i) {
        if (c_[2 * g_ - i] != qpow * c_[i])
            throw InvalidL("functional equation c_{2g-i} = q^{g-i} c_i fails at i = " +
                           std::to_string(i));
        if (i < g_) qpow /= q_;
    }
}

bool l_roots_on_critical_circle(const LPolynomial& L, double tol) {
    const unsigned deg = 2 * L.genus();
    if (deg == 0) return true;
    // Durand-Kerner on the monic reversal; roots of L have modulus q^(-1/2)
    std::vector<std::complex<double>> c(deg + 1);
    for (unsigned i = 0; i <= deg; ++i)
        c[i] = static_cast<double>(L.coeffs()[i]);
    for (unsigned i = 0; i <= deg; ++i) c[i] /= c[deg];
    std::vector<std::complex<double>> z(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> zk(1.0, 0.0);
    for (unsigned i = 0; i < deg; ++i) {
        zk *= seed;
        z[i] = zk;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (unsigned i = deg + 1; i-- > 0;) acc = acc * x + c[i];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (unsigned i = 0; i < deg; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (unsigned j = 0; j < deg; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            shift = std::max(shift, std::abs(step));
        }
        if (shift < 1e-14) break;
    }
    const double target = 1.0 / std::sqrt(static_cast<double>(L.q()));
    for (const auto& root : z)
        if (std::abs(std::abs(root) - target) > tol) return false;
    return true;
}

// ---- exact counting ----

std::vector<BigInt> mn_from_l(const LPolynomial& L, std::size_t nmax) {
    // 1/((1-z)(1-qz)) = sum_n (q^{n+1}-1)/(q-1) z^n
    const BigInt q = L.q();
    std::vector<BigInt> geom(nmax + 1);
    BigInt qpow = q;
    for (std::size_t n = 0; n <= nmax; ++n) {
        geom[n] = (qpow - 1) / (q - 1);
        qpow *= q;
    }
    std::vector<BigInt> M(nmax + 1, 0);
    const auto& c = L.coeffs();
    for (std::size_t n = 0; n <= nmax; ++n)
        for (std::size_t i = 0; i < c.size() && i <= n; ++i) M[n] += c[i] * geom[n - i];
    return M;
}

std::vector<BigInt> closed_points(const LPolynomial& L, std::size_t dmax) {
    const unsigned deg = 2 * L.genus();
    // e_k = (-1)^k c_k; Newton's identities give the power sums of the
    // Frobenius eigenvalues, then N_m = q^m + 1 - p_m
    std::vector<BigInt> e(deg + 1);
    for (unsigned k = 0; k <= deg; ++k) e[k] = (k % 2 == 0) ? L.coeffs()[k] : -L.coeffs()[k];
    std::vector<BigInt> psum(dmax + 1, 0);  // psum[m] = p_m, m >= 1
    for (std::size_t m = 1; m <= dmax; ++m) {
        BigInt pm = 0;
        for (std::size_t i = 1; i < m && i <= deg; ++i) {
            BigInt term = e[i] * psum[m - i];
            pm += (i % 2 == 1) ? term : -term;
        }
        if (m <= deg) {
            BigInt term = BigInt(m) * e[m];
            pm += (m % 2 == 1) ? term : -term;
        }
        psum[m] = pm;
    }
    std::vector<BigInt> Nm(dmax + 1, 0);
    BigInt qpow = 1;
    for (std::size_t m = 1; m <= dmax; ++m) {
        qpow *= L.q();
        Nm[m] = qpow + 1 - psum[m];
        if (Nm[m] < 0)
            throw NegativePointCount("N_" + std::to_string(m) + " < 0: not a curve L-function");
    }
    // Moebius inversion: B_d = (1/d) sum_{e | d} mu(d/e) N_e
    auto moebius = [](std::size_t n) -> int {
        int mu = 1;
        for (std::size_t f = 2; f * f <= n; ++f) {
            if (n % f == 0) {
                n /= f;
                if (n % f == 0) return 0;
                mu = -mu;
            }
        }
        if (n > 1) mu = -mu;
        return mu;
    };
    std::vector<BigInt> B(dmax + 1, 0);
    for (std::size_t d = 1; d <= dmax; ++d) {
        BigInt acc = 0;
        for (std::size_t dd = 1; dd <= d; ++dd) {
            if (d % dd != 0) continue;
            acc += moebius(d / dd) * Nm[dd];
        }
        if (acc % d != 0 || acc < 0)
            throw NegativePointCount("B_" + std::to_string(d) +
                                     " is not a nonnegative integer: not a curve L-function");
        B[d] = acc / d;
    }
    return B;
}

std::vector<BigInt> euler_product_mn(const std::vector<BigInt>& B, std::size_t nmax) {
    // expand prod_d (1 - z^d)^(-B_d) via (1-z^d)^(-B) = sum_k binom(B+k-1, k) z^(dk)
    std::vector<BigInt> M(nmax + 1, 0);
    M[0] = 1;
    for (std::size_t d = 1; d < B.size() && d <= nmax; ++d) {
        if (B[d] == 0) continue;
        std::vector<BigInt> factor(nmax + 1, 0);
        factor[0] = 1;
        BigInt binom = 1;
        for (std::size_t k = 1; d * k <= nmax; ++k) {
            binom = binom * (B[d] + BigInt(k) - 1) / BigInt(k);  // exact: consecutive binomials
            factor[d * k] = binom;
        }
        std::vector<BigInt> next(nmax + 1, 0);
        for (std::size_t i = 0; i <= nmax; ++i) {
            if (M[i] == 0) continue;
            for (std::size_t j = 0; i + j <= nmax; j += d) next[i + j] += M[i] * factor[j];
        }
        M = std::move(next);
    }
    return M;
}

std::vector<BigInt> ah_from_mn(const std::vector<BigInt>& M) {
    if (M.empty() || M[0] != 1) throw InvalidArgument("M_0 must be 1");
    const std::size_t n = M.size();
    std::vector<BigInt> A(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        BigInt acc = M[k] * M[k];
        for (std::size_t h = 0; h < k; ++h) acc -= M[k - h] * A[h];
        A[k] = acc;  // M_0 = 1 divisor
    }
    // re-assert the convolution identity the construction encodes
    for (std::size_t k = 0; k < n; ++k) {
        BigInt acc = 0;
        for (std::size_t h = 0; h <= k; ++h) acc += M[k - h] * A[h];
        if (acc != M[k] * M[k]) throw Error("convolution identity violated");
    }
    return A;
}

namespace {

BigRat l_at_inverse_q(const LPolynomial& L) {
    // L(1/q) as an exact rational
    BigRat z(1, L.q());
    BigRat acc = 0, zpow = 1;
    for (const auto& c : L.coeffs()) {
        acc += BigRat(c) * zpow;
        zpow *= z;
    }
    return acc;
}

BigInt rat_to_int(const BigRat& r, const char* what) {
    if (denominator(r) != 1) throw NonIntegerResult(std::string(what) + " is not an integer");
    return numerator(r);
}

}  // namespace

BigInt jacobian_size(const LPolynomial& L) {
    BigRat qg = 1;
    for (unsigned i = 0; i < L.genus(); ++i) qg *= L.q();
    BigInt J = rat_to_int(qg * l_at_inverse_q(L), "q^g L(1/q)");
    if (J <= 0) throw NonIntegerResult("Jacobian size is not positive");
    return J;
}

BigInt m_closed_form(const LPolynomial& L, std::size_t n) {
    const int g = static_cast<int>(L.genus());
    if (static_cast<int>(n) <= 2 * g - 2)
        throw OutOfRange("closed form requires n > 2g-2");
    BigRat qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= L.q();
    BigRat qg1 = 1;  // q^{g-1}
    if (g >= 1)
        for (int i = 0; i < g - 1; ++i) qg1 *= L.q();
    else
        qg1 = BigRat(1, L.q());
    BigRat value = BigRat(L.q(), L.q() - 1) * l_at_inverse_q(L) * (qn - qg1);
    return rat_to_int(value, "closed-form M_n");
}

BigRat avg_code_size(const LPolynomial& L, unsigned h) {
    const auto M = mn_from_l(L, h);
    const auto A = ah_from_mn(M);
    BigInt sum = 0;
    for (const auto& a : A) sum += a;
    return 1 + BigRat(BigInt(L.q() - 1) * sum, jacobian_size(L));
}

double l_eval(const LPolynomial& L, double s) {
    const double z = std::pow(static_cast<double>(L.q()), -s);
    double acc = 0.0, zpow = 1.0;
    for (const auto& c : L.coeffs()) {
        acc += static_cast<double>(c) * zpow;
        zpow *= z;
    }
    return acc;
}

// ---- numeric thresholds ----

namespace {

constexpr int kMinIterations = 200;
constexpr double kMinTol = 1e-10;

// ternary search on log r with endpoint comparison and a grid pre-scan
// guard asserting the result is a global minimum of the (unimodal) objective
template <typename F>
ThresholdResult minimize_log_bracket(F&& f, double lo, double hi) {
    double a = std::log(lo), b = std::log(hi);
    for (int i = 0; i < kMinIterations; ++i) {
        const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
        if (f(std::exp(m1)) <= f(std::exp(m2)))
            b = m2;
        else
            a = m1;
    }
    double best_r = std::exp((a + b) / 2);
    double best = f(best_r);
    for (double r : {lo, hi}) {
        const double v = f(r);
        if (v < best) {
            best = v;
            best_r = r;
        }
    }
    constexpr int kGrid = 1000;
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i <= kGrid; ++i) {
        const double v = f(std::exp(la + (lb - la) * i / kGrid));
        if (v < best * (1 - 1e-6))
            throw Error("minimizer grid check failed: objective not unimodal on bracket");
    }
    return {best, best_r, kMinIterations, kMinTol};
}

std::uint64_t integer_sqrt_of_square(std::uint64_t q) {
    const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    if (q < 4 || r * r != q) throw NotASquare("q = " + std::to_string(q) + " is not a square >= 4");
    return r;
}

}  // namespace

ThresholdResult b_rho(std::uint64_t q, double rho) {
    if (q < 2 || rho <= 0) throw InvalidArgument("b_rho requires q >= 2 and rho > 0");
    const double qd = static_cast<double>(q);
    auto objective = [qd, rho](double r) {
        return std::pow(r, -rho / 2) * (1 - r) / ((1 - 1 / qd) * (1 - qd * r));
    };
    return minimize_log_bracket(objective, std::pow(qd, -2.0), std::pow(qd, -1.5));
}

ThresholdResult b1_rho(std::uint64_t q, double rho) {
    integer_sqrt_of_square(q);
    if (rho <= 0) throw InvalidArgument("b1_rho requires rho > 0");
    const double qd = static_cast<double>(q);
    const double kappa = 1.0 / (std::sqrt(qd) - 1.0);
    auto objective = [qd, kappa, rho](double r) {
        return std::pow(r, -rho / 2) * (1 + r) * std::pow(1 + std::sqrt(qd * r), 4 * kappa);
    };
    // objective diverges as r -> 0+, so the lower bracket end is numerical only
    ThresholdResult res = minimize_log_bracket(objective, 1e-12, std::pow(qd, -0.5));
    res.value *= (qd - 1) / qd * std::pow(qd, kappa);
    return res;
}

double rho1(std::uint64_t q, double lo, double hi) {
    integer_sqrt_of_square(q);
    const double qd = static_cast<double>(q);
    auto excess = [&](double rho) {
        return std::log(b1_rho(q, rho).value) -
               (rho * std::log(qd) + std::log((qd + 1) / (qd - 1)));
    };
    if (!(excess(lo) > 0 && excess(hi) < 0))
        throw BracketFailure("no sign change of log B1 - log(q^rho (q+1)/(q-1)) on bracket");
    for (int i = 0; i < 100; ++i) {
        const double mid = (lo + hi) / 2;
        if (excess(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    const double root = (lo + hi) / 2;
    if (!(root > 2 * qd / (qd * qd - 1)))
        throw Error("rho1 fell below the average-size threshold 2q/(q^2-1)");
    return root;
}

// ---- rate comparisons ----

double RateBounds::gv(double delta) const {
    const double Q = static_cast<double>(q) + 1;
    if (delta <= 0) return 1.0;
    if (delta >= 1) return 0.0;
    const double hq = delta * std::log(Q - 1) / std::log(Q) -
                      delta * std::log(delta) / std::log(Q) -
                      (1 - delta) * std::log(1 - delta) / std::log(Q);
    return 1.0 - hq;
}

double RateBounds::new_rate(double delta) const {
    return (goppa_rhs + new_rhs_gain - delta) / new_lhs_slope;
}

RateBounds rate_bounds(std::uint64_t q) {
    const double q0 = static_cast<double>(integer_sqrt_of_square(q));
    const double qd = static_cast<double>(q);
    RateBounds rb;
    rb.q = q;
    rb.q0 = q0;
    rb.goppa_rhs = 1 - 1 / (q0 - 1);
    rb.extrapolated_rhs = 1 - 1 / (std::sqrt(qd + 1) - 1);
    rb.new_lhs_slope = std::log(qd + 1) / std::log(qd);
    rb.new_rhs_gain = std::log((qd + 1) / qd) / std::log(qd);
    rb.crossover_1mR =
        (1 / (std::sqrt(qd) - 1) - 1 / (std::sqrt(qd + 1) - 1)) / rb.new_rhs_gain;
    rb.dv_ratio = std::sqrt(qd) - 1;
    return rb;
}

std::vector<RateRow> rate_table(std::uint64_t q, const std::vector<double>& deltas) {
    const RateBounds rb = rate_bounds(q);
    std::vector<RateRow> rows;
    rows.reserve(deltas.size());
    for (double d : deltas)
        rows.push_back({d, rb.goppa_rhs, rb.extrapolated_rhs, rb.new_rate(d), rb.gv(d)});
    return rows;
}

BigRat degradation_expectation(std::uint64_t q, unsigned N, const BigInt& code_size) {
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < N; ++i) {
        num *= q;
        den *= q + 1;
    }
    return BigRat(num * code_size, den);
}

}  // namespace ratcode
