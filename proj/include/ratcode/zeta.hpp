#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "ratcode/errors.hpp"

namespace ratcode {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/**
 * The L-polynomial of a curve of genus g over F_q: integer coefficients
 * c_0..c_2g (low-to-high), c_0 = 1, satisfying the functional equation
 * c_{2g-i} = q^{g-i} c_i. All counting operations take their input from here;
 * the zeta function is L(z) / ((1-z)(1-qz)) with z = q^{-s}.
 */
class LPolynomial {
   public:
    /// Validates c_0 = 1, length 2g+1 and the functional equation; throws InvalidL.
    LPolynomial(std::uint64_t q, unsigned genus, std::vector<BigInt> coeffs);

    static LPolynomial genus0(std::uint64_t q) { return LPolynomial(q, 0, {BigInt(1)}); }

    std::uint64_t q() const noexcept { return q_; }
    unsigned genus() const noexcept { return g_; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }

   private:
    std::uint64_t q_;
    unsigned g_;
    std::vector<BigInt> c_;
};

/// Numeric check that every root of L has modulus q^(-1/2) within tol.
/// Warning-level: user-supplied L-polynomials may be experimental.
bool l_roots_on_critical_circle(const LPolynomial& L, double tol = 1e-9);

/// Effective-divisor counts M_0..M_nmax: coefficients of L(z)/((1-z)(1-qz)).
std::vector<BigInt> mn_from_l(const LPolynomial& L, std::size_t nmax);

/// Closed-point counts B_1..B_dmax (returned with B_d at index d; index 0
/// unused) from Newton power sums and Moebius inversion.
/// Throws NegativePointCount if L is not the L-function of a curve.
std::vector<BigInt> closed_points(const LPolynomial& L, std::size_t dmax);

/// Independent route to M_n: expansion of the Euler product
/// prod_d (1-z^d)^(-B_d). Must agree with mn_from_l.
std::vector<BigInt> euler_product_mn(const std::vector<BigInt>& B, std::size_t nmax);

/// Disjoint-support pair counts A_0..A_n: the series quotient
/// (sum M_n^2 z^n) / (sum M_n z^n). Requires M[0] = 1.
std::vector<BigInt> ah_from_mn(const std::vector<BigInt>& M);

/// #J_C = q^g L(1/q), exact. Throws NonIntegerResult on an invalid L.
BigInt jacobian_size(const LPolynomial& L);

/// The closed form M_n = q/(q-1) L(1/q) (q^n - q^(g-1)), valid for n > 2g-2.
/// Throws OutOfRange otherwise.
BigInt m_closed_form(const LPolynomial& L, std::size_t n);

/// Average code size M(h, C) = 1 + (q-1) (A_0 + ... + A_h) / #J_C, exact.
BigRat avg_code_size(const LPolynomial& L, unsigned h);

/// L evaluated at z = q^(-s).
double l_eval(const LPolynomial& L, double s);

/// Result of a bracketed 1-D minimization or root find.
struct ThresholdResult {
    double value;
    double minimizer_r;
    int iterations;
    double tol;
};

/// B(rho) = min over r in [q^-2, q^-3/2] of r^(-rho/2) (1-r) / ((1-1/q)(1-qr)).
/// Ternary search on log r with endpoint comparison; satisfies
/// B(rho) <= q^rho (q+1)/(q-1), strictly for rho > 2q/(q^2-1).
ThresholdResult b_rho(std::uint64_t q, double rho);

/// B_1(rho) = (q-1)/q q^kappa min over r in (0, q^-1/2] of
/// r^(-rho/2) (1+r) (1+sqrt(qr))^(4 kappa), with kappa = 1/(sqrt(q)-1).
/// Requires q a perfect square >= 4; throws NotASquare.
ThresholdResult b1_rho(std::uint64_t q, double rho);

/// The unique rho_1 > 0 with B_1(rho_1) = q^rho_1 (q+1)/(q-1), by bisection
/// on the given bracket. Throws NotASquare or BracketFailure.
double rho1(std::uint64_t q, double lo = 1e-6, double hi = 16.0);

/// Asymptotic rate/distance comparison constants for alphabet sizes q and q+1.
struct RateBounds {
    std::uint64_t q;
    double q0;                // sqrt(q)
    double goppa_rhs;         // 1 - 1/(q0 - 1)
    double extrapolated_rhs;  // 1 - 1/(sqrt(q+1) - 1)
    double new_lhs_slope;     // log(q+1)/log q
    double new_rhs_gain;      // log((q+1)/q)/log q
    double crossover_1mR;     // the 1-R threshold below which the new bound wins
    double dv_ratio;          // sqrt(q) - 1

    /// (q+1)-ary Gilbert-Varshamov rate 1 - H_{q+1}(delta).
    double gv(double delta) const;
    /// R solved from the new-code bound at error rate delta.
    double new_rate(double delta) const;
};

/// Requires q a perfect-square prime power >= 4; throws NotASquare.
RateBounds rate_bounds(std::uint64_t q);

struct RateRow {
    double delta, goppa, goppa_q1, new_rate, gv;
};
std::vector<RateRow> rate_table(std::uint64_t q, const std::vector<double>& deltas);

/// Expected degraded-code size (q/(q+1))^N * code_size, exact.
BigRat degradation_expectation(std::uint64_t q, unsigned N, const BigInt& code_size);

}  // namespace ratcode
