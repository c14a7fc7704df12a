#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ratcode/errors.hpp"

namespace ratcode {

class FieldSpec;
class FieldElement;
class Polynomial;

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/**
 * A concrete finite field GF(p^alpha) in polynomial-basis representation.
 *
 * Elements are coefficient vectors of length alpha over Z_p, reduced modulo a
 * monic irreducible modulus of degree alpha. If no modulus is supplied, the
 * canonical one is chosen: the monic irreducible of degree alpha over GF(p)
 * with the smallest integer encoding sum(c_i * p^i). Two calls with equal
 * (p, alpha) therefore always produce the same field representation.
 *
 * The element index sum(coeffs[i] * p^i) is a bijection onto [0, q), used for
 * serialization and message numbering.
 *
 * Specs are immutable and shared; all arithmetic is pure. Fields with
 * q > 2^16 are rejected (lookup-free schoolbook arithmetic only).
 */
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
   public:
    /// Builds GF(p^alpha). Throws NotPrime, ReducibleModulus, TooLarge.
    static FieldSpecPtr make(std::uint64_t p, unsigned alpha,
                             std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint64_t p() const noexcept { return p_; }
    unsigned alpha() const noexcept { return alpha_; }
    std::uint64_t q() const noexcept { return q_; }

    /// Modulus coefficients over Z_p, low-to-high, length alpha+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// Integer encoding sum(modulus[i] * p^i) used in the text serialization.
    std::uint64_t modulus_encoding() const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_index(std::uint64_t index) const;  ///< throws IndexOutOfRange
    FieldElement element(std::vector<std::uint32_t> coeffs) const;  ///< reduces mod p

    bool operator==(const FieldSpec& other) const noexcept;

   private:
    FieldSpec(std::uint64_t p, unsigned alpha, std::vector<std::uint32_t> modulus);

    std::uint64_t p_;
    unsigned alpha_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;

    friend class FieldElement;
};

/// True if a and b denote the same field (same p, alpha and modulus).
bool same_field(const FieldSpecPtr& a, const FieldSpecPtr& b) noexcept;

/**
 * An element of a FieldSpec: an immutable coefficient vector over Z_p.
 */
class FieldElement {
   public:
    FieldElement() = default;  // empty element; owner() is null

    const FieldSpecPtr& owner() const noexcept { return spec_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    std::uint64_t index() const noexcept;  ///< sum coeffs[i]*p^i

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;  ///< throws DivisionByZero
    FieldElement operator-() const;
    FieldElement inv() const;  ///< throws DivisionByZero on inv(0)
    FieldElement pow(std::uint64_t e) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

   private:
    FieldElement(FieldSpecPtr spec, std::vector<std::uint32_t> coeffs);

    FieldSpecPtr spec_;
    std::vector<std::uint32_t> coeffs_;

    friend class FieldSpec;
};

/// element_index / index_element: the canonical bijection [0,q) <-> field.
std::uint64_t element_index(const FieldElement& e);
FieldElement index_element(std::uint64_t index, const FieldSpecPtr& spec);

/**
 * Univariate polynomial over a FieldSpec. Coefficients are stored low-to-high
 * with no trailing zeros; the zero polynomial has an empty list and degree
 * sentinel -1, which compares below every degree bound used in this library.
 */
class Polynomial {
   public:
    explicit Polynomial(FieldSpecPtr spec);                            // zero polynomial
    Polynomial(FieldSpecPtr spec, std::vector<FieldElement> coeffs);   // normalizes
    static Polynomial constant(const FieldElement& c);
    static Polynomial from_indices(const FieldSpecPtr& spec, const std::vector<std::uint64_t>& idx);

    const FieldSpecPtr& owner() const noexcept { return spec_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of x^i, zero-padded beyond the degree.
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement leading() const;  ///< throws DivisionByZero-free; requires nonzero

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const FieldElement& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// a = q*b + r with deg r < deg b. Throws DivisionByZero if b = 0.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    FieldElement eval(const FieldElement& x) const;
    Polynomial monic() const;  ///< scales by inverse leading coefficient; zero stays zero
    Polynomial shifted(std::size_t k) const;  ///< multiply by x^k

   private:
    void normalize();

    FieldSpecPtr spec_;
    std::vector<FieldElement> coeffs_;
};

/// Monic greatest common divisor; gcd(0, b) is the monic scalar multiple of b.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
    Polynomial g;  ///< monic gcd
    Polynomial u;  ///< Bezout witnesses: u*a + v*b = g
    Polynomial v;
};
ExtendedGcd gcd_ext(const Polynomial& a, const Polynomial& b);

/// Trial-division irreducibility test over the coefficient field.
bool is_irreducible(const Polynomial& f);

/// The monic irreducible of the given degree over `field` with the smallest
/// integer encoding sum(index(c_i) * q^i). Deterministic.
Polynomial canonical_irreducible(const FieldSpecPtr& field, unsigned degree);

/**
 * GF(q^d) presented as an extension of a base field GF(q).
 *
 * `ext` is the canonical prime-based spec for p^(alpha*d). `embed` is the
 * ring homomorphism base -> ext sending the base generator to the
 * smallest-index root of the base modulus in ext. `x0` is the smallest-index
 * root in ext of the canonical degree-d irreducible over base; its minimal
 * polynomial over base has degree exactly d, so 1, x0, ..., x0^(d-1) is a
 * base-basis of ext. For a prime base this makes x0 the residue class of X.
 */
class ExtensionField {
   public:
    ExtensionField(FieldSpecPtr base, unsigned d);

    const FieldSpecPtr& base() const noexcept { return base_; }
    unsigned d() const noexcept { return d_; }
    const FieldSpecPtr& ext() const noexcept { return ext_; }
    const FieldElement& x0() const noexcept { return x0_; }
    const Polynomial& minimal_polynomial() const noexcept { return min_poly_; }

    FieldElement embed(const FieldElement& b) const;

    /// Coordinates of an ext element on the base-basis 1, x0, ..., x0^(d-1).
    std::vector<FieldElement> coordinates(const FieldElement& e) const;

    /// Evaluation of a base-coefficient polynomial at x0 (coefficients embedded).
    FieldElement eval_at_x0(const Polynomial& f) const;

   private:
    FieldSpecPtr base_;
    unsigned d_;
    FieldSpecPtr ext_;
    FieldElement tau_;  // image of the base generator
    FieldElement x0_;
    Polynomial min_poly_;                      // over base
    std::vector<std::uint32_t> coord_matrix_;  // inverse basis matrix over Z_p, row-major
};

ExtensionField build_extension(const FieldSpecPtr& base, unsigned d);

}  // namespace ratcode
