#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ratcode/gf.hpp"
#include "ratcode/linalg.hpp"

namespace ratcode {

/**
 * A point of the projective line P^1(F_q): either a finite field value or the
 * symbol infinity. Stored as a canonicalized homogeneous pair, den = 1 for
 * finite values and (num, den) = (1, 0) for infinity.
 */
class ProjectiveValue {
   public:
    static ProjectiveValue finite(const FieldElement& v);
    static ProjectiveValue infinity(const FieldSpecPtr& spec);
    /// Canonicalizes (num : den). Throws InvalidArgument on (0, 0).
    static ProjectiveValue ratio(const FieldElement& num, const FieldElement& den);

    bool is_infinity() const noexcept;
    /// The finite value; only valid when !is_infinity().
    const FieldElement& value() const noexcept { return num_; }
    const FieldSpecPtr& owner() const noexcept { return num_.owner(); }

    bool operator==(const ProjectiveValue& rhs) const;
    bool operator!=(const ProjectiveValue& rhs) const { return !(*this == rhs); }

   private:
    ProjectiveValue(FieldElement num, FieldElement den)
        : num_(std::move(num)), den_(std::move(den)) {}
    FieldElement num_, den_;
};

/// The q finite points ordered by element index ascending, followed by
/// infinity. Length q+1, deterministic.
std::vector<ProjectiveValue> point_list(const FieldSpecPtr& spec);

/// Parameters of the code C(h) over P^1(F_q): length N = q+1, designed
/// distance N - 2h. Requires 2h < N.
struct CodeParams {
    CodeParams(FieldSpecPtr spec_, unsigned h_);

    FieldSpecPtr spec;
    unsigned h;
    unsigned N;                  // q + 1
    unsigned designed_distance;  // N - 2h
};

/**
 * A rational function a(x)/b(x) in canonical form: gcd(a, b) = 1 and b monic.
 * degree() is max(deg a, deg b) with the zero numerator contributing 0, so
 * the zero function has degree 0 and belongs to every C(h).
 */
class RationalFunction {
   public:
    /// rf_normalize: divides out gcd(a, b) and scales b monic.
    /// Throws NotAFunction if b = 0 (the input represented the constant infinity).
    static RationalFunction normalized(const Polynomial& a, const Polynomial& b);
    static RationalFunction zero(const FieldSpecPtr& spec);
    static RationalFunction constant(const FieldElement& c);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    const FieldSpecPtr& owner() const noexcept { return num_.owner(); }
    int degree() const noexcept;

    /// rf_evaluate, with values in P^1: at a finite P the canonical form of
    /// (a(P) : b(P)); at P = infinity the ratio of the degree()-coefficients.
    ProjectiveValue evaluate(const ProjectiveValue& P) const;

    bool operator==(const RationalFunction& rhs) const;
    bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }
    bool operator<(const RationalFunction& rhs) const;  // for ordered sets

   private:
    RationalFunction(Polynomial num, Polynomial den)
        : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_, den_;

    friend class Code;
};

/// A length-N word over the alphabet P^1(F_q), symbol order matching point_list.
class Codeword {
   public:
    Codeword(CodeParams params, std::vector<ProjectiveValue> symbols);

    const CodeParams& params() const noexcept { return params_; }
    const std::vector<ProjectiveValue>& symbols() const noexcept { return symbols_; }
    const ProjectiveValue& operator[](std::size_t i) const { return symbols_[i]; }
    std::size_t size() const noexcept { return symbols_.size(); }

    bool operator==(const Codeword& rhs) const { return symbols_ == rhs.symbols_; }
    bool operator!=(const Codeword& rhs) const { return !(*this == rhs); }

   private:
    CodeParams params_;
    std::vector<ProjectiveValue> symbols_;
};

/// Number of coordinates where the two words differ. Throws LengthMismatch.
unsigned hamming_distance(const Codeword& a, const Codeword& b);

/**
 * The message space of C(h): the extension field GF(q^(2h+1)) together with
 * the coordinate machinery for the power basis 1, x0, ..., x0^(2h). Messages
 * are integers in [0, q^(2h+1)) identified with ext elements by element_index.
 */
class MessageSpace {
   public:
    explicit MessageSpace(const CodeParams& params);

    const ExtensionField& extension() const noexcept { return ext_; }
    std::uint64_t size() const noexcept { return size_; }

   private:
    ExtensionField ext_;
    std::uint64_t size_;
};

/**
 * The nonlinear code C(h) over P^1(F_q): all rational functions of degree at
 * most h identified with their value vectors at the q+1 rational points.
 *
 * Encoding and decoding are exact linear algebra over the base field; the
 * bijection iota sends f to f(x0) in GF(q^(2h+1)).
 */
class Code {
   public:
    explicit Code(CodeParams params);

    const CodeParams& params() const noexcept { return params_; }
    const std::vector<ProjectiveValue>& points() const noexcept { return points_; }
    std::uint64_t size() const noexcept { return size_; }  // q^(2h+1)

    /// The extension-field machinery, built on first use (thread-safe); only
    /// encode/iota/enumerate need it.
    const MessageSpace& messages() const;

    /// The value vector of f at all points. Requires degree(f) <= h.
    Codeword word_of(const RationalFunction& f) const;

    /// Message m -> codeword, via the subspace-intersection inverse of iota.
    Codeword encode(std::uint64_t m) const;  ///< throws MessageOutOfRange

    /// Message m -> the rational function f with iota(f) = m.
    RationalFunction function_of(std::uint64_t m) const;

    /// iota(f) = index of a(x0)/b(x0) in the extension field.
    std::uint64_t iota(const RationalFunction& f) const;  ///< throws DegreeTooLarge

    /// Error-free recognition: the unique f with word_of(f) = w, if any.
    std::optional<RationalFunction> recognize(const Codeword& w) const;

    /// Unique decoding of up to e errors; requires 2(h+e) < N.
    /// Throws NoSolution or VerificationFailed when w is not within distance e
    /// of the code.
    RationalFunction decode(const Codeword& w, unsigned e) const;

    /// The homogeneous recognition system at the given degree bound:
    /// N rows, 2*bound+2 unknowns (a_0..a_bound, b_0..b_bound).
    Matrix recognition_system(const Codeword& w, unsigned degree_bound) const;

    /// All (message, codeword) pairs, message ascending.
    std::vector<std::pair<std::uint64_t, Codeword>> enumerate() const;

    /// Independent oracle: all coprime pairs (a, b) with deg <= h, b monic.
    /// Guarded by q^(2h+2) <= 10^7; throws TooLarge beyond that.
    std::set<RationalFunction> brute_force() const;

    /// Codewords avoiding the forbidden letter in every coordinate.
    std::vector<std::pair<std::uint64_t, Codeword>> degrade(
        const std::vector<ProjectiveValue>& forbidden) const;

    /// Uniform forbidden letters from a seeded generator, reproducible.
    std::vector<ProjectiveValue> sample_forbidden(std::uint64_t seed) const;

   private:
    std::optional<RationalFunction> solve_recognition(const Codeword& w, unsigned bound) const;

    CodeParams params_;
    std::vector<ProjectiveValue> points_;
    std::uint64_t size_;
    mutable std::once_flag messages_once_;
    mutable std::optional<MessageSpace> messages_;
};

}  // namespace ratcode
