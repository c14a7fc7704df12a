#include "ratcode/gf.hpp"

#include <algorithm>
#include <cstdint>

#include "ratcode/linalg.hpp"

namespace ratcode {

namespace {

// ---- raw arithmetic over Z_p (coefficient vectors, low-to-high) ----

using Raw = std::vector<std::uint32_t>;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a != 0 mod p
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
    while (newr != 0) {
        std::int64_t quot = r / newr;
        std::swap(t -= quot * newt, newt);
        std::swap(r -= quot * newr, newr);
    }
    if (r != 1) throw DivisionByZero("no inverse modulo p");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void raw_trim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw raw_mul(const Raw& a, const Raw& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    Raw out(acc.begin(), acc.end());
    raw_trim(out);
    return out;
}

// remainder of a modulo the monic polynomial m
Raw raw_mod(Raw a, const Raw& m, std::uint64_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint64_t c = a.back();
        a.pop_back();
        if (c == 0) continue;
        const std::size_t shift = a.size() - dm;
        for (std::size_t k = 0; k < dm; ++k) {
            std::uint64_t sub = c * m[k] % p;
            std::uint64_t cur = a[shift + k];
            a[shift + k] = static_cast<std::uint32_t>((cur + p - sub) % p);
        }
    }
    raw_trim(a);
    return a;
}

// quotient and remainder of a by nonzero b
std::pair<Raw, Raw> raw_divmod(Raw a, const Raw& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {Raw{}, std::move(a)};
    const std::uint64_t lead_inv = mod_inverse(b.back(), p);
    Raw q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::uint64_t c = a[i] * lead_inv % p;
        if (c == 0) continue;
        q[i - db] = static_cast<std::uint32_t>(c);
        for (std::size_t k = 0; k <= db; ++k) {
            std::uint64_t sub = c * b[k] % p;
            a[i - db + k] = static_cast<std::uint32_t>((a[i - db + k] + p - sub) % p);
        }
    }
    raw_trim(a);
    raw_trim(q);
    return {std::move(q), std::move(a)};
}

Raw raw_sub(const Raw& a, const Raw& b, std::uint64_t p) {
    Raw out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        out[i] = static_cast<std::uint32_t>((x + p - y) % p);
    }
    raw_trim(out);
    return out;
}

// inverse of a modulo the monic irreducible m (extended Euclid in Z_p[X])
Raw raw_inv_mod(const Raw& a, const Raw& m, std::uint64_t p) {
    Raw r0 = m, r1 = a;
    Raw t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r] = raw_divmod(r0, r1, p);
        Raw tnew = raw_sub(t0, raw_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(tnew);
    }
    if (r0.size() != 1) throw DivisionByZero("element not invertible");
    std::uint64_t scale = mod_inverse(r0[0], p);
    for (auto& c : t0) c = static_cast<std::uint32_t>(c * scale % p);
    raw_trim(t0);
    return raw_mod(std::move(t0), m, p);
}

}  // namespace

// ---- FieldSpec ----

FieldSpec::FieldSpec(std::uint64_t p, unsigned alpha, std::vector<std::uint32_t> modulus)
    : p_(p), alpha_(alpha), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < alpha_; ++i) q_ *= p_;
}

FieldSpecPtr FieldSpec::make(std::uint64_t p, unsigned alpha,
                             std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime_u64(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < alpha; ++i) {
        q *= p;
        if (q > (1u << 16)) throw TooLarge("fields with q > 2^16 are unsupported");
    }

    std::vector<std::uint32_t> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != alpha + 1) throw InvalidArgument("modulus degree must equal alpha");
        for (auto& c : mod) c = static_cast<std::uint32_t>(c % p);
        if (mod.back() != 1) throw InvalidArgument("modulus must be monic");
        if (alpha >= 2) {
            // trial division over the prime field
            auto prime = FieldSpecPtr(new FieldSpec(p, 1, {0, 1}));
            std::vector<FieldElement> coeffs;
            for (auto c : mod) coeffs.push_back(prime->from_index(c));
            if (!is_irreducible(Polynomial(prime, std::move(coeffs))))
                throw ReducibleModulus("supplied modulus factors over GF(p)");
        }
    } else if (alpha == 1) {
        mod = {0, 1};  // X
    } else {
        auto prime = FieldSpecPtr(new FieldSpec(p, 1, {0, 1}));
        Polynomial f = canonical_irreducible(prime, alpha);
        for (const auto& c : f.coeffs()) mod.push_back(static_cast<std::uint32_t>(c.index()));
    }
    return FieldSpecPtr(new FieldSpec(p, alpha, std::move(mod)));
}

std::uint64_t FieldSpec::modulus_encoding() const noexcept {
    std::uint64_t enc = 0, pw = 1;
    for (auto c : modulus_) {
        enc += c * pw;
        pw *= p_;
    }
    return enc;
}

bool FieldSpec::operator==(const FieldSpec& other) const noexcept {
    return p_ == other.p_ && alpha_ == other.alpha_ && modulus_ == other.modulus_;
}

bool same_field(const FieldSpecPtr& a, const FieldSpecPtr& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

FieldElement FieldSpec::zero() const {
    return FieldElement(shared_from_this(), std::vector<std::uint32_t>(alpha_, 0));
}

FieldElement FieldSpec::one() const {
    std::vector<std::uint32_t> c(alpha_, 0);
    c[0] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::from_index(std::uint64_t index) const {
    if (index >= q_) throw IndexOutOfRange("element index " + std::to_string(index) +
                                           " out of range for q = " + std::to_string(q_));
    std::vector<std::uint32_t> c(alpha_, 0);
    for (unsigned i = 0; i < alpha_; ++i) {
        c[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldSpec::element(std::vector<std::uint32_t> coeffs) const {
    coeffs.resize(alpha_, 0);
    for (auto& c : coeffs) c = static_cast<std::uint32_t>(c % p_);
    return FieldElement(shared_from_this(), std::move(coeffs));
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<std::uint32_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {}

bool FieldElement::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

std::uint64_t FieldElement::index() const noexcept {
    std::uint64_t idx = 0, pw = 1;
    for (auto c : coeffs_) {
        idx += c * pw;
        pw *= spec_->p();
    }
    return idx;
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.owner(), b.owner()))
        throw MixedFields("operands belong to different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same(*this, rhs);
    const std::uint64_t p = spec_->p();
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(coeffs_[i]) + rhs.coeffs_[i]) % p);
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same(*this, rhs);
    const std::uint64_t p = spec_->p();
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>((coeffs_[i] + p - rhs.coeffs_[i]) % p);
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    const std::uint64_t p = spec_->p();
    std::vector<std::uint32_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<std::uint32_t>((p - coeffs_[i]) % p);
    return FieldElement(spec_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same(*this, rhs);
    const std::uint64_t p = spec_->p();
    if (spec_->alpha() == 1) {
        std::uint64_t v = static_cast<std::uint64_t>(coeffs_[0]) * rhs.coeffs_[0] % p;
        return FieldElement(spec_, {static_cast<std::uint32_t>(v)});
    }
    Raw prod = raw_mul(coeffs_, rhs.coeffs_, p);
    prod = raw_mod(std::move(prod), spec_->modulus(), p);
    prod.resize(spec_->alpha(), 0);
    return FieldElement(spec_, std::move(prod));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero("inv(0)");
    const std::uint64_t p = spec_->p();
    if (spec_->alpha() == 1)
        return FieldElement(spec_, {static_cast<std::uint32_t>(mod_inverse(coeffs_[0], p))});
    Raw a = coeffs_;
    raw_trim(a);
    Raw r = raw_inv_mod(a, spec_->modulus(), p);
    r.resize(spec_->alpha(), 0);
    return FieldElement(spec_, std::move(r));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same(*this, rhs);
    return *this * rhs.inv();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement base = *this;
    FieldElement acc = spec_->one();
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    if (!same_field(spec_, rhs.spec_)) return false;
    return coeffs_ == rhs.coeffs_;
}

std::uint64_t element_index(const FieldElement& e) { return e.index(); }

FieldElement index_element(std::uint64_t index, const FieldSpecPtr& spec) {
    return spec->from_index(index);
}

// ---- Polynomial ----

Polynomial::Polynomial(FieldSpecPtr spec) : spec_(std::move(spec)) {}

Polynomial::Polynomial(FieldSpecPtr spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!same_field(c.owner(), spec_)) throw MixedFields("coefficient from a different field");
    normalize();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.owner(), {c});
}

Polynomial Polynomial::from_indices(const FieldSpecPtr& spec, const std::vector<std::uint64_t>& idx) {
    std::vector<FieldElement> c;
    c.reserve(idx.size());
    for (auto i : idx) c.push_back(spec->from_index(i));
    return Polynomial(spec, std::move(c));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : spec_->zero();
}

FieldElement Polynomial::leading() const {
    if (coeffs_.empty()) return spec_->zero();
    return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (!same_field(spec_, rhs.spec_)) throw MixedFields("polynomials over different fields");
    std::vector<FieldElement> c;
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) + rhs.coeff(i));
    return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    if (!same_field(spec_, rhs.spec_)) throw MixedFields("polynomials over different fields");
    std::vector<FieldElement> c;
    const std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) - rhs.coeff(i));
    return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(-x);
    return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (!same_field(spec_, rhs.spec_)) throw MixedFields("polynomials over different fields");
    if (is_zero() || rhs.is_zero()) return Polynomial(spec_);
    std::vector<FieldElement> c(coeffs_.size() + rhs.coeffs_.size() - 1, spec_->zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(spec_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) c.push_back(x * s);
    return Polynomial(spec_, std::move(c));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    if (!same_field(spec_, rhs.spec_)) return false;
    if (coeffs_.size() != rhs.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (!same_field(a.spec_, b.spec_)) throw MixedFields("polynomials over different fields");
    const auto& spec = a.spec_;
    std::vector<FieldElement> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(spec), a};
    std::vector<FieldElement> quot(a.degree() - db + 1, spec->zero());
    const FieldElement lead_inv = b.leading().inv();
    for (int i = a.degree(); i >= db; --i) {
        FieldElement c = rem[i] * lead_inv;
        if (c.is_zero()) continue;
        quot[i - db] = c;
        for (int k = 0; k <= db; ++k) rem[i - db + k] = rem[i - db + k] - c * b.coeffs_[k];
    }
    return {Polynomial(spec, std::move(quot)), Polynomial(spec, std::move(rem))};
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    FieldElement acc = spec_->zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

Polynomial Polynomial::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<FieldElement> c(k, spec_->zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(spec_, std::move(c));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divmod(r0, r1);
        (void)q;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

ExtendedGcd gcd_ext(const Polynomial& a, const Polynomial& b) {
    const auto& spec = a.owner();
    Polynomial r0 = a, r1 = b;
    Polynomial u0 = Polynomial::constant(spec->one()), u1(spec);
    Polynomial v0(spec), v1 = Polynomial::constant(spec->one());
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divmod(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    FieldElement scale = r0.leading().inv();
    return {r0 * scale, u0 * scale, v0 * scale};
}

bool is_irreducible(const Polynomial& f) {
    const int deg = f.degree();
    if (deg < 1) return false;
    const auto& spec = f.owner();
    const std::uint64_t q = spec->q();
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic divisor candidates of degree d, by coefficient odometer
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            std::vector<FieldElement> c;
            c.reserve(d + 1);
            std::uint64_t e = enc;
            for (int i = 0; i < d; ++i) {
                c.push_back(spec->from_index(e % q));
                e /= q;
            }
            c.push_back(spec->one());
            Polynomial m(spec, std::move(c));
            if (Polynomial::divmod(f, m).second.is_zero()) return false;
        }
    }
    return true;
}

Polynomial canonical_irreducible(const FieldSpecPtr& field, unsigned degree) {
    if (degree < 1) throw InvalidArgument("degree must be >= 1");
    const std::uint64_t q = field->q();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= q;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::vector<FieldElement> c;
        c.reserve(degree + 1);
        std::uint64_t e = enc;
        for (unsigned i = 0; i < degree; ++i) {
            c.push_back(field->from_index(e % q));
            e /= q;
        }
        c.push_back(field->one());
        Polynomial f(field, std::move(c));
        if (is_irreducible(f)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable: one always exists
}

// ---- ExtensionField ----

namespace {

// smallest-index root in `ext` of a polynomial given by its ext coefficients
FieldElement smallest_root(const FieldSpecPtr& ext, const std::vector<FieldElement>& coeffs) {
    for (std::uint64_t i = 0; i < ext->q(); ++i) {
        FieldElement x = ext->from_index(i);
        FieldElement acc = ext->zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        if (acc.is_zero()) return x;
    }
    throw Error("polynomial has no root in the extension field");
}

// a prime-subfield constant c in [0, p) as an element of `field`
FieldElement lift_constant(const FieldSpecPtr& field, std::uint32_t c) {
    std::vector<std::uint32_t> v(field->alpha(), 0);
    v[0] = c;
    return field->element(std::move(v));
}

}  // namespace

namespace {
unsigned validated_degree(unsigned d) {
    if (d < 1) throw InvalidArgument("extension degree must be >= 1");
    return d;
}
}  // namespace

ExtensionField::ExtensionField(FieldSpecPtr base, unsigned d)
    : base_(std::move(base)),
      d_(validated_degree(d)),
      ext_(FieldSpec::make(base_->p(), base_->alpha() * d)),
      tau_(ext_->zero()),
      x0_(ext_->zero()),
      min_poly_(base_) {
    // image of the base generator: smallest-index root of the base modulus
    std::vector<FieldElement> base_mod;
    for (auto c : base_->modulus()) base_mod.push_back(lift_constant(ext_, c));
    tau_ = smallest_root(ext_, base_mod);

    min_poly_ = canonical_irreducible(base_, d);
    std::vector<FieldElement> embedded;
    for (const auto& c : min_poly_.coeffs()) embedded.push_back(embed(c));
    x0_ = smallest_root(ext_, embedded);

    // invert the Z_p basis matrix of embed(t^i) * x0^j to get coordinates
    const unsigned alpha = base_->alpha();
    const unsigned n = alpha * d_;
    auto prime = FieldSpec::make(base_->p(), 1);
    Matrix basis(prime, n, n);
    FieldElement x0_pow = ext_->one();
    for (unsigned j = 0; j < d_; ++j) {
        FieldElement t_pow = ext_->one();
        for (unsigned i = 0; i < alpha; ++i) {
            FieldElement cell = t_pow * x0_pow;
            for (unsigned r = 0; r < n; ++r)
                basis.at(r, static_cast<std::size_t>(j) * alpha + i) =
                    prime->from_index(cell.coeffs()[r]);
            t_pow = t_pow * tau_;
        }
        x0_pow = x0_pow * x0_;
    }
    auto inv = inverse(basis);
    if (!inv) throw Error("extension basis is singular");  // unreachable by construction
    coord_matrix_.assign(n * static_cast<std::size_t>(n), 0);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c)
            coord_matrix_[r * static_cast<std::size_t>(n) + c] =
                static_cast<std::uint32_t>(inv->at(r, c).index());
}

FieldElement ExtensionField::embed(const FieldElement& b) const {
    if (!same_field(b.owner(), base_)) throw MixedFields("embed expects a base-field element");
    FieldElement acc = ext_->zero();
    FieldElement pow = ext_->one();
    for (auto c : b.coeffs()) {
        acc = acc + lift_constant(ext_, c) * pow;
        pow = pow * tau_;
    }
    return acc;
}

std::vector<FieldElement> ExtensionField::coordinates(const FieldElement& e) const {
    if (!same_field(e.owner(), ext_)) throw MixedFields("coordinates expects an ext element");
    const unsigned alpha = base_->alpha();
    const unsigned n = alpha * d_;
    const std::uint64_t p = base_->p();
    std::vector<std::uint32_t> y(n, 0);
    for (unsigned r = 0; r < n; ++r) {
        std::uint64_t acc = 0;
        for (unsigned c = 0; c < n; ++c)
            acc += static_cast<std::uint64_t>(coord_matrix_[r * static_cast<std::size_t>(n) + c]) *
                   e.coeffs()[c];
        y[r] = static_cast<std::uint32_t>(acc % p);
    }
    std::vector<FieldElement> out;
    out.reserve(d_);
    for (unsigned j = 0; j < d_; ++j) {
        std::vector<std::uint32_t> digits(y.begin() + static_cast<std::ptrdiff_t>(j) * alpha,
                                          y.begin() + static_cast<std::ptrdiff_t>(j + 1) * alpha);
        out.push_back(base_->element(std::move(digits)));
    }
    return out;
}

FieldElement ExtensionField::eval_at_x0(const Polynomial& f) const {
    if (!same_field(f.owner(), base_)) throw MixedFields("eval_at_x0 expects a base polynomial");
    FieldElement acc = ext_->zero();
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * x0_ + embed(*it);
    return acc;
}

ExtensionField build_extension(const FieldSpecPtr& base, unsigned d) {
    return ExtensionField(base, d);
}

}  // namespace ratcode
