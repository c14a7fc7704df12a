#include "ratcode/code.hpp"

#include <algorithm>
#include <random>

namespace ratcode {

// ---- ProjectiveValue ----

ProjectiveValue ProjectiveValue::finite(const FieldElement& v) {
    return ProjectiveValue(v, v.owner()->one());
}

ProjectiveValue ProjectiveValue::infinity(const FieldSpecPtr& spec) {
    return ProjectiveValue(spec->one(), spec->zero());
}

ProjectiveValue ProjectiveValue::ratio(const FieldElement& num, const FieldElement& den) {
    if (!same_field(num.owner(), den.owner()))
        throw MixedFields("homogeneous pair over different fields");
    if (den.is_zero()) {
        if (num.is_zero()) throw InvalidArgument("(0 : 0) is not a projective point");
        return infinity(num.owner());
    }
    return finite(num / den);
}

bool ProjectiveValue::is_infinity() const noexcept { return den_.is_zero(); }

bool ProjectiveValue::operator==(const ProjectiveValue& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::vector<ProjectiveValue> point_list(const FieldSpecPtr& spec) {
    std::vector<ProjectiveValue> pts;
    pts.reserve(spec->q() + 1);
    for (std::uint64_t i = 0; i < spec->q(); ++i)
        pts.push_back(ProjectiveValue::finite(spec->from_index(i)));
    pts.push_back(ProjectiveValue::infinity(spec));
    return pts;
}

// ---- CodeParams ----

CodeParams::CodeParams(FieldSpecPtr spec_, unsigned h_) : spec(std::move(spec_)), h(h_) {
    const std::uint64_t q = spec->q();
    if (q + 1 > 0xffffffffull) throw TooLarge("code length exceeds 2^32");
    N = static_cast<unsigned>(q + 1);
    if (2ull * h >= N)
        throw InvalidArgument("C(h) requires 2h < N = q+1");
    designed_distance = N - 2 * h;
}

// ---- RationalFunction ----

RationalFunction RationalFunction::normalized(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw NotAFunction("denominator is zero");
    Polynomial g = gcd(a, b);
    Polynomial num = a, den = b;
    if (g.degree() > 0) {
        num = Polynomial::divmod(num, g).first;
        den = Polynomial::divmod(den, g).first;
    }
    const FieldElement scale = den.leading().inv();
    return RationalFunction(num * scale, den * scale);
}

RationalFunction RationalFunction::zero(const FieldSpecPtr& spec) {
    return RationalFunction(Polynomial(spec), Polynomial::constant(spec->one()));
}

RationalFunction RationalFunction::constant(const FieldElement& c) {
    return RationalFunction(Polynomial::constant(c), Polynomial::constant(c.owner()->one()));
}

int RationalFunction::degree() const noexcept {
    // deg of the zero numerator is the -1 sentinel; the monic denominator has
    // degree >= 0, so degree(0/1) = 0 as required.
    return std::max(num_.degree(), den_.degree());
}

ProjectiveValue RationalFunction::evaluate(const ProjectiveValue& P) const {
    if (P.is_infinity()) {
        const auto H = static_cast<std::size_t>(degree());
        return ProjectiveValue::ratio(num_.coeff(H), den_.coeff(H));
    }
    return ProjectiveValue::ratio(num_.eval(P.value()), den_.eval(P.value()));
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

namespace {
bool poly_less(const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const auto ai = a.coeff(static_cast<std::size_t>(i)).index();
        const auto bi = b.coeff(static_cast<std::size_t>(i)).index();
        if (ai != bi) return ai < bi;
    }
    return false;
}
}  // namespace

bool RationalFunction::operator<(const RationalFunction& rhs) const {
    if (num_ != rhs.num_) return poly_less(num_, rhs.num_);
    return poly_less(den_, rhs.den_);
}

// ---- Codeword ----

Codeword::Codeword(CodeParams params, std::vector<ProjectiveValue> symbols)
    : params_(std::move(params)), symbols_(std::move(symbols)) {
    if (symbols_.size() != params_.N)
        throw LengthMismatch("codeword length must be N = q+1");
}

unsigned hamming_distance(const Codeword& a, const Codeword& b) {
    if (a.size() != b.size()) throw LengthMismatch("codeword lengths differ");
    unsigned d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

// ---- MessageSpace ----

namespace {
std::uint64_t checked_code_size(const CodeParams& params) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < 2 * params.h + 1; ++i) {
        if (size > (1ull << 62) / params.spec->q()) throw TooLarge("code size exceeds 2^62");
        size *= params.spec->q();
    }
    return size;
}
}  // namespace

MessageSpace::MessageSpace(const CodeParams& params)
    : ext_(params.spec, 2 * params.h + 1), size_(checked_code_size(params)) {}

// ---- Code ----

Code::Code(CodeParams params)
    : params_(std::move(params)),
      points_(point_list(params_.spec)),
      size_(checked_code_size(params_)) {}

const MessageSpace& Code::messages() const {
    std::call_once(messages_once_, [&] { messages_.emplace(params_); });
    return *messages_;
}

Codeword Code::word_of(const RationalFunction& f) const {
    if (f.degree() > static_cast<int>(params_.h))
        throw DegreeTooLarge("function degree exceeds h");
    std::vector<ProjectiveValue> symbols;
    symbols.reserve(points_.size());
    for (const auto& P : points_) symbols.push_back(f.evaluate(P));
    return Codeword(params_, std::move(symbols));
}

std::uint64_t Code::iota(const RationalFunction& f) const {
    if (f.degree() > static_cast<int>(params_.h))
        throw DegreeTooLarge("function degree exceeds h");
    const ExtensionField& E = messages().extension();
    const FieldElement bx = E.eval_at_x0(f.denominator());
    // deg b <= h < 2h+1 = [ext : base], so b cannot vanish at x0
    const FieldElement ax = E.eval_at_x0(f.numerator());
    return element_index(ax * bx.inv());
}

RationalFunction Code::function_of(std::uint64_t m) const {
    if (m >= size_) throw MessageOutOfRange("message exceeds q^(2h+1) - 1");
    const ExtensionField& E = messages().extension();
    const FieldSpecPtr& base = params_.spec;
    const unsigned h = params_.h;
    const unsigned d = 2 * h + 1;

    const FieldElement x1 = E.ext()->from_index(m);

    // a(x0) - x1 b(x0) = 0: d equations over the base field in the 2h+2
    // coefficients of a and b, expanded on the power basis 1, x0, ..., x0^(2h)
    Matrix sys(base, d, 2 * (h + 1));
    FieldElement x0_pow = E.ext()->one();
    for (unsigned j = 0; j <= h; ++j) {
        const auto ca = E.coordinates(x0_pow);
        const auto cb = E.coordinates(x1 * x0_pow);
        for (unsigned r = 0; r < d; ++r) {
            sys.at(r, j) = ca[r];
            sys.at(r, h + 1 + j) = -cb[r];
        }
        x0_pow = x0_pow * E.x0();
    }

    const auto basis = nullspace(sys);
    if (basis.empty()) throw Error("empty solution space in encode");  // dim >= 1 always
    const auto& v = basis.front();
    std::vector<FieldElement> ac(v.begin(), v.begin() + (h + 1));
    std::vector<FieldElement> bc(v.begin() + (h + 1), v.end());
    return RationalFunction::normalized(Polynomial(base, std::move(ac)),
                                        Polynomial(base, std::move(bc)));
}

Codeword Code::encode(std::uint64_t m) const { return word_of(function_of(m)); }

Matrix Code::recognition_system(const Codeword& w, unsigned degree_bound) const {
    if (w.size() != params_.N) throw LengthMismatch("word length must be N = q+1");
    const FieldSpecPtr& base = params_.spec;
    const unsigned k = degree_bound;
    Matrix sys(base, params_.N, 2 * (k + 1));
    for (unsigned i = 0; i < params_.N; ++i) {
        const ProjectiveValue& P = points_[i];
        const ProjectiveValue& wi = w[i];
        if (P.is_infinity()) {
            // a_k = w_i b_k for finite w_i; b_k = 0 for w_i = infinity
            if (wi.is_infinity()) {
                sys.at(i, 2 * k + 1) = base->one();
            } else {
                sys.at(i, k) = base->one();
                sys.at(i, 2 * k + 1) = -wi.value();
            }
        } else if (wi.is_infinity()) {
            // b(P_i) = 0
            FieldElement pw = base->one();
            for (unsigned j = 0; j <= k; ++j) {
                sys.at(i, k + 1 + j) = pw;
                pw = pw * P.value();
            }
        } else {
            // a(P_i) - w_i b(P_i) = 0
            FieldElement pw = base->one();
            for (unsigned j = 0; j <= k; ++j) {
                sys.at(i, j) = pw;
                sys.at(i, k + 1 + j) = -(wi.value() * pw);
                pw = pw * P.value();
            }
        }
    }
    return sys;
}

std::optional<RationalFunction> Code::solve_recognition(const Codeword& w, unsigned bound) const {
    Matrix sys = recognition_system(w, bound);
    const auto basis = nullspace(sys);
    if (basis.empty()) return std::nullopt;
    const auto& v = basis.front();
    std::vector<FieldElement> ac(v.begin(), v.begin() + (bound + 1));
    std::vector<FieldElement> bc(v.begin() + (bound + 1), v.end());
    Polynomial a(params_.spec, std::move(ac));
    Polynomial b(params_.spec, std::move(bc));
    if (b.is_zero()) return std::nullopt;  // spurious ray, not a function
    return RationalFunction::normalized(a, b);
}

std::optional<RationalFunction> Code::recognize(const Codeword& w) const {
    auto f = solve_recognition(w, params_.h);
    if (!f) return std::nullopt;
    if (f->degree() > static_cast<int>(params_.h)) return std::nullopt;
    if (word_of(*f) != w) return std::nullopt;
    return f;
}

RationalFunction Code::decode(const Codeword& w, unsigned e) const {
    if (2ull * (params_.h + e) >= params_.N)
        throw InvalidArgument("decoding requires 2(h+e) < N");
    auto f = solve_recognition(w, params_.h + e);
    if (!f) throw NoSolution("recognition system has only the zero solution");
    if (f->degree() > static_cast<int>(params_.h))
        throw VerificationFailed("candidate degree exceeds h: more than e errors");
    if (hamming_distance(word_of(*f), w) > e)
        throw VerificationFailed("candidate word too far from input: more than e errors");
    return *f;
}

std::vector<std::pair<std::uint64_t, Codeword>> Code::enumerate() const {
    std::vector<std::pair<std::uint64_t, Codeword>> out;
    out.reserve(size_);
    for (std::uint64_t m = 0; m < size_; ++m) out.emplace_back(m, encode(m));
    return out;
}

std::set<RationalFunction> Code::brute_force() const {
    const std::uint64_t q = params_.spec->q();
    const unsigned h = params_.h;
    double pairs = 1.0;
    for (unsigned i = 0; i < 2 * h + 2; ++i) pairs *= static_cast<double>(q);
    if (pairs > 1e7) throw TooLarge("brute force guard: q^(2h+2) > 1e7");

    std::uint64_t num_count = 1;  // all numerators of degree <= h
    for (unsigned i = 0; i <= h; ++i) num_count *= q;

    std::set<RationalFunction> out;
    for (std::uint64_t ai = 0; ai < num_count; ++ai) {
        std::vector<std::uint64_t> aidx(h + 1);
        std::uint64_t v = ai;
        for (unsigned i = 0; i <= h; ++i) {
            aidx[i] = v % q;
            v /= q;
        }
        Polynomial a = Polynomial::from_indices(params_.spec, aidx);
        for (unsigned db = 0; db <= h; ++db) {
            std::uint64_t den_count = 1;  // monic denominators of degree db
            for (unsigned i = 0; i < db; ++i) den_count *= q;
            for (std::uint64_t bi = 0; bi < den_count; ++bi) {
                std::vector<std::uint64_t> bidx(db + 1);
                std::uint64_t u = bi;
                for (unsigned i = 0; i < db; ++i) {
                    bidx[i] = u % q;
                    u /= q;
                }
                bidx[db] = 1;
                Polynomial b = Polynomial::from_indices(params_.spec, bidx);
                if (gcd(a, b).degree() != 0) continue;  // not coprime
                out.insert(RationalFunction(a, b));
            }
        }
    }
    return out;
}

std::vector<std::pair<std::uint64_t, Codeword>> Code::degrade(
    const std::vector<ProjectiveValue>& forbidden) const {
    if (forbidden.size() != params_.N)
        throw LengthMismatch("forbidden letter list must have length N");
    std::vector<std::pair<std::uint64_t, Codeword>> out;
    for (auto& [m, w] : enumerate()) {
        bool ok = true;
        for (unsigned i = 0; i < params_.N && ok; ++i) ok = (w[i] != forbidden[i]);
        if (ok) out.emplace_back(m, std::move(w));
    }
    return out;
}

std::vector<ProjectiveValue> Code::sample_forbidden(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    const std::uint64_t q = params_.spec->q();
    std::vector<ProjectiveValue> out;
    out.reserve(params_.N);
    for (unsigned i = 0; i < params_.N; ++i) {
        // modulo map: bias < 2^-47 for q+1 <= 2^16, irrelevant at our scales
        const std::uint64_t r = rng() % (q + 1);
        out.push_back(r == q ? ProjectiveValue::infinity(params_.spec)
                             : ProjectiveValue::finite(params_.spec->from_index(r)));
    }
    return out;
}

}  // namespace ratcode
