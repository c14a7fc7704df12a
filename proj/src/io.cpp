#include "ratcode/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ratcode {

namespace {

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidArgument(std::string("cannot parse ") + what + ": '" + s + "'");
    return v;
}

}  // namespace

std::string field_to_string(const FieldSpec& spec) {
    return std::to_string(spec.p()) + "^" + std::to_string(spec.alpha()) + "/" +
           std::to_string(spec.modulus_encoding());
}

FieldSpecPtr parse_field(const std::string& text) {
    std::string head = text;
    std::optional<std::uint64_t> mod_enc;
    if (auto slash = head.find('/'); slash != std::string::npos) {
        mod_enc = parse_u64(head.substr(slash + 1), "modulus encoding");
        head = head.substr(0, slash);
    }
    std::uint64_t p;
    unsigned alpha = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = parse_u64(head.substr(0, caret), "field characteristic");
        alpha = static_cast<unsigned>(parse_u64(head.substr(caret + 1), "extension degree"));
    } else {
        p = parse_u64(head, "field characteristic");
    }
    if (!mod_enc) return FieldSpec::make(p, alpha);
    std::vector<std::uint32_t> mod;
    std::uint64_t enc = *mod_enc;
    while (enc) {
        mod.push_back(static_cast<std::uint32_t>(enc % p));
        enc /= p;
    }
    if (mod.size() != alpha + 1)
        throw InvalidArgument("modulus encoding does not have degree alpha");
    return FieldSpec::make(p, alpha, std::move(mod));
}

std::string symbol_to_string(const ProjectiveValue& v) {
    if (v.is_infinity()) return "inf";
    return std::to_string(v.value().index());
}

ProjectiveValue parse_symbol(const std::string& token, const FieldSpecPtr& spec) {
    if (token == "inf") return ProjectiveValue::infinity(spec);
    const std::uint64_t idx = parse_u64(token, "symbol");
    if (idx >= spec->q())
        throw InvalidArgument("symbol index " + token + " out of range for q = " +
                              std::to_string(spec->q()));
    return ProjectiveValue::finite(spec->from_index(idx));
}

std::string codeword_to_string(const Codeword& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += symbol_to_string(w[i]);
    }
    return out;
}

Codeword parse_codeword(const std::string& tokens, const CodeParams& params) {
    std::istringstream in(tokens);
    std::vector<ProjectiveValue> symbols;
    std::string tok;
    while (in >> tok) symbols.push_back(parse_symbol(tok, params.spec));
    if (symbols.size() != params.N)
        throw LengthMismatch("expected " + std::to_string(params.N) + " symbols, got " +
                             std::to_string(symbols.size()));
    return Codeword(params, std::move(symbols));
}

std::string poly_to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const auto c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        const std::uint64_t idx = c.index();
        if (i == 0) {
            out += std::to_string(idx);
        } else {
            if (idx != 1) out += std::to_string(idx);
            out += 'x';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string rf_to_string(const RationalFunction& f) {
    const std::string num = poly_to_string(f.numerator());
    if (f.denominator().degree() == 0) return num;  // denominator is monic, so = 1
    const std::string den = poly_to_string(f.denominator());
    const auto wrap = [](const std::string& s) {
        return s.find('+') != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(num) + "/" + wrap(den);
}

LPolynomial parse_lpoly_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("bad L-polynomial JSON: ") + e.what());
    }
    if (!j.contains("q") || !j.contains("genus") || !j.contains("coeffs"))
        throw InvalidArgument("L-polynomial JSON needs fields q, genus, coeffs");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.get<long long>());
        else if (c.is_string())
            coeffs.emplace_back(BigInt(c.get<std::string>()));
        else
            throw InvalidArgument("L-polynomial coefficients must be integers or strings");
    }
    return LPolynomial(j["q"].get<std::uint64_t>(), j["genus"].get<unsigned>(), std::move(coeffs));
}

LPolynomial load_lpoly_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open L-polynomial file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_lpoly_json(buf.str());
}

std::string format_sig6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string format_fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

}  // namespace ratcode
