#pragma once

#include <string>

#include "ratcode/code.hpp"
#include "ratcode/gf.hpp"
#include "ratcode/zeta.hpp"

namespace ratcode {

// Text formats. Field spec: "p^alpha/<modulus-encoding>". Codeword: N
// whitespace-separated tokens, each a base-10 element index or "inf".

std::string field_to_string(const FieldSpec& spec);

/// Accepts "p", "p^alpha" and "p^alpha/<modulus-encoding>".
FieldSpecPtr parse_field(const std::string& text);

std::string symbol_to_string(const ProjectiveValue& v);
ProjectiveValue parse_symbol(const std::string& token, const FieldSpecPtr& spec);

std::string codeword_to_string(const Codeword& w);
Codeword parse_codeword(const std::string& tokens, const CodeParams& params);

/// Polynomial in the variable x, highest degree first, coefficients rendered
/// as element indices; e.g. "x^2+2x+1", "x", "0".
std::string poly_to_string(const Polynomial& f);

/// "a/b" with parentheses around multi-term parts; "a" when b = 1.
std::string rf_to_string(const RationalFunction& f);

LPolynomial parse_lpoly_json(const std::string& json_text);
LPolynomial load_lpoly_file(const std::string& path);

std::string format_sig6(double x);    // 6 significant digits
std::string format_fixed4(double x);  // 4 decimals (thresholds table)

}  // namespace ratcode
