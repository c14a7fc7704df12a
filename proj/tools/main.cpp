// ratcode: encoder, decoder and verifier for the nonlinear rational-function
// codes C(h) over P^1(F_q), plus the zeta-counting and threshold machinery
// that establishes their parameters.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ratcode/code.hpp"
#include "ratcode/gf.hpp"
#include "ratcode/io.hpp"
#include "ratcode/zeta.hpp"

namespace {

using namespace ratcode;

constexpr std::uint64_t kTableQ[] = {4, 9, 16, 25, 49, 64, 81, 121, 169, 256};

std::string read_word_argument(const std::string& value) {
    if (value == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    if (value.find(' ') != std::string::npos) return value;  // inline tokens
    std::ifstream in(value);
    if (!in) throw InvalidArgument("--word: not a token list and cannot open file '" + value + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<double> parse_delta_grid(const std::string& text) {
    double a = 0, b = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0)
        throw InvalidArgument("--delta-grid expects a:b:step with step > 0");
    std::vector<double> grid;
    for (int k = 0;; ++k) {
        const double v = a + k * step;
        if (v > b + 1e-9) break;
        grid.push_back(v);
    }
    if (grid.empty()) throw InvalidArgument("--delta-grid is empty");
    return grid;
}

void emit_table(const std::string& out_format, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (out_format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
            arr.push_back(obj);
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < header.size(); ++i)
        std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
}

int run_encode(const std::string& q, unsigned h, std::uint64_t m) {
    Code code(CodeParams(parse_field(q), h));
    std::cout << codeword_to_string(code.encode(m)) << "\n";
    return 0;
}

int run_decode(const std::string& q, unsigned h, unsigned e, const std::string& word) {
    Code code(CodeParams(parse_field(q), h));
    Codeword w = parse_codeword(read_word_argument(word), code.params());
    RationalFunction f = code.decode(w, e);
    std::cout << "f = " << rf_to_string(f) << "\n";
    std::cout << "m = " << code.iota(f) << "\n";
    return 0;
}

int run_recognize(const std::string& q, unsigned h, const std::string& word) {
    Code code(CodeParams(parse_field(q), h));
    Codeword w = parse_codeword(read_word_argument(word), code.params());
    auto f = code.recognize(w);
    if (!f) {
        std::cerr << "error: not a codeword of C(" << h << ")\n";
        return 1;
    }
    std::cout << "f = " << rf_to_string(*f) << "\n";
    std::cout << "m = " << code.iota(*f) << "\n";
    return 0;
}

int run_enumerate(const std::string& q, unsigned h) {
    Code code(CodeParams(parse_field(q), h));
    for (const auto& [m, w] : code.enumerate())
        std::cout << m << " " << codeword_to_string(w) << "\n";
    return 0;
}

int run_verify(const std::string& q, unsigned h) {
    Code code(CodeParams(parse_field(q), h));
    const auto& params = code.params();
    std::cout << "code q=" << params.spec->p() << "^" << params.spec->alpha() << " h=" << h
              << " N=" << params.N << " d0=" << params.designed_distance << "\n";
    bool ok = true;

    const auto functions = code.brute_force();
    const auto words = code.enumerate();
    const std::uint64_t expected = code.size();
    const bool size_ok = functions.size() == expected && words.size() == expected;
    ok = ok && size_ok;
    std::cout << "size: brute-force " << functions.size() << ", enumerate " << words.size()
              << ", expected " << expected << ": " << (size_ok ? "OK" : "FAIL") << "\n";

    unsigned min_dist = params.N + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            min_dist = std::min(min_dist, hamming_distance(words[i].second, words[j].second));
    const bool dist_ok = min_dist >= params.designed_distance;
    ok = ok && dist_ok;
    std::cout << "distance: min observed " << min_dist << ", designed "
              << params.designed_distance << ": " << (dist_ok ? "OK" : "FAIL") << "\n";

    bool rt_ok = true;
    for (const auto& [m, w] : words) {
        auto f = code.recognize(w);
        if (!f || code.iota(*f) != m) {
            rt_ok = false;
            break;
        }
    }
    ok = ok && rt_ok;
    std::cout << "round-trip: iota(recognize(encode(m))) == m for all m: "
              << (rt_ok ? "OK" : "FAIL") << "\n";

    std::cout << "verify: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_degrade(const std::string& q, unsigned h, const std::string& word, bool have_seed,
                std::uint64_t seed) {
    Code code(CodeParams(parse_field(q), h));
    std::vector<ProjectiveValue> forbidden;
    if (!word.empty()) {
        forbidden = parse_codeword(read_word_argument(word), code.params()).symbols();
    } else if (have_seed) {
        forbidden = code.sample_forbidden(seed);
    } else {
        throw CLI::ValidationError("degrade needs --word (forbidden letters) or --seed");
    }
    Codeword fw(code.params(), forbidden);
    std::cout << "forbidden " << codeword_to_string(fw) << "\n";
    const auto survivors = code.degrade(forbidden);
    for (const auto& [m, w] : survivors) std::cout << m << " " << codeword_to_string(w) << "\n";
    const BigRat expected =
        degradation_expectation(code.params().spec->q(), code.params().N, BigInt(code.size()));
    std::cout << "survivors " << survivors.size() << " expected " << numerator(expected) << "/"
              << denominator(expected) << " (~"
              << format_sig6(static_cast<double>(expected)) << ")\n";
    return 0;
}

int run_zeta(const std::string& lpoly_path, unsigned nmax, const std::string& out_format) {
    LPolynomial L = load_lpoly_file(lpoly_path);
    if (!l_roots_on_critical_circle(L))
        std::cerr << "warning: L-polynomial roots are off the circle |z| = q^(-1/2); "
                     "counts may not come from a curve\n";
    const auto M = mn_from_l(L, nmax);
    const auto A = ah_from_mn(M);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n <= nmax; ++n)
        rows.push_back({std::to_string(n), M[n].str(), A[n].str()});
    emit_table(out_format, {"n", "M_n", "A_h"}, rows);
    return 0;
}

int run_thresholds(std::uint64_t q, bool all_table, const std::string& out_format) {
    std::vector<std::uint64_t> qs;
    if (all_table)
        qs.assign(std::begin(kTableQ), std::end(kTableQ));
    else
        qs.push_back(q);
    std::vector<std::vector<std::string>> rows;
    for (auto qq : qs)
        rows.push_back({std::to_string(qq), format_fixed4(rho1(qq))});
    emit_table(out_format, {"q", "rho1"}, rows);
    return 0;
}

int run_rates(std::uint64_t q, const std::string& grid_text, const std::string& out_format) {
    const auto grid = parse_delta_grid(grid_text);
    const RateBounds rb = rate_bounds(q);
    std::cerr << "crossover_1mR = " << format_sig6(rb.crossover_1mR)
              << " (new bound beats the (q+1)-ary extrapolation while 1-R is below this)\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : rate_table(q, grid))
        rows.push_back({format_sig6(row.delta), format_sig6(row.goppa),
                        format_sig6(row.goppa_q1), format_sig6(row.new_rate),
                        format_sig6(row.gv)});
    emit_table(out_format, {"delta", "goppa", "goppa_q1", "new_rate", "gv"}, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlinear rational-function codes over P^1(F_q)"};
    app.require_subcommand(1);
    // --h is a domain flag (the degree bound), so help lives on --help only
    app.set_help_flag("--help", "print help");

    std::string q_field = "2^1";
    unsigned h = 1, e = 0, nmax = 10;
    std::uint64_t m = 0, q_int = 4, seed = 0;
    std::string word, lpoly, out_format = "csv", delta_grid = "0.1:0.9:0.1";
    bool all_table = false;

    const auto sub = [&app](const std::string& name, const std::string& desc) {
        auto* sc = app.add_subcommand(name, desc);
        sc->set_help_flag("--help", "print help");
        return sc;
    };

    auto* enc = sub("encode", "message index -> codeword");
    enc->add_option("--q", q_field, "field as p^alpha (optionally /modulus-encoding)")->required();
    enc->add_option("--h", h, "degree bound of C(h)")->required();
    enc->add_option("--m", m, "message index in [0, q^(2h+1))")->required();

    auto* dec = sub("decode", "codeword with up to e errors -> function + message");
    dec->add_option("--q", q_field, "field as p^alpha (optionally /modulus-encoding)")->required();
    dec->add_option("--h", h, "degree bound of C(h)")->required();
    dec->add_option("--e", e, "error budget, needs 2(h+e) < N");
    dec->add_option("--word", word, "N symbols (element indices or 'inf'), a file, or - for stdin")
        ->required();

    auto* rec = sub("recognize", "is the word in C(h)?");
    rec->add_option("--q", q_field, "field as p^alpha (optionally /modulus-encoding)")->required();
    rec->add_option("--h", h, "degree bound of C(h)")->required();
    rec->add_option("--word", word, "N symbols (element indices or 'inf'), a file, or - for stdin")->required();

    auto* enu = sub("enumerate", "all (message, codeword) pairs");
    enu->add_option("--q", q_field, "field as p^alpha (optionally /modulus-encoding)")->required();
    enu->add_option("--h", h, "degree bound of C(h)")->required();

    auto* ver = sub("verify", "brute-force size/distance/round-trip report");
    ver->add_option("--q", q_field, "field as p^alpha (optionally /modulus-encoding)")->required();
    ver->add_option("--h", h, "degree bound of C(h)")->required();

    auto* deg = sub("degrade", "restrict each coordinate to q of the q+1 letters");
    deg->add_option("--q", q_field, "field as p^alpha (optionally /modulus-encoding)")->required();
    deg->add_option("--h", h, "degree bound of C(h)")->required();
    deg->add_option("--word", word, "forbidden letter per coordinate");
    auto* seed_opt = deg->add_option("--seed", seed, "sample forbidden letters uniformly");

    auto* zet = sub("zeta", "divisor counts M_n and pair counts A_h from an L-polynomial");
    zet->add_option("--l-poly", lpoly, "JSON file {\"q\":int,\"genus\":int,\"coeffs\":[c0..c2g]}")
        ->required();
    zet->add_option("--nmax", nmax, "table horizon");
    zet->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* thr = sub("thresholds", "rho_1(q) table (CSV q,rho1)");
    thr->add_option("--q", q_int, "perfect square >= 4");
    thr->add_flag("--all-table", all_table, "all ten table values of q");
    thr->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* rat = sub("rates", "rate/distance bound comparison table");
    rat->add_option("--q", q_int, "perfect-square prime power >= 4")->required();
    rat->add_option("--delta-grid", delta_grid, "a:b:step");
    rat->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(enc)) return run_encode(q_field, h, m);
        if (app.got_subcommand(dec)) return run_decode(q_field, h, e, word);
        if (app.got_subcommand(rec)) return run_recognize(q_field, h, word);
        if (app.got_subcommand(enu)) return run_enumerate(q_field, h);
        if (app.got_subcommand(ver)) return run_verify(q_field, h);
        if (app.got_subcommand(deg))
            return run_degrade(q_field, h, word, seed_opt->count() > 0, seed);
        if (app.got_subcommand(zet)) return run_zeta(lpoly, nmax, out_format);
        if (app.got_subcommand(thr)) return run_thresholds(q_int, all_table, out_format);
        if (app.got_subcommand(rat)) return run_rates(q_int, delta_grid, out_format);
    } catch (const CLI::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const ratcode::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 2;
}
