#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hwzeta/cli/report.hpp"
#include "hwzeta/invariants.hpp"
#include "hwzeta/rmodel/functors.hpp"
#include "hwzeta/rmodel/io.hpp"
#include "hwzeta/rmodel/validate.hpp"
#include "hwzeta/varieties/constructors.hpp"
#include "hwzeta/varieties/curve.hpp"
#include "hwzeta/zeta.hpp"

namespace hwzeta::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2 };

/// Input problem attributable to a file (or the command line); maps to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline std::string read_source(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream ss;
    if (path == "-") {
        ss << stdin_stream.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError(path + ": cannot open file");
    ss << f.rdbuf();
    return ss.str();
}

inline std::string label(const std::string& path) { return path == "-" ? "<stdin>" : path; }

inline AnyComplex load_any(const std::string& path, std::istream& in) {
    const std::string text = read_source(path, in);
    try {
        return parse_complex(text);
    } catch (const SyntaxError& e) {
        throw InputError(label(path) + ": " + e.what());
    } catch (const SemanticError& e) {
        throw InputError(label(path) + ": " + e.what());
    }
}

/// Loads, validates and converts slot form to the simple-complex form.
inline CrysComplex load_crys(const std::string& path, std::istream& in) {
    AnyComplex any = load_any(path, in);
    try {
        if (auto* s = std::get_if<SlotComplex>(&any)) return to_crys(*s);
        auto& c = std::get<CrysComplex>(any);
        require_valid(c);
        return c;
    } catch (const ValidationError& e) {
        throw InputError(label(path) + ": " + e.what());
    }
}

inline std::string ij_key(const Bidegree& ij) { return std::to_string(ij.first) + "," + std::to_string(ij.second); }

inline std::string p_power(std::uint64_t p, std::int64_t e) { return std::to_string(p) + "^" + std::to_string(e); }

inline void add_table(Report& rep, const std::string& section, const InvariantTable& t) {
    if (t.empty()) rep.add(section, "all", "0");
    for (const auto& [ij, v] : t.entries()) rep.add(section, ij_key(ij), v.to_string());
}

inline const char* verdict(bool b) { return b ? "PASS" : "FAIL"; }

struct Options {
    Format format = Format::text;
    std::optional<int> r;
    std::size_t m = 0;
    int dim = 0;
    bool semisimple = false;
    std::vector<std::string> files;
    std::vector<std::string> args;
    std::optional<std::uint64_t> p;
    int a = 1;
};

inline int cmd_validate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    AnyComplex any = load_any(o.files.at(0), in);
    auto ds = std::visit([](const auto& c) { return validate(c); }, any);
    Report rep;
    if (ds.empty()) rep.add("validate", "status", "ok");
    for (const auto& d : ds) {
        rep.add("validate", "diagnostic", d.to_string());
        err << label(o.files[0]) << ": " << d.to_string() << '\n';
    }
    rep.render(out, o.format);
    return ds.empty() ? ok : input_error;
}

inline int cmd_invariants(const Options& o, std::istream& in, std::ostream& out) {
    const CrysComplex c = load_crys(o.files.at(0), in);
    Report rep;
    add_table(rep, "T", domino_table(c));
    add_table(rep, "m", slope_numbers(c));
    add_table(rep, "h_W", hodge_witt(c));
    const auto cols = euler_column_sums(c);
    if (cols.empty()) rep.add("euler_column_sums", "all", "0");
    for (const auto& [i, v] : cols) rep.add("euler_column_sums", std::to_string(i), std::to_string(v));
    if (o.r) {
        rep.add("weighted", "r", std::to_string(*o.r));
        rep.add("weighted", "e_r", std::to_string(e_r(c, *o.r)));
        rep.add("weighted", "weighted_h_W", weighted_hw(c, *o.r).to_string());
    }
    rep.render(out, o.format);
    return ok;
}

inline int cmd_zeta(const Options& o, std::istream& in, std::ostream& out) {
    const CrysComplex c = load_crys(o.files.at(0), in);
    const ZetaFunction z = zeta_of(c);
    Report rep;
    rep.add("zeta", "q", c.base().q().str());
    rep.add("zeta", "Z", z.to_string());
    for (const auto& [n, p] : z.factors)
        rep.add("zeta", "P_" + std::to_string(n) + "^" + (n % 2 == 0 ? "-1" : "+1"), p.to_string());
    rep.render(out, o.format);
    return ok;
}

inline int cmd_special_value(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const CrysComplex c = load_crys(o.files.at(0), in);
    const int r = *o.r;
    const auto hyp = hypothesis_check(c, r, o.semisimple);
    for (const auto& w : hyp.warnings) err << "warning: " << w << '\n';
    const SpecialValueReport sv = special_value(c, r, o.semisimple);
    Report rep;
    rep.add("special-value", "r", std::to_string(r));
    for (const auto& [j, rho] : sv.rho_j) rep.add("special-value", "rho_" + std::to_string(j), std::to_string(rho));
    rep.add("special-value", "rho", std::to_string(sv.rho));
    rep.add("special-value", "value", sv.value.to_string());
    rep.add("special-value", "ord_p", std::to_string(sv.ord));
    rep.add("special-value", "|value|_p^-1", p_power(c.base().p(), sv.ord));
    rep.add("special-value", "hypothesis", sv.hypothesis_ok ? "ok" : "failed");
    rep.render(out, o.format);
    return ok;
}

inline int cmd_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const CrysComplex c = load_crys(o.files.at(0), in);
    const int r = *o.r;
    const VerificationReport v = verify_main_theorem(c, r, o.semisimple);
    for (const auto& w : v.warnings) err << "warning: " << w << '\n';
    const auto p = c.base().p();
    Report rep;
    rep.add("input", "p", std::to_string(p));
    rep.add("input", "a", std::to_string(v.a));
    rep.add("input", "r", std::to_string(r));
    for (const auto& [j, rank] : v.ranks) rep.add("ranks", "rank^" + std::to_string(j), std::to_string(rank));
    rep.add("clause1", "alternating_rank_sum", std::to_string(v.alternating_rank_sum));
    rep.add("clause1", "verdict", verdict(v.clause1()));
    rep.add("clause2", "rho", std::to_string(v.rho));
    rep.add("clause2", "rho_direct", std::to_string(v.rho_direct));
    rep.add("clause2", "rho_from_ranks", std::to_string(v.rho_from_ranks));
    rep.add("clause2", "verdict", verdict(v.clause2()));
    rep.add("clause3", "special_value", v.special_value.to_string());
    rep.add("clause3", "ord", std::to_string(v.lhs_exponent));
    rep.add("clause3", "|special_value|_p^-1", p_power(p, v.lhs_exponent));
    for (const auto& [j, zj] : v.z_exponents) rep.add("clause3", "z_" + std::to_string(j), p_power(p, zj));
    rep.add("clause3", "chi", std::to_string(v.chi_exponent));
    rep.add("clause3", "chi_value", p_power(p, v.chi_exponent));
    rep.add("clause3", "e_r", std::to_string(v.e_r));
    rep.add("clause3", "rhs", p_power(p, v.chi_exponent + v.a * v.e_r));
    rep.add("clause3", "verdict", verdict(v.clause3()));
    rep.add("hodge_witt", "weighted_h_W", v.weighted_hw.to_string());
    rep.add("hodge_witt", "e_r", std::to_string(v.e_r));
    rep.add("hodge_witt", "verdict", verdict(v.hodge_witt_identity()));
    rep.add("result", "verdict", verdict(v.passed()));
    rep.render(out, o.format);
    if (!v.passed()) {
        if (!v.clause1()) err << "clause 1 failed: alternating rank sum " << v.alternating_rank_sum << " != 0\n";
        if (!v.clause2())
            err << "clause 2 failed: rho " << v.rho << ", direct " << v.rho_direct << ", from ranks " << v.rho_from_ranks
                << '\n';
        if (!v.clause3())
            err << "clause 3 failed: ord_p " << v.lhs_exponent << " != chi " << v.chi_exponent << " + a*e_r "
                << v.a * v.e_r << '\n';
        if (!v.hodge_witt_identity())
            err << "Hodge-Witt identity failed: " << v.weighted_hw << " != " << v.e_r << '\n';
        return verification_failed;
    }
    return ok;
}

inline int cmd_points(const Options& o, std::istream& in, std::ostream& out) {
    const std::string& path = o.files.at(0);
    const std::string text = read_source(path, in);
    Report rep;
    if (looks_like_curve(text)) {
        std::optional<WeierstrassCurve> curve;
        try {
            curve = parse_curve(text);
        } catch (const SyntaxError& e) {
            throw InputError(label(path) + ": " + e.what());
        } catch (const SemanticError& e) {
            throw InputError(label(path) + ": " + e.what());
        }
        for (std::size_t n = 1; n <= o.m; ++n)
            rep.add("points", "N_" + std::to_string(n), std::to_string(count_points_curve(*curve, static_cast<int>(n))));
    } else {
        std::istringstream again(text);
        const CrysComplex c = load_crys("-", again);
        const auto counts = zeta_point_counts(c, o.m);
        for (std::size_t n = 0; n < counts.size(); ++n) rep.add("points", "N_" + std::to_string(n + 1), counts[n].str());
    }
    rep.render(out, o.format);
    return ok;
}

inline BaseField base_from(const Options& o) {
    if (!o.p) throw InputError("--p is required");
    try {
        return BaseField(*o.p, o.a);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

inline int cmd_make(const Options& o, std::istream& in, std::ostream& out) {
    if (o.args.empty()) throw InputError("make: expected a kind (projspace, curve-weil, product, dual, twist)");
    const std::string& kind = o.args[0];
    auto need = [&](std::size_t n, const char* usage) {
        if (o.args.size() != n) throw InputError(std::string("make ") + usage);
    };
    auto to_int = [](const std::string& s) {
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + s + "'");
        }
    };

    if (kind == "projspace") {
        need(2, "projspace <n> --p P [--a A]");
        const int n = to_int(o.args[1]);
        if (n < 0) throw InputError("make projspace: n must be >= 0");
        out << serialize(projective_space(n, base_from(o)));
    } else if (kind == "curve-weil") {
        if (o.args.size() < 2) throw InputError("make curve-weil <c0> <c1> ... --p P [--a A]");
        std::vector<Rational> coeffs;
        for (std::size_t k = 1; k < o.args.size(); ++k) {
            try {
                coeffs.push_back(Rational::parse(o.args[k]));
            } catch (const std::invalid_argument&) {
                throw InputError("not a rational: '" + o.args[k] + "'");
            }
        }
        out << serialize(curve_from_weil(Polynomial(std::move(coeffs)), base_from(o)));
    } else if (kind == "product") {
        need(3, "product <file1> <file2>");
        out << serialize(kunneth(load_crys(o.args[1], in), load_crys(o.args[2], in)));
    } else if (kind == "dual") {
        need(2, "dual <file> --dim D");
        out << serialize(compact_support_dual(load_crys(o.args[1], in), o.dim));
    } else if (kind == "twist") {
        need(2, "twist <file> --r R");
        if (!o.r) throw InputError("make twist: --r is required");
        out << serialize(tate_twist(load_crys(o.args[1], in), *o.r));
    } else {
        throw InputError("make: unknown kind '" + kind + "'");
    }
    return ok;
}

}  // namespace detail

/// Runs the command line. Reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 a theorem clause failed, 2 input error.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants, zeta functions and special values of coherent complexes", "hwzeta"};
    app.require_subcommand(1);
    detail::Options o;
    std::string format = "text";
    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", format, "Report format (default text)")->check(CLI::IsMember({"text", "tsv"}));
    };
    auto add_file = [&](CLI::App* s) { s->add_option("file", o.files, "Complex file ('-' for stdin)")->required()->expected(1); };

    auto* validate_cmd = app.add_subcommand("validate", "Check a complex against the data-model rules");
    add_file(validate_cmd);
    add_format(validate_cmd);

    auto* invariants_cmd = app.add_subcommand("invariants", "Domino, slope and Hodge-Witt tables");
    add_file(invariants_cmd);
    add_format(invariants_cmd);
    invariants_cmd->add_option("--r", o.r, "Also report e_r and the weighted Hodge-Witt sum");

    auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function as a rational function");
    add_file(zeta_cmd);
    add_format(zeta_cmd);

    auto* sv_cmd = app.add_subcommand("special-value", "Pole order and exact special value at t = q^-r");
    add_file(sv_cmd);
    add_format(sv_cmd);
    sv_cmd->add_option("--r", o.r, "Evaluate at t = q^-r")->required();
    sv_cmd->add_flag("--semisimple", o.semisimple, "Assert that F^a acts semisimply");

    auto* verify_cmd = app.add_subcommand("verify", "Check the special-value theorem at r");
    add_file(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_option("--r", o.r, "Twist of the coefficients")->required();
    verify_cmd->add_flag("--semisimple", o.semisimple, "Assert that F^a acts semisimply");

    auto* points_cmd = app.add_subcommand("points", "Point counts N_1..N_m from a complex or a curve");
    add_file(points_cmd);
    add_format(points_cmd);
    points_cmd->add_option("--m", o.m, "Largest extension degree")->required()->check(CLI::PositiveNumber);

    auto* kunneth_cmd = app.add_subcommand("kunneth", "Product of two complexes");
    kunneth_cmd->add_option("files", o.files)->required()->expected(2);

    auto* dual_cmd = app.add_subcommand("dual", "Compactly supported dual");
    add_file(dual_cmd);
    dual_cmd->add_option("--dim", o.dim, "Dimension of the variety")->required()->check(CLI::NonNegativeNumber);

    auto* twist_cmd = app.add_subcommand("twist", "Tate twist");
    add_file(twist_cmd);
    twist_cmd->add_option("--r", o.r, "Twist M -> M(r)")->required();

    auto* make_cmd = app.add_subcommand("make", "Construct a complex file");
    make_cmd->add_option("args", o.args, "projspace N | curve-weil C0 C1 ... | product F1 F2 | dual F | twist F")
        ->required();
    make_cmd->add_option("--p", o.p, "Characteristic (projspace, curve-weil)");
    make_cmd->add_option("--a", o.a, "q = p^a (default 1)")->check(CLI::PositiveNumber);
    make_cmd->add_option("--dim", o.dim, "Dimension (dual)")->check(CLI::NonNegativeNumber);
    make_cmd->add_option("--r", o.r, "Twist (twist)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }
    o.format = format == "tsv" ? Format::tsv : Format::text;

    try {
        if (*validate_cmd) return detail::cmd_validate(o, in, out, err);
        if (*invariants_cmd) return detail::cmd_invariants(o, in, out);
        if (*zeta_cmd) return detail::cmd_zeta(o, in, out);
        if (*sv_cmd) return detail::cmd_special_value(o, in, out, err);
        if (*verify_cmd) return detail::cmd_verify(o, in, out, err);
        if (*points_cmd) return detail::cmd_points(o, in, out);
        if (*kunneth_cmd) {
            out << serialize(kunneth(detail::load_crys(o.files.at(0), in), detail::load_crys(o.files.at(1), in)));
            return ok;
        }
        if (*dual_cmd) {
            const CrysComplex d = compact_support_dual(detail::load_crys(o.files.at(0), in), o.dim);
            for (const auto& note : d.notes()) err << note << '\n';
            out << serialize(d);
            return ok;
        }
        if (*twist_cmd) {
            out << serialize(tate_twist(detail::load_crys(o.files.at(0), in), *o.r));
            return ok;
        }
        if (*make_cmd) return detail::cmd_make(o, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

}  // namespace hwzeta::cli
