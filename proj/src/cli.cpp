#include "qcomb/cli.hpp"

#include "qcomb/bijections.hpp"
#include "qcomb/families.hpp"
#include "qcomb/json_io.hpp"
#include "qcomb/lattice_path.hpp"
#include "qcomb/permutation.hpp"
#include "qcomb/qseries.hpp"
#include "qcomb/sign_involutions.hpp"
#include "qcomb/tableau.hpp"
#include "qcomb/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace qcomb::cli {

namespace {

using nlohmann::json;

json point_list(const std::vector<LatticePoint>& points) {
    json out = json::array();
    for (const auto& p : points) out.push_back({p.x, p.y});
    return out;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void print_kv(std::ostream& os, const std::string& format, const std::vector<std::pair<std::string, std::string>>& rows,
              const json& as_json) {
    if (format == "json") {
        os << as_json.dump(2) << "\n";
    } else if (format == "csv") {
        for (const auto& [k, v] : rows) os << k << "," << csv_quote(v) << "\n";
    } else if (rows.size() == 1) {
        os << rows.front().second << "\n";
    } else {
        for (const auto& [k, v] : rows) os << k << ": " << v << "\n";
    }
}

void print_poly(std::ostream& os, const std::string& format, const LaurentPoly& poly, json meta = {}) {
    if (format == "json") {
        meta["poly"] = poly_to_json(poly);
        meta["text"] = poly.str();
        os << meta.dump(2) << "\n";
    } else if (format == "csv") {
        os << "exponent,coefficient\n";
        for (const auto& [e, c] : poly.terms()) os << e << "," << c.str() << "\n";
    } else {
        os << poly.str() << "\n";
    }
}

struct WhereClause {
    Stat stat;
    long long value;
};

WhereClause parse_where(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--where expects stat=value");
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    WhereClause w{parse_stat(trim(text.substr(0, eq))), 0};
    w.value = std::stoll(trim(text.substr(eq + 1)));
    return w;
}

void report_text(std::ostream& os, const VerificationReport& r) {
    os << "id: " << r.id << "\n";
    os << "n: " << r.n << "\n";
    if (r.param) os << "param: " << *r.param << "\n";
    os << "length: " << r.length << "\n";
    os << "lhs: " << r.lhs.str() << "\n";
    os << "rhs: " << r.rhs.str() << "\n";
    os << "equal: " << (r.equal ? "true" : "false") << "\n";
    os << "elapsed_ms: " << r.elapsed_ms << "\n";
    for (const auto& [k, v] : r.counts) os << k << ": " << v << "\n";
}

void report_csv_header(std::ostream& os) { os << "id,n,param,length,equal,elapsed_ms,lhs,rhs\n"; }

void report_csv_row(std::ostream& os, const VerificationReport& r) {
    os << r.id << "," << r.n << "," << (r.param ? std::to_string(*r.param) : "") << "," << r.length << ","
       << (r.equal ? "true" : "false") << "," << r.elapsed_ms << "," << csv_quote(r.lhs.str()) << ","
       << csv_quote(r.rhs.str()) << "\n";
}

void report_table(std::ostream& os, const std::vector<VerificationReport>& reports) {
    os << std::left << std::setw(12) << "id" << std::setw(5) << "n" << std::setw(7) << "length"
       << std::setw(7) << "equal" << std::setw(6) << "ms" << "counts\n";
    for (const auto& r : reports) {
        std::ostringstream notes;
        for (const auto& [k, v] : r.counts) {
            if (k == "family_size" || k == "domain_size" || k == "fixed_count" || k == "params_checked")
                notes << k << "=" << v << " ";
        }
        os << std::left << std::setw(12) << r.id << std::setw(5) << r.n << std::setw(7) << r.length
           << std::setw(7) << (r.equal ? "ok" : "FAIL") << std::setw(6) << r.elapsed_ms << notes.str() << "\n";
    }
}

int emit_reports(std::ostream& out, const std::string& format, const std::string& out_file,
                 const std::vector<VerificationReport>& reports) {
    std::ostringstream buffer;
    std::ostream& os = buffer;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        report_csv_header(os);
        for (const auto& r : reports) report_csv_row(os, r);
    } else {
        report_table(os, reports);
        long long failures = 0;
        for (const auto& r : reports)
            if (!r.equal) ++failures;
        os << reports.size() << " checks, " << (failures == 0 ? "all equal" : std::to_string(failures) + " FAILED")
           << "\n";
    }
    if (!out_file.empty()) {
        std::ofstream f(out_file);
        if (!f) throw std::invalid_argument("cannot open --out file " + out_file);
        f << buffer.str();
        out << "wrote " << reports.size() << " reports to " << out_file << "\n";
    } else {
        out << buffer.str();
    }
    for (const auto& r : reports)
        if (!r.equal) return 1;
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics engine: pattern-avoiding involutions, grand Dyck paths,\n"
                 "sign-reversing involutions and q-polynomial identity verification"};
    app.name("qcomb");
    app.require_subcommand(1);

    std::string perm_text;
    std::string path_text;
    std::string id_text;
    std::string family_text = "I321";
    std::string where_text;
    std::string format = "text";
    std::string out_file;
    std::string sign_text;
    std::string weight_text;
    int n = 0;
    int k = 0;
    int ell = 0;
    int a = 0;
    int b = 0;
    int scale = 1;
    int n_max = 0;
    long long at_value = 0;
    bool have_n = false;

    const auto format_check = CLI::IsMember({"text", "json", "csv"});

    auto* stats_cmd = app.add_subcommand("stats", "statistics of one permutation");
    stats_cmd->add_option("--perm", perm_text, "permutation, space-separated values")->required();
    stats_cmd->add_option("--format", format)->check(format_check);

    auto* map_cmd = app.add_subcommand("map", "apply one of the bijections");
    std::string map_name;
    map_cmd->add_option("name", map_name, "delta | delta-inv | xi | xi-inv | to-grand | from-grand | rsk | transpose")
        ->required()
        ->check(CLI::IsMember({"delta", "delta-inv", "xi", "xi-inv", "to-grand", "from-grand", "rsk", "transpose"}));
    auto* map_perm = map_cmd->add_option("--perm", perm_text);
    auto* map_path = map_cmd->add_option("--path", path_text);
    auto* map_n = map_cmd->add_option("--n", n, "target length for from-grand");
    map_cmd->add_option("--format", format)->check(format_check);

    auto* invol_cmd = app.add_subcommand("involution", "apply a sign-reversing involution or a fixed-point builder");
    invol_cmd->add_option("--id", id_text, "Phi1..Phi4 or gamma, phi1, phi2, psi0..psi2, varphi0..varphi2")->required();
    invol_cmd->add_option("--path", path_text)->required();
    invol_cmd->add_option("--format", format)->check(format_check);

    auto* enum_cmd = app.add_subcommand("enumerate", "list a family in lexicographic order");
    enum_cmd->add_option("--family", family_text)->required();
    enum_cmd->add_option("--n", n)->required();
    enum_cmd->add_option("--where", where_text, "filter, e.g. lead=1");
    enum_cmd->add_option("--format", format)->check(format_check);

    auto* genfun_cmd = app.add_subcommand("genfun", "weighted generating function over a family");
    genfun_cmd->add_option("--family", family_text)->required();
    genfun_cmd->add_option("--n", n)->required();
    genfun_cmd->add_option("--weight", weight_text, "statistic in the q-exponent")->required();
    genfun_cmd->add_option("--sign", sign_text, "statistic in the (-1)-exponent");
    genfun_cmd->add_option("--scale", scale, "multiplier of the weight exponent");
    genfun_cmd->add_option("--format", format)->check(format_check);

    auto* qpoly_cmd = app.add_subcommand("qpoly", "q-polynomial builders");
    std::string qpoly_name;
    qpoly_cmd->add_option("name", qpoly_name, "binom | qint | espec")
        ->required()
        ->check(CLI::IsMember({"binom", "qint", "espec"}));
    qpoly_cmd->add_option("--n", n);
    qpoly_cmd->add_option("--k", k);
    qpoly_cmd->add_option("--a", a, "lowest exponent of the espec alphabet");
    qpoly_cmd->add_option("--b", b, "highest exponent of the espec alphabet");
    auto* at_opt = qpoly_cmd->add_option("--at", at_value, "evaluate the polynomial at an integer");
    qpoly_cmd->add_option("--format", format)->check(format_check);

    auto* verify_cmd = app.add_subcommand("verify", "check one identity");
    verify_cmd->add_option("--id", id_text)->required();
    verify_cmd->add_option("--n", n)->required();
    auto* verify_k = verify_cmd->add_option("--k", k, "k parameter for JD-des / Cor123");
    auto* verify_ell = verify_cmd->add_option("--ell", ell, "ell parameter for JD-lead");
    auto* verify_nmax = verify_cmd->add_option("--n-max", n_max, "raise the desk-scale length bound");
    verify_cmd->add_option("--format", format)->check(format_check);
    verify_cmd->add_option("--out", out_file, "write the report to a file");

    auto* verify_all_cmd = app.add_subcommand("verify-all", "check every identity over its range");
    auto* all_nmax = verify_all_cmd->add_option("--n-max", n_max, "cap (or raise) the enumerated length");
    verify_all_cmd->add_option("--format", format)->check(format_check);
    verify_all_cmd->add_option("--out", out_file, "write the reports to a file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qcomb");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 0;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    have_n = map_n->count() > 0;

    try {
        if (app.got_subcommand(stats_cmd)) {
            const Permutation p = Permutation::parse(perm_text);
            const StatRecord r = stats(p);
            std::ostringstream des_set;
            for (size_t i = 0; i < r.des_set.size(); ++i) des_set << (i ? " " : "") << r.des_set[i];
            json j{{"perm", p.str()}, {"n", p.size()},    {"inv", r.inv},   {"des_set", r.des_set},
                   {"des", r.des},    {"maj", r.maj},      {"ldes", r.ldes}, {"lead", nullptr}};
            if (r.lead) j["lead"] = *r.lead;
            print_kv(out, format,
                     {{"perm", p.str()},
                      {"n", std::to_string(p.size())},
                      {"inv", std::to_string(r.inv)},
                      {"des_set", des_set.str()},
                      {"des", std::to_string(r.des)},
                      {"maj", std::to_string(r.maj)},
                      {"ldes", std::to_string(r.ldes)},
                      {"lead", r.lead ? std::to_string(*r.lead) : ""}},
                     j);
            return 0;
        }

        if (app.got_subcommand(map_cmd)) {
            const bool wants_perm =
                map_name == "delta" || map_name == "to-grand" || map_name == "rsk" || map_name == "transpose";
            if (wants_perm && map_perm->count() == 0)
                throw std::invalid_argument("map " + map_name + " requires --perm");
            if (!wants_perm && map_path->count() == 0)
                throw std::invalid_argument("map " + map_name + " requires --path");
            if (map_name == "delta") {
                const Permutation p = Permutation::parse(perm_text);
                const LatticePath image = delta(p);
                print_kv(out, format, {{"path", image.str()}}, json{{"perm", p.str()}, {"path", image.str()}});
                return 0;
            }
            if (map_name == "delta-inv") {
                const LatticePath path = LatticePath::parse(path_text);
                const Permutation p = delta_inv(path);
                print_kv(out, format, {{"perm", p.str()}},
                         json{{"path", path.str()}, {"perm", p.str()}, {"cycles", cycle_string(p)}});
                return 0;
            }
            if (map_name == "xi") {
                const LatticePath path = LatticePath::parse(path_text);
                const XiTrace trace = xi_with_trace(path);
                json j{{"path", path.str()},
                       {"image", trace.image.str()},
                       {"unmatched_n", trace.unmatched_n},
                       {"flipped", trace.flipped},
                       {"sump_input", sump(path)},
                       {"sump_output", sump(trace.image)},
                       {"peaks_input", point_list(peaks(path))},
                       {"peaks_output", point_list(peaks(trace.image))}};
                print_kv(out, format, {{"path", trace.image.str()}}, j);
                return 0;
            }
            if (map_name == "xi-inv") {
                const LatticePath path = LatticePath::parse(path_text);
                const LatticePath image = xi_inv(path);
                print_kv(out, format, {{"path", image.str()}}, json{{"path", path.str()}, {"image", image.str()}});
                return 0;
            }
            if (map_name == "to-grand") {
                const Permutation p = Permutation::parse(perm_text);
                const LatticePath image = to_grand(p);
                json j{{"perm", p.str()},
                       {"path", image.str()},
                       {"sump", sump(image)},
                       {"subset_index", b_subset_index(image)}};
                print_kv(out, format, {{"path", image.str()}}, j);
                return 0;
            }
            if (map_name == "from-grand") {
                if (!have_n) throw std::invalid_argument("from-grand requires --n");
                const LatticePath path = LatticePath::parse(path_text);
                const Permutation p = from_grand(path, n);
                print_kv(out, format, {{"perm", p.str()}},
                         json{{"path", path.str()}, {"perm", p.str()}, {"cycles", cycle_string(p)}});
                return 0;
            }
            if (map_name == "rsk") {
                const Permutation p = Permutation::parse(perm_text);
                const auto [tp, tq] = rsk(p);
                print_kv(out, format, {{"P", tp.str()}, {"Q", tq.str()}},
                         json{{"perm", p.str()},
                              {"P", json::parse(tp.str())},
                              {"Q", json::parse(tq.str())}});
                return 0;
            }
            // transpose
            const Permutation p = Permutation::parse(perm_text);
            const Permutation image = transpose_involution(p);
            print_kv(out, format, {{"perm", image.str()}}, json{{"perm", p.str()}, {"image", image.str()}});
            return 0;
        }

        if (app.got_subcommand(invol_cmd)) {
            const LatticePath path = LatticePath::parse(path_text);
            bool is_case = id_text.rfind("Phi", 0) == 0;
            if (is_case) {
                const InvolutionCase c = parse_involution_case(id_text);
                const LatticePath image = apply_case(c, path);
                json j{{"id", id_text},
                       {"path", path.str()},
                       {"image", image.str()},
                       {"fixed", image == path},
                       {"sump_input", sump(path)},
                       {"sump_output", sump(image)},
                       {"subset_index", b_subset_index(path)}};
                print_kv(out, format, {{"path", image.str()}}, j);
                return 0;
            }
            const Builder builder = parse_builder(id_text);
            const LatticePath image = build_fixed(builder, path);
            json j{{"id", id_text},
                   {"source", path.str()},
                   {"image", image.str()},
                   {"sump", sump(image)},
                   {"sump_parity", builder_sump_odd(builder) ? "odd" : "even"},
                   {"subset_index", b_subset_index(image)}};
            print_kv(out, format, {{"path", image.str()}}, j);
            return 0;
        }

        if (app.got_subcommand(enum_cmd)) {
            const Family family = parse_family(family_text);
            std::optional<WhereClause> where;
            if (!where_text.empty()) where = parse_where(where_text);
            std::vector<std::string> members;
            for_each_member(family, n, [&](const Permutation& p) {
                if (where && stat_value(stats(p), where->stat) != where->value) return;
                members.push_back(p.str());
            });
            if (format == "json") {
                json j{{"family", family_text}, {"n", n}, {"count", members.size()}, {"members", members}};
                if (where) j["where"] = where_text;
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                for (const auto& m : members) {
                    std::string row = m;
                    for (auto& c : row)
                        if (c == ' ') c = ',';
                    out << row << "\n";
                }
            } else {
                for (const auto& m : members) out << m << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(genfun_cmd)) {
            GenFunSpec spec;
            spec.family = parse_family(family_text);
            spec.n = n;
            spec.weight = parse_stat(weight_text);
            spec.scale = scale;
            if (!sign_text.empty()) spec.sign = parse_stat(sign_text);
            const LaurentPoly poly = genfun(spec);
            json meta{{"family", family_text}, {"n", n}, {"weight", weight_text}, {"scale", scale}};
            if (!sign_text.empty()) meta["sign"] = sign_text;
            print_poly(out, format, poly, meta);
            return 0;
        }

        if (app.got_subcommand(qpoly_cmd)) {
            LaurentPoly poly;
            json meta{{"op", qpoly_name}};
            if (qpoly_name == "binom") {
                poly = q_binomial(n, k);
                meta["n"] = n;
                meta["k"] = k;
            } else if (qpoly_name == "qint") {
                poly = q_int(n);
                meta["n"] = n;
            } else {
                poly = e_spec(k, a, b);
                meta["k"] = k;
                meta["a"] = a;
                meta["b"] = b;
            }
            if (at_opt->count() > 0) {
                const BigInt value = poly.evaluate(BigInt(at_value));
                meta["at"] = at_value;
                meta["value"] = value.str();
                print_kv(out, format, {{"value", value.str()}}, meta);
                return 0;
            }
            print_poly(out, format, poly, meta);
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            std::optional<int> length_cap;
            if (verify_nmax->count() > 0) length_cap = n_max;
            std::optional<int> param;
            if (verify_k->count() > 0) param = k;
            if (verify_ell->count() > 0) {
                if (param) throw std::invalid_argument("give only one of --k and --ell");
                param = ell;
            }
            VerificationReport report;
            if (id_text.rfind("Phi", 0) == 0) {
                if (param) throw std::invalid_argument("Phi cases take no --k/--ell");
                const InvolutionCase c = parse_involution_case(id_text);
                if (length_cap && *length_cap > kCaseDefaultCap)
                    err << "warning: --n-max " << *length_cap << " exceeds the desk-scale default "
                        << kCaseDefaultCap << "\n";
                report = check_involution_contracts(c, n, length_cap);
            } else {
                const FormulaId id = parse_formula_id(id_text);
                if (length_cap && *length_cap > identity_default_cap(id))
                    err << "warning: --n-max " << *length_cap << " exceeds the desk-scale default "
                        << identity_default_cap(id) << "\n";
                report = check(id, n, param, length_cap);
            }
            std::ostringstream buffer;
            if (format == "json") {
                buffer << report_to_json(report).dump(2) << "\n";
            } else if (format == "csv") {
                report_csv_header(buffer);
                report_csv_row(buffer, report);
            } else {
                report_text(buffer, report);
            }
            if (!out_file.empty()) {
                std::ofstream f(out_file);
                if (!f) throw std::invalid_argument("cannot open --out file " + out_file);
                f << buffer.str();
            } else {
                out << buffer.str();
            }
            return report.equal ? 0 : 1;
        }

        // verify-all
        std::optional<int> length_cap;
        if (all_nmax->count() > 0) {
            length_cap = n_max;
            if (n_max > 19)
                err << "warning: --n-max " << n_max << " exceeds every desk-scale default; "
                    << "large enumerations may be slow\n";
        }
        const std::vector<VerificationReport> reports = verify_all(length_cap);
        return emit_reports(out, format, out_file, reports);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace qcomb::cli
