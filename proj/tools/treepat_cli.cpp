#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treepat/branching.hpp"
#include "treepat/enumerate.hpp"
#include "treepat/numerics.hpp"
#include "treepat/scan.hpp"
#include "treepat/structure.hpp"
#include "treepat/transforms.hpp"
#include "treepat/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace treepat;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error("cannot open output file: " + out);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

ordered_json pattern_json(const Pattern& p) { return ordered_json::parse(p.serialize()); }

ordered_json classification_json(const Pattern& p, const Classification& c) {
    ordered_json j;
    j["period"] = p.period();
    j["entropy"] = c.entropy;
    j["zero"] = c.zero;
    j["reducible"] = c.reducible;
    j["pi_reducible"] = c.pi_red ? ordered_json({c.pi_red->a, c.pi_red->b}) : ordered_json(nullptr);
    j["flower_k"] = c.flower_k ? ordered_json(*c.flower_k) : ordered_json(nullptr);
    j["triple_chain"] = c.triple_chain;
    j["irreducible"] = c.irreducible;
    return j;
}

void add_matrix_dump(ordered_json& j, const Pattern& p) {
    CoveringGraph g(p);
    ordered_json paths = ordered_json::array();
    for (const auto& bp : g.paths()) paths.push_back({bp.a, bp.b});
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < g.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < g.size(); ++k) row.push_back(g.at(i, k) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    j["paths"] = std::move(paths);
    j["matrix"] = std::move(rows);
}

std::string csv_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream os;
    os << "period,components,entropy,zero,reducible,pi_reducible,flower_k,triple_chain,irreducible\n";
    os.precision(17);
    for (const auto& r : records) {
        ordered_json comps = ordered_json::parse(r.pattern.serialize())["components"];
        os << r.pattern.period() << ',' << csv_escape(comps.dump()) << ',' << r.cls.entropy << ','
           << (r.cls.zero ? 1 : 0) << ',' << (r.cls.reducible ? 1 : 0) << ',';
        if (r.cls.pi_red) os << r.cls.pi_red->a << '-' << r.cls.pi_red->b;
        os << ',';
        if (r.cls.flower_k) os << *r.cls.flower_k;
        os << ',' << (r.cls.triple_chain ? 1 : 0) << ',' << (r.cls.irreducible ? 1 : 0) << '\n';
    }
    return os.str();
}

int report_exit(const Report& rep, const std::string& out) {
    write_output(out, rep.to_json());
    return rep.passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"periodic tree pattern entropy toolkit"};
    app.require_subcommand(1);

    std::string input = "-", out, family = "all", format = "jsonl";
    double tol = 1e-10, value_tol = 1e-6;
    int n = 0, point = 0, pval = 2, max_period = 24, chain_max_n = 8, max_n = 8;
    bool emit_matrix = false, count_only = false, allow_large = false, serial = false;

    auto* analyze = app.add_subcommand("analyze", "classify a pattern");
    analyze->add_option("--input", input);
    analyze->add_option("--tol", tol);
    analyze->add_flag("--emit-matrix", emit_matrix);
    analyze->add_option("--out", out);

    auto* entropy_cmd = app.add_subcommand("entropy", "topological entropy of a pattern");
    entropy_cmd->add_option("--input", input);
    entropy_cmd->add_option("--tol", tol);
    entropy_cmd->add_flag("--emit-matrix", emit_matrix);
    entropy_cmd->add_option("--out", out);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "all n-periodic patterns up to rotation");
    enumerate_cmd->add_option("--n", n)->required();
    enumerate_cmd->add_flag("--count-only", count_only);
    enumerate_cmd->add_option("--family", family)
        ->check(CLI::IsMember({"all", "positive", "irreducible", "reducible-positive"}));
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"jsonl", "csv"}));
    enumerate_cmd->add_flag("--allow-large", allow_large);
    enumerate_cmd->add_flag("--serial", serial);
    enumerate_cmd->add_option("--out", out);

    auto* openings_cmd = app.add_subcommand("openings", "all openings of a pattern");
    openings_cmd->add_option("--input", input);
    openings_cmd->add_option("--out", out);

    auto* collapse_cmd = app.add_subcommand("collapse", "collapse sequence of a zero-entropy pattern");
    collapse_cmd->add_option("--input", input);
    collapse_cmd->add_option("--out", out);

    auto* branching_cmd = app.add_subcommand("branching", "branching sequence around a point");
    branching_cmd->add_option("--input", input);
    branching_cmd->add_option("--point", point)->required();
    branching_cmd->add_option("--out", out);

    auto* qn_cmd = app.add_subcommand("qn", "the minimum-entropy pattern Q_n");
    qn_cmd->add_option("--n", n)->required();
    qn_cmd->add_option("--out", out);

    auto* extend_cmd = app.add_subcommand("extend", "canonical p-extension of a pattern");
    extend_cmd->add_option("--input", input);
    extend_cmd->add_option("--p", pval)->required();
    extend_cmd->add_option("--out", out);

    auto* reverse_cmd = app.add_subcommand("reverse", "time reversal of a pattern");
    reverse_cmd->add_option("--input", input);
    reverse_cmd->add_option("--out", out);

    auto* lambda_cmd = app.add_subcommand("lambda", "root of x^n - 2x - 1 in (1,2]");
    lambda_cmd->add_option("--n", n)->required();
    lambda_cmd->add_option("--tol", tol);
    lambda_cmd->add_option("--out", out);

    auto* verify_cmd = app.add_subcommand("verify", "verification harnesses over enumerated families");
    verify_cmd->require_subcommand(1);
    auto* v_min = verify_cmd->add_subcommand("min-entropy", "minimum entropy over positive patterns");
    v_min->add_option("--n", n)->required();
    v_min->add_option("--tol", value_tol);
    v_min->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    v_min->add_option("--out", out);
    v_min->add_flag("--serial", serial);
    auto* v_red = verify_cmd->add_subcommand("reducible-min", "minimum entropy over reducible positive patterns");
    v_red->add_option("--n", n)->required();
    v_red->add_option("--tol", value_tol);
    v_red->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    v_red->add_option("--out", out);
    v_red->add_flag("--serial", serial);
    auto* v_pi = verify_cmd->add_subcommand("pi-reducibility", "pi-reducibility under the opening hypotheses");
    v_pi->add_option("--n", n)->required();
    v_pi->add_option("--out", out);
    v_pi->add_flag("--serial", serial);
    auto* v_split = verify_cmd->add_subcommand("splitting", "split-time formulas and covering bounds");
    v_split->add_option("--max-period", max_period);
    v_split->add_option("--chain-max-n", chain_max_n);
    v_split->add_option("--out", out);
    auto* v_struct = verify_cmd->add_subcommand("structure", "cross-module structural invariants");
    v_struct->add_option("--max-n", max_n);
    v_struct->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            Pattern p = Pattern::parse(read_input(input));
            ordered_json j = classification_json(p, classify(p, tol));
            if (emit_matrix) add_matrix_dump(j, p);
            write_output(out, j.dump());
        } else if (*entropy_cmd) {
            Pattern p = Pattern::parse(read_input(input));
            ordered_json j;
            j["entropy"] = treepat::entropy(p, tol);
            if (emit_matrix) add_matrix_dump(j, p);
            write_output(out, j.dump());
        } else if (*enumerate_cmd) {
            if (n > 9 && !allow_large)
                throw DomainError("enumeration beyond n=9 needs --allow-large");
            if (count_only) {
                write_output(out, std::to_string(count_patterns(n, !serial)));
            } else {
                Family fam = family_from_name(family);
                std::vector<ScanRecord> records;
                if (fam == Family::All && format == "jsonl") {
                    std::ostringstream os;
                    for (const Pattern& p : enumerate_patterns(n, !serial)) os << p.serialize() << '\n';
                    write_output(out, os.str());
                } else {
                    records = scan_family(n, fam, !serial, tol);
                    if (format == "csv") {
                        write_output(out, scan_csv(records));
                    } else {
                        std::ostringstream os;
                        for (const auto& r : records) os << r.pattern.serialize() << '\n';
                        write_output(out, os.str());
                    }
                }
            }
        } else if (*openings_cmd) {
            Pattern p = Pattern::parse(read_input(input));
            ordered_json arr = ordered_json::array();
            for (const auto& o : openings(p)) {
                ordered_json j;
                j["inner"] = o.inner;
                j["components"] = {o.comp_a, o.comp_b};
                j["pattern"] = pattern_json(o.pattern);
                arr.push_back(std::move(j));
            }
            write_output(out, arr.dump());
        } else if (*collapse_cmd) {
            Pattern p = Pattern::parse(read_input(input));
            CollapseSequence seq = collapse_sequence(p);
            ordered_json j;
            ordered_json periods = ordered_json::array(), pats = ordered_json::array();
            for (const auto& q : seq.patterns) {
                periods.push_back(q.period());
                pats.push_back(pattern_json(q));
            }
            j["periods"] = std::move(periods);
            j["cardinalities"] = seq.cardinalities;
            j["patterns"] = std::move(pats);
            write_output(out, j.dump());
        } else if (*branching_cmd) {
            Pattern p = Pattern::parse(read_input(input));
            BranchingSequence s = branching_sequence(p, point);
            ordered_json arr = ordered_json::array();
            for (const auto& [pi, di] : s.entries) arr.push_back({pi, di});
            write_output(out, arr.dump());
        } else if (*qn_cmd) {
            write_output(out, q_pattern(n).serialize());
        } else if (*extend_cmd) {
            Pattern p = Pattern::parse(read_input(input));
            write_output(out, p_extension(p, pval).serialize());
        } else if (*reverse_cmd) {
            Pattern p = Pattern::parse(read_input(input));
            write_output(out, time_reverse(p).serialize());
        } else if (*lambda_cmd) {
            std::ostringstream os;
            os.precision(17);
            os << lambda_n(n, tol);
            write_output(out, os.str());
        } else if (*verify_cmd) {
            if (*v_min) {
                if (format == "csv") {
                    write_output(out, scan_csv(scan_family(n, Family::Positive, !serial)));
                    Report rep = verify_min_entropy(n, value_tol, 1e-10, !serial);
                    return rep.passed ? 0 : 2;
                }
                return report_exit(verify_min_entropy(n, value_tol, 1e-10, !serial), out);
            }
            if (*v_red) {
                if (format == "csv") {
                    write_output(out, scan_csv(scan_family(n, Family::ReduciblePositive, !serial)));
                    Report rep = verify_reducible_min(n, value_tol, 1e-10, !serial);
                    return rep.passed ? 0 : 2;
                }
                return report_exit(verify_reducible_min(n, value_tol, 1e-10, !serial), out);
            }
            if (*v_pi) return report_exit(verify_pi_reducibility(n, 1e-10, !serial), out);
            if (*v_split) return report_exit(run_splitting_suite(max_period, chain_max_n), out);
            if (*v_struct) return report_exit(run_structure_suite(max_n), out);
        }
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const VerificationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
