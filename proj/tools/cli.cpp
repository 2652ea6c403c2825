#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "johnson/combinatorics.hpp"
#include "johnson/io.hpp"
#include "johnson/reconstruction.hpp"
#include "johnson/verify.hpp"

namespace johnson::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + path);
    f << content;
}

Vertex parse_center(const std::string& text, const JohnsonParams& params) {
    if (text.empty()) return canonical_center(params);
    const Vertex v = Vertex::parse(text);
    if (v.n != params.n || v.weight() != params.w)
        throw std::invalid_argument("center " + text + " is not a vertex of J(" +
                                    std::to_string(params.n) + "," + std::to_string(params.w) + ")");
    return v;
}

struct TableArgs {
    int w = 0, i = 0, r_min = 0, r_max = 0, n_min = 0, n_max = 0;
};

int run_table(const TableArgs& a, const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (a.r_min > a.r_max || a.n_min > a.n_max)
        throw std::invalid_argument("table: empty range");
    std::ostringstream csv;
    csv << verdict_csv_header();
    bool hard_disagreement = false;
    for (int n = a.n_min; n <= a.n_max; ++n) {
        if (n < 2 * a.w) continue;  // no such graph
        const JohnsonParams params(n, a.w);
        if (a.i > a.w || a.r_max > a.w)
            throw std::invalid_argument("table: need i <= w and r <= w");
        for (int r = a.r_min; r <= a.r_max; ++r) {
            const CriterionReport rep = criterion(a.i, r, params);
            const ReconstructionVerdict oracle =
                oracle_sphere(a.i, r, params, canonical_center(params));
            VerdictRow row;
            row.n = n;
            row.w = a.w;
            row.i = a.i;
            row.r = r;
            row.criterion_verdict = rep.verdict;
            row.oracle_verdict = oracle.unique ? Verdict::Reconstructible : Verdict::NotReconstructible;
            row.agreement = rep.verdict == row.oracle_verdict;
            row.failing_k = rep.failing_k;
            row.failing_which = rep.failing_which;
            csv << verdict_csv_row(row);
            if (!row.agreement) {
                if (rep.hypothesis_ok) {
                    hard_disagreement = true;
                    err << "disagreement inside the theorem window at n=" << n << " w=" << a.w
                        << " i=" << a.i << " r=" << r << "\n";
                } else {
                    err << "advisory disagreement (outside the theorem window) at n=" << n
                        << " w=" << a.w << " i=" << a.i << " r=" << r << "\n";
                }
            }
        }
    }
    write_output(out_path, csv.str(), out);
    return hard_disagreement ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact eigenfunction reconstruction on Johnson graphs J(n, w)"};
    app.require_subcommand(1);

    // ---- scalar commands ----
    struct {
        int k = 0, i = 0, w = 0, n = 0, r = 0;
    } p;
    std::string out_path, center_text, values_path, witness_path, in_path;
    bool as_json = false, use_ball = false;

    auto* c_eberlein = app.add_subcommand("eberlein", "Eberlein polynomial E_k(i, w, n)");
    c_eberlein->add_option("--k", p.k)->required();
    c_eberlein->add_option("--i", p.i)->required();
    c_eberlein->add_option("--w", p.w)->required();
    c_eberlein->add_option("--n", p.n)->required();

    auto* c_eigenvalue = app.add_subcommand("eigenvalue", "lambda_i(n, w) = (w-i)(n-w-i) - i");
    c_eigenvalue->add_option("--i", p.i)->required();
    c_eigenvalue->add_option("--n", p.n)->required();
    c_eigenvalue->add_option("--w", p.w)->required();

    auto* c_multiplicity = app.add_subcommand("multiplicity", "C(n,i) - C(n,i-1)");
    c_multiplicity->add_option("--i", p.i)->required();
    c_multiplicity->add_option("--n", p.n)->required();

    auto* c_criterion = app.add_subcommand("criterion", "sphere reconstructability report");
    c_criterion->add_option("--i", p.i)->required();
    c_criterion->add_option("--r", p.r)->required();
    c_criterion->add_option("--w", p.w)->required();
    c_criterion->add_option("--n", p.n)->required();
    c_criterion->add_flag("--json", as_json);
    c_criterion->add_option("--out", out_path, "write the report here instead of stdout");

    auto* c_oracle = app.add_subcommand("oracle", "exact restriction-rank verdict");
    c_oracle->add_option("--i", p.i)->required();
    c_oracle->add_option("--r", p.r)->required();
    c_oracle->add_option("--w", p.w)->required();
    c_oracle->add_option("--n", p.n)->required();
    c_oracle->add_flag("--ball", use_ball, "use B_r instead of S_r");
    c_oracle->add_option("--center", center_text, "bitstring center (default 1..10..0)");
    c_oracle->add_option("--witness", witness_path, "write a kernel witness here when not unique");
    c_oracle->add_flag("--json", as_json);

    auto* c_construct = app.add_subcommand("construct", "eigenfunction constructions");
    c_construct->require_subcommand(1);
    auto* cc_radial = c_construct->add_subcommand("radial", "distance-only eigenfunction");
    cc_radial->add_option("--n", p.n)->required();
    cc_radial->add_option("--w", p.w)->required();
    cc_radial->add_option("--i", p.i)->required();
    cc_radial->add_option("--center", center_text);
    cc_radial->add_option("--out", out_path);
    auto* cc_f0 = c_construct->add_subcommand("f0", "minimal-support sign pattern");
    cc_f0->add_option("--n", p.n)->required();
    cc_f0->add_option("--w", p.w)->required();
    cc_f0->add_option("--i", p.i)->required();
    cc_f0->add_option("--out", out_path);
    auto* cc_lift = c_construct->add_subcommand("lift", "embed into J(n+2, w+1)");
    cc_lift->add_option("--in", in_path)->required();
    cc_lift->add_option("--out", out_path);
    auto* cc_difference = c_construct->add_subcommand("difference", "two-coordinate difference");
    cc_difference->add_option("--in", in_path)->required();
    cc_difference->add_option("--j1", p.k)->required();
    cc_difference->add_option("--j2", p.r)->required();
    cc_difference->add_option("--out", out_path);
    auto* cc_induce = c_construct->add_subcommand("induce", "sum over sub/super supports");
    cc_induce->add_option("--in", in_path)->required();
    cc_induce->add_option("--target-w", p.w)->required();
    cc_induce->add_option("--out", out_path);

    auto* c_reconstruct = app.add_subcommand("reconstruct", "solve from sphere or ball values");
    c_reconstruct->add_option("--i", p.i)->required();
    c_reconstruct->add_option("--r", p.r)->required();
    c_reconstruct->add_option("--w", p.w)->required();
    c_reconstruct->add_option("--n", p.n)->required();
    c_reconstruct->add_flag("--ball", use_ball);
    c_reconstruct->add_option("--center", center_text)->required();
    c_reconstruct->add_option("--values", values_path)->required();
    c_reconstruct->add_option("--out", out_path);

    int n_max = 8, jobs = 1;
    auto* c_verify = app.add_subcommand("verify", "full property sweep");
    c_verify->add_option("--n-max", n_max)->required();
    c_verify->add_option("--jobs", jobs, "parallel (n, w) groups");
    c_verify->add_option("--out", out_path, "agreement CSV destination");

    TableArgs targs;
    auto* c_table = app.add_subcommand("table", "criterion vs oracle over ranges of n and r");
    c_table->add_option("--w", targs.w)->required();
    c_table->add_option("--i", targs.i)->required();
    c_table->add_option("--r-min", targs.r_min)->required();
    c_table->add_option("--r-max", targs.r_max)->required();
    c_table->add_option("--n-min", targs.n_min)->required();
    c_table->add_option("--n-max", targs.n_max)->required();
    c_table->add_option("--out", out_path);

    std::vector<const char*> argv_c;
    argv_c.push_back("johnson");
    for (const std::string& a : args) argv_c.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv_c.size()), argv_c.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_eberlein) {
            out << to_string(eberlein(p.k, p.i, p.w, p.n)) << "\n";
        } else if (*c_eigenvalue) {
            out << to_string(eigenvalue(p.i, p.n, p.w)) << "\n";
        } else if (*c_multiplicity) {
            out << to_string(multiplicity(p.i, p.n)) << "\n";
        } else if (*c_criterion) {
            const CriterionReport rep = criterion(p.i, p.r, JohnsonParams(p.n, p.w));
            write_output(out_path, as_json ? criterion_report_json(rep) : criterion_report_text(rep), out);
        } else if (*c_oracle) {
            const JohnsonParams params(p.n, p.w);
            const Vertex center = parse_center(center_text, params);
            const ReconstructionVerdict v = use_ball ? oracle_ball(p.i, p.r, params, center)
                                                     : oracle_sphere(p.i, p.r, params, center);
            const Verdict verdict = v.unique ? Verdict::Reconstructible : Verdict::NotReconstructible;
            if (as_json) {
                std::ostringstream ss;
                ss << "{\"n\": " << p.n << ", \"w\": " << p.w << ", \"i\": " << p.i
                   << ", \"r\": " << p.r << ", \"set\": \"" << (use_ball ? "ball" : "sphere")
                   << "\", \"center\": \"" << center.str() << "\", \"verdict\": \""
                   << to_string(verdict) << "\"}\n";
                out << ss.str();
            } else {
                out << "verdict: " << to_string(verdict) << "\n";
            }
            if (!v.unique && !witness_path.empty())
                write_output(witness_path, vertex_function_to_json(*v.witness), out);
        } else if (*cc_radial) {
            const JohnsonParams params(p.n, p.w);
            const VertexFunction f = radial(parse_center(center_text, params), p.i);
            write_output(out_path, vertex_function_to_json(f), out);
        } else if (*cc_f0) {
            write_output(out_path, vertex_function_to_json(f0(p.i, JohnsonParams(p.n, p.w))), out);
        } else if (*cc_lift) {
            const VertexFunction f = vertex_function_from_json(read_file(in_path));
            write_output(out_path, vertex_function_to_json(lift(f)), out);
        } else if (*cc_difference) {
            const VertexFunction f = vertex_function_from_json(read_file(in_path));
            write_output(out_path, vertex_function_to_json(difference(f, p.k, p.r)), out);
        } else if (*cc_induce) {
            const VertexFunction f = vertex_function_from_json(read_file(in_path));
            write_output(out_path, vertex_function_to_json(induce(f, p.w)), out);
        } else if (*c_reconstruct) {
            const JohnsonParams params(p.n, p.w);
            const SphereSpec spec{parse_center(center_text, params), p.r};
            const auto given = restriction_from_json(read_file(values_path));
            const ReconstructionResult res = use_ball ? reconstruct_from_ball(p.i, spec, given)
                                                      : reconstruct_from_sphere(p.i, spec, given);
            if (const Unique* u = std::get_if<Unique>(&res)) {
                out << "Unique\n";
                write_output(out_path, vertex_function_to_json(u->f), out);
            } else if (const NotUnique* nu = std::get_if<NotUnique>(&res)) {
                out << "NotUnique\n";
                write_output(out_path, vertex_function_to_json(nu->witness), out);
            } else {
                out << "Inconsistent\n";
            }
        } else if (*c_verify) {
            const VerifyReport report = run_verification(VerifyOptions{n_max, jobs});
            std::ostringstream csv;
            csv << verdict_csv_header();
            for (const VerdictRow& row : report.agreement) csv << verdict_csv_row(row);
            write_output(out_path, csv.str(), out);
            for (const CheckResult& c : report.checks)
                err << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
            return report.all_pass() ? 0 : 1;
        } else if (*c_table) {
            return run_table(targs, out_path, out, err);
        }
    } catch (const IllPosedError& e) {
        err << "ill-posed: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, std::cout, std::cerr);
}

}  // namespace johnson::cli
