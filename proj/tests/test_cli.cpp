#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "johnson/io.hpp"

using johnson::cli::run;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/johnson_cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream f(path, std::ios::binary);
        f << content;
    }
    std::string read() const {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
};

}  // namespace

TEST_CASE("scalar subcommands") {
    CHECK(cli({"eigenvalue", "--i", "0", "--n", "6", "--w", "3"}).out == "9\n");
    CHECK(cli({"eigenvalue", "--i", "3", "--n", "8", "--w", "3"}).out == "-3\n");
    CHECK(cli({"multiplicity", "--i", "1", "--n", "9"}).out == "8\n");
    CHECK(cli({"eberlein", "--k", "2", "--i", "1", "--w", "3", "--n", "9"}).out == "0\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({"eigenvalue", "--i", "0"}).code == 2);              // missing flags
    CHECK(cli({"eigenvalue", "--i", "4", "--n", "8", "--w", "3"}).code == 2);  // out of range
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("criterion text and json") {
    const Run text = cli({"criterion", "--i", "1", "--r", "2", "--w", "3", "--n", "9"});
    CHECK(text.code == 0);
    CHECK(text.out.find("NotReconstructible") != std::string::npos);
    CHECK(text.out.find("F1(0,0) = 0") != std::string::npos);

    const Run js = cli({"criterion", "--i", "1", "--r", "2", "--w", "3", "--n", "9", "--json"});
    CHECK(js.out.find("\"which_F\": \"F1\"") != std::string::npos);

    // identical invocations produce identical bytes
    CHECK(cli({"criterion", "--i", "1", "--r", "2", "--w", "3", "--n", "9", "--json"}).out == js.out);
}

TEST_CASE("oracle subcommand") {
    const Run uniq = cli({"oracle", "--i", "1", "--r", "1", "--w", "3", "--n", "9"});
    CHECK(uniq.code == 0);
    CHECK(uniq.out == "verdict: Reconstructible\n");

    TempFile witness("witness.json");
    const Run bad = cli({"oracle", "--i", "1", "--r", "2", "--w", "3", "--n", "9",
                         "--witness", witness.path});
    CHECK(bad.out == "verdict: NotReconstructible\n");
    const auto f = johnson::vertex_function_from_json(witness.read());
    CHECK(johnson::is_eigenfunction(f, 1));
    CHECK_FALSE(f.is_zero());

    const Run ball = cli({"oracle", "--i", "1", "--r", "1", "--w", "3", "--n", "8", "--ball",
                          "--center", "11100000", "--json"});
    CHECK(ball.out.find("\"set\": \"ball\"") != std::string::npos);
    CHECK(ball.out.find("\"verdict\": \"Reconstructible\"") != std::string::npos);

    CHECK(cli({"oracle", "--i", "1", "--r", "1", "--w", "3", "--n", "8",
               "--center", "11110000"}).code == 2);  // wrong weight
}

TEST_CASE("construct pipeline: f0, lift, difference, induce") {
    TempFile base("f0.json"), lifted("lift.json"), diffed("diff.json"), induced("ind.json");

    CHECK(cli({"construct", "f0", "--n", "6", "--w", "3", "--i", "1", "--out", base.path}).code == 0);
    auto f = johnson::vertex_function_from_json(base.read());
    CHECK(f.params() == johnson::JohnsonParams(6, 3));
    CHECK(johnson::is_eigenfunction(f, 1));

    CHECK(cli({"construct", "lift", "--in", base.path, "--out", lifted.path}).code == 0);
    auto g = johnson::vertex_function_from_json(lifted.read());
    CHECK(g.params() == johnson::JohnsonParams(8, 4));
    CHECK(johnson::is_eigenfunction(g, 2));

    CHECK(cli({"construct", "difference", "--in", base.path, "--j1", "1", "--j2", "2",
               "--out", diffed.path}).code == 0);
    auto d = johnson::vertex_function_from_json(diffed.read());
    CHECK(d.params() == johnson::JohnsonParams(4, 2));
    for (std::size_t a = 0; a < d.size(); ++a) CHECK(d[a] == -2);

    CHECK(cli({"construct", "induce", "--in", base.path, "--target-w", "2",
               "--out", induced.path}).code == 0);
    auto ind = johnson::vertex_function_from_json(induced.read());
    CHECK(ind.params() == johnson::JohnsonParams(6, 2));
    CHECK(johnson::is_eigenfunction(ind, 1));

    // radial with explicit center, byte-determinism
    const Run r1 = cli({"construct", "radial", "--n", "9", "--w", "3", "--i", "1",
                        "--center", "111000000"});
    const Run r2 = cli({"construct", "radial", "--n", "9", "--w", "3", "--i", "1"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);  // canonical center is the default
}

TEST_CASE("reconstruct subcommand round trip") {
    TempFile fn("fn.json"), values("values.json"), result("result.json");
    CHECK(cli({"construct", "radial", "--n", "8", "--w", "3", "--i", "1", "--out", fn.path}).code == 0);
    const auto f = johnson::vertex_function_from_json(fn.read());

    const johnson::JohnsonParams params(8, 3);
    const johnson::Vertex center = johnson::canonical_center(params);
    std::vector<std::pair<johnson::Vertex, johnson::Rat>> given;
    for (const auto& v : johnson::ball(johnson::SphereSpec{center, 1}))
        given.emplace_back(v, f.at(v));
    values.write(johnson::restriction_to_json(params, given));

    const Run rec = cli({"reconstruct", "--i", "1", "--r", "1", "--w", "3", "--n", "8", "--ball",
                         "--center", "11100000", "--values", values.path, "--out", result.path});
    CHECK(rec.code == 0);
    CHECK(rec.out == "Unique\n");
    CHECK(johnson::vertex_function_from_json(result.read()) == f);

    // coverage mismatch is a usage error
    given.pop_back();
    values.write(johnson::restriction_to_json(params, given));
    CHECK(cli({"reconstruct", "--i", "1", "--r", "1", "--w", "3", "--n", "8", "--ball",
               "--center", "11100000", "--values", values.path}).code == 2);
}

TEST_CASE("verify subcommand at a small scale") {
    TempFile csv("verify.csv");
    const Run v = cli({"verify", "--n-max", "6", "--out", csv.path});
    CHECK(v.code == 0);
    CHECK(v.err.find("[FAIL]") == std::string::npos);
    const std::string table = csv.read();
    CHECK(table.rfind("n,w,i,r,", 0) == 0);
    CHECK(table.find(",false,") == std::string::npos);  // all-true agreement column
    // deterministic output
    TempFile csv2("verify2.csv");
    CHECK(cli({"verify", "--n-max", "6", "--out", csv2.path}).code == 0);
    CHECK(csv2.read() == table);
}

TEST_CASE("table subcommand") {
    const Run t = cli({"table", "--w", "3", "--i", "1", "--r-min", "1", "--r-max", "2",
                       "--n-min", "9", "--n-max", "10"});
    CHECK(t.code == 0);
    std::istringstream lines(t.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,w,i,r,criterion_verdict,oracle_verdict,agreement,failing_k1,failing_k2,which_F");
    std::getline(lines, line);
    CHECK(line == "9,3,1,1,Reconstructible,Reconstructible,true,,,");
    std::getline(lines, line);
    CHECK(line == "9,3,1,2,NotReconstructible,NotReconstructible,true,0,0,F1");
}
