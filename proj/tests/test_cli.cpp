#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "drh/cli.hpp"

using drh::cli_run;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eq exit codes") {
    CHECK(run({"eq", "--variety", "g", "a^(w-1)", "a^(w-1) a a"}).code == 1);
    CHECK(run({"eq", "--variety", "triv", "a^(w-1)", "a^(w-1) a a"}).code == 0);
    CHECK(run({"eq", "--variety", "ab", "a b", "b a"}).code == 1);
    CHECK(run({"eq", "--variety", "g", "oops(", "a"}).code == 2);
    CHECK(run({"eq", "--variety", "nope", "a", "a"}).code == 2);

    Run witnessed = run({"eq", "--variety", "g", "--witness", "a b", "b a"});
    CHECK(witnessed.code == 1);
    CHECK(witnessed.out.find("witness:") != std::string::npos);
}

TEST_CASE("canon output") {
    Run r = run({"canon", "--variety", "triv", "(a b)^(w-1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "((a b)^w)^w\n");

    Run strict = run({"canon", "--variety", "triv", "--strict-kappa", "(a b)^(w-1)"});
    CHECK(strict.out.find("^w)") == std::string::npos);

    // kbar inputs parse only with the flag.
    CHECK(run({"canon", "--variety", "g", "a^(w-2)"}).code == 2);
    CHECK(run({"canon", "--variety", "g", "--kbar", "a^(w-2)"}).code == 0);
}

TEST_CASE("graph and factor output") {
    Run dot = run({"graph", "--variety", "g", "--dot", "(a b)^(w-1)"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("digraph drh {") == 0);
    CHECK(dot.out.find("label=\"1\"") != std::string::npos);

    Run trace = run({"graph", "--variety", "g", "--trace", "a^(w-1) b"});
    CHECK(trace.out.find("# (0,#) -> [-1 a1 ]-1 b2") != std::string::npos);

    Run f = run({"factor", "--variety", "g", "2", "#", "(a b)^(w-1)"});
    CHECK(f.code == 0);
    CHECK(f.out == "[-2 a1 b2 ]-2\n");

    CHECK(run({"factor", "2", "##", "(a b)^(w-1)"}).code == 2);
}

TEST_CASE("oracle subcommand") {
    std::string path = "test_c3.cay";
    {
        std::ofstream f(path);
        f << "# names: e g g2\n3\n0 1 2\n1 2 0\n2 0 1\n";
    }
    Run hit = run({"oracle", "--variety", "g", "--semigroup", path, "--budget", "100",
                   "a^(w-1)", "a^(w-1) a a"});
    CHECK(hit.code == 0);
    CHECK(hit.out.find("counterexample: a=g") != std::string::npos);

    Run miss = run({"oracle", "--variety", "g", "--semigroup", path, "--budget", "100",
                    "(a^(w-1))^(w-1)", "a^(w-1) a a"});
    CHECK(miss.out.find("no counterexample") != std::string::npos);

    Run guard = run({"oracle", "--variety", "triv", "--semigroup", path, "--budget", "10",
                     "a", "a a"});
    CHECK(guard.code == 2);

    Run missing = run({"oracle", "--variety", "g", "--semigroup", "does_not_exist.cay",
                       "a", "a"});
    CHECK(missing.code == 2);
}

TEST_CASE("bench is deterministic apart from timings") {
    Run r1 = run({"bench", "--variety", "g", "--sizes", "20,40", "--seed", "5"});
    Run r2 = run({"bench", "--variety", "g", "--sizes", "20,40", "--seed", "5"});
    CHECK(r1.code == 0);

    auto strip_millis = [](const std::string& csv) {
        std::istringstream in(csv);
        std::string line, out;
        while (std::getline(in, line)) {
            if (line.rfind("slope:", 0) == 0) continue;  // slope depends on timings
            size_t first = line.find(',');
            size_t second = line.find(',', first + 1);
            size_t third = line.find(',', second + 1);
            if (third != std::string::npos)
                out += line.substr(0, second) + line.substr(third) + "\n";
            else
                out += line + "\n";
        }
        return out;
    };
    CHECK(strip_millis(r1.out) == strip_millis(r2.out));
    CHECK(r1.out.find("m,seed,millis,verdict\n") == 0);
    CHECK(r1.out.find("slope:") != std::string::npos);

    Run empty = run({"bench", "--variety", "g", "--seed", "5"});
    CHECK(empty.out.find("slope: n/a") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"bench", "--sizes", "10"}).code == 2);  // seed is mandatory
}
