#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SYMCONE_CLI_PATH
#error "SYMCONE_CLI_PATH must point at the built command-line tool"
#endif

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    static int counter = 0;
    std::string file = "cli_test_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(SYMCONE_CLI_PATH) + " " + args + " > " + file + " 2>&1";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(file.c_str());
    return r;
}

}  // namespace

TEST_CASE("psd-check refutes g_{3,2} with a witness") {
    auto r = run("psd-check --family g_tu --t 3 --u 2");
    CHECK(r.code == 1);
    CHECK(r.out.find("witness") != std::string::npos);
}

TEST_CASE("a printed witness re-checks with --point") {
    auto r = run("psd-check --family 'g_tu(t=3,u=2)' --point 0,1,1,1");
    CHECK(r.code == 1);
    auto ok = run("psd-check --family 'g_tu(t=3,u=2)' --point 1,1,1,1");
    CHECK(ok.code == 0);
}

TEST_CASE("verify-identity at a point") {
    CHECK(run("verify-identity --id thm2.2-det --t 5 --u 3").code == 0);
    CHECK(run("verify-identity --id thm2.2-det --t 5/2 --u 1/3 --format json").code == 0);
}

TEST_CASE("selftest") { CHECK(run("selftest").code == 0); }

TEST_CASE("errors exit with 2") {
    CHECK(run("psd-check --family g_tu --t 3 --u 1").code == 2);
    CHECK(run("psd-check --family g_tu --t 3/0 --u 2").code == 2);
    CHECK(run("psd-check --family nope --t 3").code == 2);
    CHECK(run("certify-extremal --spec thm2.2 --t 1 --u 2").code == 2);
    CHECK(run("no-such-verb").code == 2);
    CHECK(run("psd-check --family g_tu --t 3 --u 2 --format csv").code == 2);
    CHECK(run("verify-identity --id not-an-id").code == 2);
}

TEST_CASE("help exits 0") { CHECK(run("--help").code == 0); }

TEST_CASE("certify and obstruct") {
    CHECK(run("certify-extremal --spec thm4.3-2 --t 3/2").code == 0);
    CHECK(run("sos-obstruction --spec thm2.6 --t 2 --u 3").code == 0);
}

TEST_CASE("json output parses as an object") {
    auto r = run("certify-extremal --spec thm4.4-2 --t 3 --format json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"certified\": true") != std::string::npos);
}

TEST_CASE("discriminant reports Cb undefined at p4 = 0") {
    auto r = run("discriminant --coords 1,-2,1,4,0");
    CHECK(r.code == 0);
    CHECK(r.out.find("undefined") != std::string::npos);
    CHECK(run("discriminant --coords 1,-2,1,4,0 --id Cb").code == 2);
}

TEST_CASE("cross-section csv") {
    auto r = run("cross-section --t 3 --samples 2 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("family,t,u,p0", 0) == 0);
}

TEST_CASE("exit codes do not depend on the worker count") {
    auto a = run("verify-identity --all --samples 3 --seed 5 --format csv");
    auto b = run("verify-identity --all --samples 3 --seed 5 --format csv");
    std::string env = "SYMCONE_WORKERS=4 ";
    std::string cmd = env + std::string(SYMCONE_CLI_PATH) +
                      " verify-identity --all --samples 3 --seed 5 --format csv > cli_workers.txt 2>&1";
    int status = std::system(cmd.c_str());
    std::ifstream in("cli_workers.txt");
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove("cli_workers.txt");
    CHECK(a.code == b.code);
    CHECK(WEXITSTATUS(status) == a.code);
    // seconds are not in the csv, so the documents match byte for byte
    CHECK(ss.str() == a.out);
}
