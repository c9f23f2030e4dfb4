// End-to-end checks of the command line tool: golden outputs and the exit
// code contract. Invoked with the binary path as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

std::string g_bin;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& shell_command) {
    std::string cmd = shell_command + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        std::cerr << "popen failed for: " << cmd << "\n";
        exit(1);
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
    if (got != want) {
        ++g_failures;
        std::cerr << "FAIL: " << what << "\n--- got ---\n" << got << "--- want ---\n" << want
                  << "---\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-lcf-binary>\n";
        return 2;
    }
    g_bin = std::string("\"") + argv[1] + "\"";

    // gen emits canonical .h3 text
    {
        RunResult r = run(g_bin + " gen complete 4");
        expect(r.exit_code == 0, "gen complete exit code");
        expect_eq(r.out, "n 4\ne 0 1 2\ne 0 1 3\ne 0 2 3\ne 1 2 3\n", "gen complete 4 output");
    }

    // color on a 2-colorable family
    {
        RunResult r = run(g_bin + " gen extremal 8 | " + g_bin + " color -");
        expect(r.exit_code == 0, "color extremal exit code");
        int lines = 0;
        for (char c : r.out) lines += c == '\n';
        expect(lines == 8, "color extremal emits one line per vertex");
        expect(r.out.rfind("c 0 ", 0) == 0, "color output starts with vertex 0");
    }

    // color returns the witness exit code on a complete block
    {
        RunResult r = run(g_bin + " gen complete 5 | " + g_bin + " color -");
        expect(r.exit_code == 2, "color witness exit code");
        expect_eq(r.out, "w k53\nv 0\nv 1\nv 2\nv 3\nv 4\n", "k53 witness block");
    }

    // linear-cycle witness block shape
    {
        RunResult r = run(g_bin + " gen complete 6 | " + g_bin + " color -");
        expect(r.exit_code == 2, "color cycle witness exit code");
        expect(r.out.rfind("w cycle\n", 0) == 0, "cycle witness header");
    }

    // check reports both properties and thickness
    {
        RunResult r = run(g_bin + " gen nine | " + g_bin + " check -");
        expect(r.exit_code == 0, "check exit code");
        expect(r.out.find("n 9 m 24\n") == 0, "check header");
        expect(r.out.find("linear-cycle-free yes\n") != std::string::npos, "check lcf line");
        expect(r.out.find("k53-free no\n") != std::string::npos, "check k53 line");
        expect(r.out.find("w k53\nv 4\nv 5\nv 6\nv 7\nv 8\n") != std::string::npos,
               "check k53 witness");
        expect(r.out.find("thick-edges ") != std::string::npos, "check thickness line");
    }

    // alpha of the extremal family is the sharp bound
    {
        RunResult r = run(g_bin + " gen extremal 8 | " + g_bin + " alpha -");
        expect(r.exit_code == 0, "alpha exit code");
        expect(r.out.rfind("alpha 4\n", 0) == 0, "alpha value line");
        expect(r.out.find("\nset ") != std::string::npos, "alpha witness line");
    }

    // degrees of the nine-vertex example
    {
        RunResult r = run(g_bin + " gen nine | " + g_bin + " degrees -");
        expect(r.exit_code == 0, "degrees exit code");
        for (int v = 0; v < 9; ++v) {
            std::string want = "d " + std::to_string(v) + " 8 ";
            expect(r.out.find(want) != std::string::npos, "degrees line for vertex");
        }
        expect(r.out.find("theorem4 not applicable (n=9)\n") != std::string::npos,
               "degree-bound verdict at n=9");
    }

    // degree-bound verdict on a large sharp instance
    {
        RunResult r = run(g_bin + " gen star 12 | " + g_bin + " degrees -");
        expect(r.exit_code == 0, "degrees star exit code");
        expect(r.out.find("theorem4 holds vertex=1 degree=10\n") != std::string::npos,
               "degree-bound verdict at n=12");
    }

    // sweep golden text
    {
        RunResult r = run(g_bin + " sweep 4");
        expect(r.exit_code == 0, "sweep exit code");
        expect_eq(r.out,
                  "sweep n=4 mode=exhaustive\n"
                  "instances total=16 lcf=16 k53free=16\n"
                  "check 3colorable checked=16 failures=0\n"
                  "check alpha-ge-two-fifths checked=16 failures=0\n"
                  "check 2coloring checked=16 failures=0\n"
                  "check alpha-ge-half checked=16 failures=0\n"
                  "check profile-dichotomy checked=4 failures=0\n"
                  "check strong-degree checked=16 failures=0\n"
                  "check degree-bound checked=0 failures=0\n"
                  "check oracle-audit checked=1 failures=0\n"
                  "assertion-failures 0\n"
                  "counterexamples 0\n",
                  "sweep 4 report");
    }

    // random sweep is reproducible
    {
        RunResult a = run(g_bin + " sweep 8 --random 10 --seed 3");
        RunResult b = run(g_bin + " sweep 8 --random 10 --seed 3");
        expect(a.exit_code == 0, "random sweep exit code");
        expect_eq(a.out, b.out, "random sweep determinism");
    }

    // the random generator is deterministic and emits cycle-free instances
    {
        RunResult a = run(g_bin + " gen random 6 42 5");
        RunResult b = run(g_bin + " gen random 6 42 5");
        expect(a.exit_code == 0, "gen random exit code");
        expect_eq(a.out, b.out, "gen random determinism");
        RunResult c = run(g_bin + " gen random 6 42 5 | " + g_bin + " check -");
        expect(c.out.find("linear-cycle-free yes\n") != std::string::npos,
               "generated instance is linear-cycle-free");
    }

    // exit codes for usage and file problems
    expect(run(g_bin + " frobnicate x").exit_code == 64, "unknown command exits 64");
    expect(run(g_bin + " sweep 4 --bogus").exit_code == 64, "unknown flag exits 64");
    expect(run(g_bin + " check /nonexistent/path.h3").exit_code == 66, "missing file exits 66");
    {
        std::string tmp = "/tmp/lcf_cli_bad.h3";
        std::ofstream f(tmp);
        f << "n 3\ne 0 1 9\n";
        f.close();
        expect(run(g_bin + " check " + tmp).exit_code == 66, "malformed file exits 66");
        std::remove(tmp.c_str());
    }

    // round trip through a file argument (not stdin)
    {
        std::string tmp = "/tmp/lcf_cli_h7.h3";
        RunResult gen = run(g_bin + " gen extremal 7");
        std::ofstream f(tmp);
        f << gen.out;
        f.close();
        RunResult r = run(g_bin + " alpha " + tmp);
        expect(r.out.rfind("alpha 4\n", 0) == 0, "alpha from file");
        std::remove(tmp.c_str());
    }

    if (g_failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cout << "cli_tests: " << g_failures << " failures\n";
    return 1;
}
