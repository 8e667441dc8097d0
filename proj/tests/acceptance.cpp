// One PASS/FAIL line per acceptance criterion.
#include "superwig/suites.hpp"

#include <array>
#include <sstream>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sys/wait.h>

#ifndef SUPERWIG_CLI
#error "SUPERWIG_CLI must name the command-line binary"
#endif

namespace {

struct Shell {
    int code = -1;
    std::string out;
    double seconds = 0;
};

Shell shell(const std::string& args) {
    auto t0 = std::chrono::steady_clock::now();
    Shell s;
    std::string cmd = std::string("\"") + SUPERWIG_CLI + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return s;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) s.out.append(buf.data(), n);
    int status = pclose(p);
    s.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

bool report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << " " << title << ": " << detail << std::endl;
    return pass;
}

} // namespace

int main(int argc, char** argv) {
    std::string eta_path = argc > 1 ? argv[1] : "eta_report.json";
    sw::SuiteOptions o;
    bool all = true;
    const std::array<std::pair<const char*, const char*>, 8> suites{{{"sumrules", "sum rules"},
                                                                     {"oracle-c", "oracle c"},
                                                                     {"oracle-rho", "oracle rho"},
                                                                     {"orthonormality", "full-WC orthonormality"},
                                                                     {"positivity", "positivity"},
                                                                     {"nonunitary", "non-unitary extension"},
                                                                     {"symmetry", "symmetry relation"},
                                                                     {"classical", "classical degeneration"}}};
    int id = 1;
    for (auto& [name, title] : suites) {
        sw::SuiteResult r = sw::run_suite(name, o);
        std::ostringstream d;
        d << std::fixed << std::setprecision(2) << r.detail << " [" << r.seconds << " s]";
        if (std::string(name) == "symmetry") {
            std::ofstream f(eta_path);
            f << r.artifact.dump(2) << '\n';
            d << " -> " << eta_path;
        }
        all = report(id++, title, r.pass, d.str()) && all;
    }

    struct Expect {
        std::string args, out;
    };
    const std::array<Expect, 2> exact{{
        {"rwc --direction covariant --m 1 --n 1 --Lambda 1,0 --lambda 1 --r 1", "{\"sign\":1,\"radicand\":\"1/2\"}"},
        {"branch --m 1 --n 1 --Lambda 1,0", "[[0],[1]]"},
    }};
    bool cli = true;
    std::ostringstream d;
    for (auto& e : exact) {
        Shell s = shell(e.args);
        bool ok = s.code == 0 && s.out == e.out;
        if (!ok) d << "'" << e.args << "' gave '" << s.out << "' (exit " << s.code << "); ";
        cli = cli && ok;
    }
    Shell sr = shell("verify sumrules --seed 7 --max-label 5");
    cli = cli && sr.code == 0;
    if (sr.code != 0) d << "verify sumrules exit " << sr.code << "; ";
    Shell va = shell("verify all");
    cli = cli && va.code == 0 && va.seconds < 180.0;
    d << std::fixed << std::setprecision(2) << "outputs byte-exact " << (cli ? "yes" : "no") << ", verify all exit "
      << va.code << " in " << va.seconds << " s";
    all = report(9, "CLI contract", cli, d.str()) && all;
    return all ? 0 : 1;
}
