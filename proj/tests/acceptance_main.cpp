#include <cstdio>
#include <fstream>

#include "gwsnu/verify.hpp"

// Acceptance gate: runs the eight verification criteria against the reference
// configuration and prints one pass/fail line per criterion. Exit status is 0
// only when every criterion holds.
int main() {
    using namespace gwsnu;
    const PotentialParams ref = nuclear_params(56, 1.285, 0.65, 10.0, 939.0);
    const SuiteResult s = run_suite(ref);
    for (const auto& c : s.criteria) {
        std::printf("criterion %d %s %s: %s\n", c.index, c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.detail.c_str());
    }
    std::ofstream out("verify-report.json");
    out << report_json(s);
    out.close();
    std::printf("%s\n", s.all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
    return s.all_pass ? 0 : 1;
}
