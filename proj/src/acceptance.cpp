// Acceptance harness: runs the paper-core config through the suite engine
// twice and prints one verdict line per acceptance criterion.
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "session.hpp"

using namespace lgt;

namespace {

Json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : "configs/paper-core.json";
    Json config = load(path);

    Session first(config);
    first.run();
    Session second(config);
    second.run();
    bool deterministic = first.report_json().dump() == second.report_json().dump() &&
                         first.report_csv() == second.report_csv();

    // criterion -> suites that must all pass
    const std::vector<std::pair<std::string, std::set<std::string>>> criteria = {
        {"gauge-invariance characterization", {"einv"}},
        {"sandwich strictness", {"sandwich"}},
        {"radical", {"radical", "nmin"}},
        {"separation failure", {"separation"}},
        {"green identities", {"green"}},
        {"causality and time-slice", {"causality", "timeslice"}},
        {"locality", {"locality"}},
        {"charges", {"charges"}},
        {"ccr layer", {"ccr"}},
    };
    std::map<std::string, std::pair<int, int>> tally;  // suite -> (passed, total)
    for (const auto& r : first.run()) {
        auto& t = tally[r.suite];
        ++t.second;
        if (r.pass) ++t.first;
    }
    bool all_ok = true;
    int num = 1;
    for (const auto& [label, suites] : criteria) {
        bool ok = true;
        int total = 0;
        for (const auto& s : suites) {
            auto it = tally.find(s);
            if (it == tally.end()) continue;
            total += it->second.second;
            ok = ok && it->second.first == it->second.second;
        }
        ok = ok && total > 0;
        all_ok = all_ok && ok;
        std::cout << "criterion " << num++ << " (" << label << "): "
                  << (ok ? "PASS" : "FAIL") << "\n";
    }
    all_ok = all_ok && deterministic;
    std::cout << "criterion " << num << " (determinism): "
              << (deterministic ? "PASS" : "FAIL") << "\n";
    return all_ok ? 0 : 1;
}
