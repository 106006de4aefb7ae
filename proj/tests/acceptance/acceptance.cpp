// Acceptance suite: runs every reproduction scenario and prints one pass/fail
// line per criterion. With an argument it runs a single criterion (1-8),
// which lets ctest parallelise them.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "dtw/repro.hpp"

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> scenario_ids;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "fixture certificates validate at their stated widths", {"fixture-certificates"}},
        {2, "game facts on the bundled graphs", {"game-facts"}},
        {3, "butterfly-minor witnesses are found and replay", {"minor-witnesses"}},
        {4, "non-closure of NCW, SC0 and SCd", {"ncw-not-closed", "sc0-not-closed", "scd-not-closed"}},
        {5, "NCW0 closure under butterfly minors", {"ncw0-closure"}},
        {6, "bramble suite", {"bramble-suite"}},
        {7, "definition lattice over the small-graph sweep", {"definition-lattice"}},
        {8, "transformations preserve validity and width", {"transformations"}},
    };
    return list;
}

bool run_criterion(const Criterion& c) {
    using Clock = std::chrono::steady_clock;
    bool ok = true;
    auto t0 = Clock::now();
    std::vector<std::string> lines;
    for (const std::string& id : c.scenario_ids) {
        dtw::repro::Report rep = dtw::repro::scenario(id).run();
        ok = ok && rep.passed;
        for (const std::string& line : rep.lines) lines.push_back(line);
    }
    auto secs = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count() / 1000.0;
    std::cout << "CRITERION " << c.number << " [" << (ok ? "PASS" : "FAIL") << "] " << c.title << " ("
              << secs << " s)\n";
    for (const std::string& line : lines) std::cout << line << "\n";
    std::cout.flush();
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool all_ok = true;
    if (argc > 1) {
        int want = std::atoi(argv[1]);
        bool found = false;
        for (const Criterion& c : criteria())
            if (c.number == want) {
                found = true;
                all_ok = run_criterion(c);
            }
        if (!found) {
            std::cerr << "no such criterion: " << argv[1] << " (expected 1-8)\n";
            return 2;
        }
    } else {
        for (const Criterion& c : criteria()) all_ok = run_criterion(c) && all_ok;
    }
    return all_ok ? 0 : 1;
}
