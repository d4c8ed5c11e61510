// Prints one pass/fail line per acceptance criterion. Arguments select
// criteria by id; with none, all nine run. Exit status 1 if any selected
// criterion fails.

#include "thetacob/acceptance.hpp"

#include <chrono>
#include <iostream>
#include <set>

int main(int argc, char** argv) {
    std::set<std::string> wanted(argv + 1, argv + argc);
    bool ok = true;
    for (const auto& c : thetacob::acceptance_criteria()) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        auto start = std::chrono::steady_clock::now();
        auto r = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << thetacob::format_result(r) << std::flush;
        std::cerr << "    time: " << secs << " s\n";
        ok = ok && r.pass();
    }
    return ok ? 0 : 1;
}
