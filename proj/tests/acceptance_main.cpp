#include <iostream>

#include "plunge/acceptance.hpp"

int main() {
    int failed = 0;
    plunge::acceptance::run_all([&](const plunge::acceptance::CheckResult& r) {
        std::cout << plunge::acceptance::format_line(r) << std::endl;
        if (!r.passed) ++failed;
    });
    std::cout << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
    return failed == 0 ? 0 : 1;
}
