// Acceptance run: one line per criterion, exit status 0 iff all pass.
#include "hz/verify.hpp"

#include <iostream>

int main() {
    auto results = hz::run_acceptance({}, [](const hz::CriterionResult& r) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << std::endl;
    });
    std::cout << "\nsummary\n";
    return hz::print_acceptance(std::cout, results) ? 0 : 1;
}
