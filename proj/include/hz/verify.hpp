/**
 * @file verify.hpp
 * @brief Acceptance suite: ten numbered criteria, each reported pass or fail.
 */
#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace hz {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    std::vector<std::string> notes;  // discrepancies and other logged items
};

struct AcceptanceOptions {
    unsigned threads = 0;
    std::vector<int> only;  // empty: all criteria
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

// one line per criterion, then the notes; returns true iff every criterion passed
bool print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace hz
