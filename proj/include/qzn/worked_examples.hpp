#pragma once

#include <span>
#include <string>
#include <vector>

namespace qzn {

/// One demonstration block: the values it computed, and whether they all
/// landed on the expected results.
struct ExampleCheck {
    std::string name;
    std::vector<std::string> lines;
    bool passed = true;
};

/// Replays the seven operation demonstrations (inclusion, equality,
/// complement, intersection, union, conversion, combination) and checks
/// each computed probability, angle, and verdict.
std::vector<ExampleCheck> run_worked_examples();

std::string render_worked_examples(std::span<const ExampleCheck> checks);

bool all_examples_pass(std::span<const ExampleCheck> checks);

} // namespace qzn
