// Standalone runner for the randomized property suites.
//   property_tests [cases]   (default 10000 per suite)

#include "properties.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::size_t cases = 10000;
    if (argc > 1) cases = std::strtoull(argv[1], nullptr, 10);

    int status = 0;
    for (const auto& s : props::run_all(cases)) {
        std::cout << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.cases << " cases, " << s.failures
                  << " failures";
        if (!s.ok() && !s.first_failure.empty()) std::cout << " (first: " << s.first_failure << ")";
        std::cout << '\n';
        if (!s.ok()) status = 1;
    }
    return status;
}
