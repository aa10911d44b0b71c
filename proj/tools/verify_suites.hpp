#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twocrit::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<std::string> suite_names();

// Runs one named suite, printing one line per check. Returns false when the
// name is unknown or any check fails.
bool run_suite(const std::string& name, std::ostream& out);

}  // namespace twocrit::verify
