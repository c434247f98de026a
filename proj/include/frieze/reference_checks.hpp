#pragma once

#include <string>
#include <vector>

namespace frieze {

/// One row of the `verify-paper` table: a named exact check against the
/// published worked examples for these rings.
struct ReferenceCheck {
    std::string name;
    bool passed;
    std::string detail;
};

std::vector<ReferenceCheck> run_reference_checks();

}  // namespace frieze
