#pragma once

#include <stdexcept>
#include <string>

namespace axial {

/// Raised for malformed user input: bad files, dimension mismatches,
/// excluded parameter values, non-axis arguments to axis-only operations.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace axial
