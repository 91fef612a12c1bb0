#pragma once

#include "axial/algebra.hpp"

#include <string>
#include <vector>

namespace axial {

/// One verified identity: passed iff the residual is exactly zero.
struct VerificationEntry {
    std::string identity_id;
    bool passed = false;
    Element residual;
    std::string note; // optional detail ("vacuous (closure dim = 2)", failure reason, ...)
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;

    bool all_passed() const;
    std::size_t failure_count() const;

    /// Adds an entry whose outcome is decided by the residual.
    void add_residual(std::string id, Element residual, std::string note = "");
    void add_pass(std::string id, std::size_t dim, std::string note = "");
    void add_fail(std::string id, Element witness, std::string note = "");
    /// Appends another report, prefixing its identity ids.
    void append(const VerificationReport& other, const std::string& prefix = "");
};

} // namespace axial
