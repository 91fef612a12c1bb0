#include "axial/report.hpp"

namespace axial {

bool VerificationReport::all_passed() const
{
    for (const auto& e : entries)
        if (!e.passed)
            return false;
    return true;
}

std::size_t VerificationReport::failure_count() const
{
    std::size_t n = 0;
    for (const auto& e : entries)
        if (!e.passed)
            ++n;
    return n;
}

void VerificationReport::add_residual(std::string id, Element residual, std::string note)
{
    bool ok = vec_is_zero(residual);
    entries.push_back({std::move(id), ok, std::move(residual), std::move(note)});
}

void VerificationReport::add_pass(std::string id, std::size_t dim, std::string note)
{
    entries.push_back({std::move(id), true, Element(dim, Rational(0)), std::move(note)});
}

void VerificationReport::add_fail(std::string id, Element witness, std::string note)
{
    entries.push_back({std::move(id), false, std::move(witness), std::move(note)});
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix)
{
    for (const auto& e : other.entries)
        entries.push_back({prefix + e.identity_id, e.passed, e.residual, e.note});
}

} // namespace axial
