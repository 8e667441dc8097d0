#pragma once

#include <stdexcept>
#include <string>

namespace sw {

// Base for every failure that reflects the mathematical input rather than misuse of the API.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what, std::string code = "DomainError")
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DegenerateRoots : DomainError {
    explicit DegenerateRoots(const std::string& w) : DomainError(w, "DegenerateRoots") {}
};
struct InvalidBranch : DomainError {
    explicit InvalidBranch(const std::string& w) : DomainError(w, "InvalidBranch") {}
};
struct NotRealizable : DomainError {
    explicit NotRealizable(const std::string& w) : DomainError(w, "NotRealizable") {}
};
struct Inconsistent : DomainError {
    explicit Inconsistent(const std::string& w) : DomainError(w, "Inconsistent") {}
};
struct InvalidShift : DomainError {
    explicit InvalidShift(const std::string& w) : DomainError(w, "InvalidShift") {}
};

} // namespace sw
