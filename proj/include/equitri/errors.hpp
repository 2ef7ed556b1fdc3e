#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace equitri {

// Base for all library errors; `code` is the machine-readable identifier
// surfaced in CLI error payloads.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& message)
        : Error("degenerate_input", message) {}
};

struct NotACubic : Error {
    explicit NotACubic(const std::string& message)
        : Error("not_a_cubic", message) {}
};

struct DiscriminantPositive : Error {
    explicit DiscriminantPositive(const std::string& message)
        : Error("discriminant_positive", message) {}
};

struct EmptyScene : Error {
    explicit EmptyScene(const std::string& message)
        : Error("empty_scene", message) {}
};

// Signals a geometry invariant that cannot fail on valid inputs
// (e.g. intersecting two parallel lines).
struct InternalError : Error {
    explicit InternalError(const std::string& message)
        : Error("internal_error", message) {}
};

}  // namespace equitri
