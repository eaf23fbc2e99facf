#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace switchsde {

/// Exception carrying a stable module-qualified code ("markov.Reducible",
/// "bem.NoConvergence", ...) alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    [[nodiscard]] const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace switchsde
