#pragma once

#include <stdexcept>
#include <string>

namespace stacky {

// Violated precondition of a library operation. The CLI maps these to
// exit code 2 with a machine-readable {code, message} object.
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

inline void require(bool cond, const char* code, const std::string& message) {
    if (!cond) throw precondition_error(code, message);
}

} // namespace stacky
