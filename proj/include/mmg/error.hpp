#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mmg {

// All library failures carry a short stable code ("EvenQ", "MalformedFile",
// ...) next to the human-readable message; the CLI prints the code and maps
// it to an exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

}  // namespace mmg
