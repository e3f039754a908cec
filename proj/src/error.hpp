#pragma once

#include <stdexcept>
#include <string>

namespace divkit {

enum class ErrorCode {
    invalid_argument,  // malformed or inconsistent input values
    label_mismatch,    // label sets of two objects do not line up
    parse_error,       // unreadable JSON / unknown generator name
    constraint,        // domain constraint violated (e.g. FGM theta outside [-1,1])
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace divkit
