#pragma once

#include <stdexcept>
#include <string>

namespace ja {

// Error taxonomy mirrors the CLI exit codes: input_error -> 2,
// cap_exceeded -> 3, precondition_error -> 4.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t position)
        : error(msg + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class input_error : public error {
public:
    using error::error;
};

class cap_exceeded : public error {
public:
    using error::error;
};

class precondition_error : public error {
public:
    using error::error;
};

} // namespace ja
