#pragma once

#include <stdexcept>
#include <string>

namespace vbplab {

// Malformed or out-of-contract input. CLI exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact oracle was asked to run above its configured size limit. CLI exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An online participant (algorithm or adversary) broke the event protocol.
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_input(bool cond, const std::string& msg)
{
    if (!cond)
        throw InputError(msg);
}

inline void require_limit(std::size_t size, std::size_t limit, const char* what)
{
    if (size > limit)
        throw ResourceLimitError(std::string(what) + ": size " + std::to_string(size) +
                                 " exceeds exact-search limit " + std::to_string(limit));
}

} // namespace vbplab
