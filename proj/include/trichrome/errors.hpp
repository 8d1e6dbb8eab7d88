#pragma once

#include <stdexcept>
#include <string>

namespace trichrome {

// Input exceeds a documented solver or representation budget.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external data (graph6, certificate JSON).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}

    std::size_t offset;
};

} // namespace trichrome
