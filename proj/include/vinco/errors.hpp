#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vinco {

// Thrown when an enumeration request exceeds the configured length cap.
struct CapExceeded : std::runtime_error {
    CapExceeded(int n, int cap)
        : std::runtime_error("length " + std::to_string(n) +
                             " exceeds the enumeration cap " + std::to_string(cap) +
                             " (raise it with --cap-override or VINCO_CAP)") {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

}  // namespace vinco
