#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treepat {

// Raised when a textual literal (word set, tree, colored tree, permutation,
// report file) is malformed.  `offset` is the byte position of the problem.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace treepat
