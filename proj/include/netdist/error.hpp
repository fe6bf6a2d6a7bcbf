#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netdist {

/// Malformed input file. `row()` is the 1-based line number, 0 when the
/// failure is not tied to a single line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t row = 0)
        : std::runtime_error(row ? what + " (line " + std::to_string(row) + ")" : what),
          row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// A numerical routine hit a state that exact arithmetic rules out
/// (non-convergence, singular system, negative affinity).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace netdist
