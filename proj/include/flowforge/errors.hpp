#pragma once

#include <stdexcept>
#include <string>

namespace flowforge {

// Unrecoverable problem with input data (missing file, bad header,
// ambiguous join key). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A pipeline stage produced nothing to work with (no events after
// filtering, an empty cohort). The CLI maps this to exit code 3.
class EmptyResultError : public std::runtime_error {
public:
    explicit EmptyResultError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flowforge
