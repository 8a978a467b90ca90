#pragma once

#include <stdexcept>
#include <string>

namespace qmax {

// Bad user input: malformed table files, duplicate values, out-of-range
// configuration. Maps to process exit code 2 in the CLI.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A runtime contract was broken (e.g. an unnormalized state reached
// measurement). Maps to process exit code 3 in the CLI.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qmax
