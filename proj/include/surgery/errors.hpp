#pragma once

#include <stdexcept>
#include <string>

namespace surgery {

// A precondition of a topological formula was violated (bad dimension,
// wrong shape, mismatched groups). Maps to CLI exit status 1.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed group-table input.
class TableError : public std::runtime_error {
public:
    explicit TableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace surgery
