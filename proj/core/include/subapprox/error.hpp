#pragma once

#include <stdexcept>
#include <string>

namespace subapprox {

/// Raised when an input violates a geometric precondition (rank, Plücker
/// relation, singular chart, ...). Messages are short and stable so that
/// callers and tests can match on them.
class GeometryError : public std::invalid_argument {
public:
    explicit GeometryError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace subapprox
