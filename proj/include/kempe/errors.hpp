#ifndef KEMPE_ERRORS_HPP
#define KEMPE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kempe {

inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed textual input (graph6, JSON shapes). Carries the byte offset
/// at which decoding failed, when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Greedy coloring ran out of colors at a vertex whose guarantee was violated.
class GreedyFailure : public std::runtime_error {
public:
    GreedyFailure(const std::string& message, int stuck_vertex)
        : std::runtime_error(message), stuck_vertex_(stuck_vertex) {}

    int stuck_vertex() const { return stuck_vertex_; }

private:
    int stuck_vertex_;
};

/// An enumeration exceeded its configured node cap. The oracle never reports
/// on a partial state space; it aborts with this instead.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(std::size_t cap)
        : std::runtime_error("state count exceeds configured cap of " + std::to_string(cap)),
          cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

}  // namespace kempe

#endif
