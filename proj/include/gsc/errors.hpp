#pragma once

#include <stdexcept>
#include <string>

namespace gsc {

// Thrown when a request exceeds a hard implementation limit (exit code 2 in the CLI).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input; offset is a byte offset into the input (exit code 3).
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), offset(0) {}
};

// A codeword that decodes to no structure of the given size (exit code 4).
struct InvalidCodewordError : std::runtime_error {
    explicit InvalidCodewordError(const std::string& what) : std::runtime_error(what) {}
};

// A report file whose schema the consumer does not understand (exit code 5).
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsc
