#ifndef SCIMAP_ERROR_HPP
#define SCIMAP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace scimap {

enum class ErrorKind {
    MalformedFile,
    EmptyInput,
    ShapeError,
    BadRange,
    ZeroVector,
    DegenerateMatrix,
    BadK,
    BadFreq,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` lets callers
// (the CLI in particular) map them onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace scimap

#endif
