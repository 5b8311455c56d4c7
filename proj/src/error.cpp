#include "scimap/error.hpp"

namespace scimap {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::MalformedFile: return "MalformedFile";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateMatrix: return "DegenerateMatrix";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::BadFreq: return "BadFreq";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

} // namespace scimap
