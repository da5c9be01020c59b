#include "tapn/error.h"

namespace tapn {

const char* to_string(NetErrorKind kind) {
    switch (kind) {
    case NetErrorKind::InhibitorNotZeroInfinity: return "InhibitorNotZeroInfinity";
    case NetErrorKind::InhibitorOnOutputArc: return "InhibitorOnOutputArc";
    case NetErrorKind::UnpairedTransportArc: return "UnpairedTransportArc";
    case NetErrorKind::DuplicateTransportGroup: return "DuplicateTransportGroup";
    case NetErrorKind::InvariantExcludesZero: return "InvariantExcludesZero";
    case NetErrorKind::DanglingArcEndpoint: return "DanglingArcEndpoint";
    case NetErrorKind::DuplicateArc: return "DuplicateArc";
    case NetErrorKind::DuplicateName: return "DuplicateName";
    case NetErrorKind::ConstantTooLarge: return "ConstantTooLarge";
    case NetErrorKind::KTooSmall: return "KTooSmall";
    }
    return "NetError";
}

std::string ParseError::format(const std::string& what, int line, int column) {
    if (line <= 0) return what + " (column " + std::to_string(column) + ")";
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
}

} // namespace tapn
