#pragma once

#include <stdexcept>
#include <string>

namespace sr {

enum class errc {
    empty_input,
    dimension_out_of_range,
    empty_selection,
    not_a_face,
    degenerate_complex,
    not_cm,
    malformed_sequence,
    not_a_matroid,
    not_gorenstein_star,
    wrong_dimension,
    parameter_out_of_range,
    parse_error,
    overflow,
    internal,
};

/// Every failure the library reports carries one of the errc codes above,
/// so callers can branch on the condition instead of matching message text.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_input: return "EmptyInput";
    case errc::dimension_out_of_range: return "DimensionOutOfRange";
    case errc::empty_selection: return "EmptySelection";
    case errc::not_a_face: return "NotAFace";
    case errc::degenerate_complex: return "DegenerateComplex";
    case errc::not_cm: return "NotCM";
    case errc::malformed_sequence: return "MalformedSequence";
    case errc::not_a_matroid: return "NotAMatroid";
    case errc::not_gorenstein_star: return "NotGorensteinStar";
    case errc::wrong_dimension: return "WrongDimension";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::parse_error: return "ParseError";
    case errc::overflow: return "Overflow";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, std::string(errc_name(code)) + ": " + msg);
}

} // namespace sr
