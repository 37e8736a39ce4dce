#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tworow {

/// Failure categories raised by the library. The CLI maps them onto exit codes.
enum class Errc {
    field_mismatch,
    division_by_zero,
    index_out_of_range,
    not_square,
    size_mismatch,
    degenerate_matrix,
    degenerate_graph,
    zero_entry_in_string,
    incomplete_track,
    invalid_track,
    size_bound,
    dimension_mismatch,
    singular_basis,
    invalid_argument,
    parse_error,
    assertion_failure,
};

inline std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::not_square: return "NotSquare";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::degenerate_matrix: return "DegenerateMatrix";
    case Errc::degenerate_graph: return "DegenerateGraph";
    case Errc::zero_entry_in_string: return "ZeroEntryInString";
    case Errc::incomplete_track: return "IncompleteTrack";
    case Errc::invalid_track: return "InvalidTrack";
    case Errc::size_bound: return "SizeBound";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::singular_basis: return "SingularBasis";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::assertion_failure: return "AssertionFailure";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace tworow
