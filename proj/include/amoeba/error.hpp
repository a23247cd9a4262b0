#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace amoeba {

// Machine-readable failure codes. The CLI maps InvariantFailure to exit code 3
// and everything else to exit code 2.
enum class ErrorCode {
    ZeroInput,
    PlaceFieldMismatch,
    FieldMismatch,
    InvalidPlace,
    SyntaxError,
    RankMismatch,
    EmptyPolynomial,
    MonomialInput,
    DimensionMismatch,
    RankDeficient,
    ArchimedeanNotSupported,
    TermCountMismatch,
    DegenerateSlice,
    DependentDirection,
    ZeroCoordinate,
    MissingImagePresentation,
    FactorizationLimit,
    InvalidArgument,
    InvariantFailure,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// Parse failures carry the 0-based character offset of the offending token.
class SyntaxError : public Error {
  public:
    SyntaxError(std::size_t position, const std::string &message)
        : Error(ErrorCode::SyntaxError,
                message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

} // namespace amoeba
