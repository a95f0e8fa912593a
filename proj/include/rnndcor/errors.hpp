#ifndef RNNDCOR_ERRORS_HPP
#define RNNDCOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rnndcor {

/// Coarse failure category. Drives exit codes and C API status codes:
/// Argument/Data/Io are caller problems, Numeric/Internal are runtime
/// failures of the computation itself.
enum class ErrorKind {
    Argument,
    Data,
    Io,
    Numeric,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

struct StationarityError : Error {
    explicit StationarityError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct InvalidLengthError : Error {
    explicit InvalidLengthError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct GarchConstraintError : Error {
    explicit GarchConstraintError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct NumericalInstabilityError : Error {
    explicit NumericalInstabilityError(const std::string &msg)
        : Error(ErrorKind::Numeric, msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string &msg)
        : Error(ErrorKind::Data, msg) {}
};

struct DegenerateSeriesError : Error {
    explicit DegenerateSeriesError(const std::string &msg)
        : Error(ErrorKind::Data, msg) {}
};

struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string &msg)
        : Error(ErrorKind::Data, msg) {}
};

struct NonFiniteInputError : Error {
    explicit NonFiniteInputError(const std::string &msg)
        : Error(ErrorKind::Data, msg) {}
};

struct InvalidDistanceMatrixError : Error {
    explicit InvalidDistanceMatrixError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct SampleCountMismatchError : Error {
    explicit SampleCountMismatchError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct TrainingDivergedError : Error {
    explicit TrainingDivergedError(const std::string &msg)
        : Error(ErrorKind::Numeric, msg) {}
};

struct DegenerateProfileError : Error {
    explicit DegenerateProfileError(const std::string &msg)
        : Error(ErrorKind::Data, msg) {}
};

struct DegenerateTargetsError : Error {
    explicit DegenerateTargetsError(const std::string &msg)
        : Error(ErrorKind::Data, msg) {}
};

struct AlignmentError : Error {
    explicit AlignmentError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string &msg)
        : Error(ErrorKind::Argument, msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string &msg) : Error(ErrorKind::Io, msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string &msg)
        : Error(ErrorKind::Internal, msg) {}
};

} // namespace rnndcor

#endif
