#ifndef CHAINLAB_ERRORS_HPP
#define CHAINLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainlab {

// Exit-code buckets used by the CLI. Keep in sync with --help text.
enum class ErrorCode : int {
    Ok = 0,
    Parse = 2,
    NumericalResidual = 3,
    TheoremViolation = 4,
    CapExceeded = 5,
    Domain = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

struct ClosureCapExceeded : Error {
    explicit ClosureCapExceeded(const std::string& what) : Error(ErrorCode::CapExceeded, what) {}
};

struct NotAGroup : Error {
    explicit NotAGroup(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& what) : Error(ErrorCode::NumericalResidual, what) {}
};

struct NumericalResidual : Error {
    explicit NumericalResidual(const std::string& what) : Error(ErrorCode::NumericalResidual, what) {}
};

struct NotCentral : Error {
    explicit NotCentral(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct WellDefinednessViolation : Error {
    explicit WellDefinednessViolation(const std::string& what) : Error(ErrorCode::TheoremViolation, what) {}
};

struct TheoremViolation : Error {
    explicit TheoremViolation(const std::string& what) : Error(ErrorCode::TheoremViolation, what) {}
};

struct FamilyMismatch : Error {
    explicit FamilyMismatch(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& what) : Error(ErrorCode::TheoremViolation, what) {}
};

struct UnknownIrrep : Error {
    explicit UnknownIrrep(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct NotUnitary : Error {
    explicit NotUnitary(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct NonAbelianGroup : Error {
    explicit NonAbelianGroup(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

}  // namespace chainlab

#endif
