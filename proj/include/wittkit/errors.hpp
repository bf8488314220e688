#pragma once

#include <stdexcept>
#include <string>

namespace wittkit {

// Input errors map to CLI exit code 2, computational ones to 3.
enum class ErrorCategory { Input, Computational };

class WittError : public std::runtime_error {
public:
    WittError(std::string kind, ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg.empty() ? kind : kind + ": " + msg),
          kind_(std::move(kind)), cat_(cat) {}
    const std::string& kind() const { return kind_; }
    ErrorCategory category() const { return cat_; }

private:
    std::string kind_;
    ErrorCategory cat_;
};

#define WITTKIT_DEFINE_ERROR(Name, Cat)                                        \
    struct Name : WittError {                                                  \
        explicit Name(const std::string& m = "")                               \
            : WittError(#Name, ErrorCategory::Cat, m) {}                       \
    };

WITTKIT_DEFINE_ERROR(ParseError, Input)
WITTKIT_DEFINE_ERROR(SingularMatrix, Computational)
WITTKIT_DEFINE_ERROR(NotInvertibleInNovikov, Computational)
WITTKIT_DEFINE_ERROR(SingularForm, Input)
WITTKIT_DEFINE_ERROR(EvenPrimeUnsupported, Input)
WITTKIT_DEFINE_ERROR(SearchSpaceTooLarge, Computational)
WITTKIT_DEFINE_ERROR(SingularOverFractionField, Input)
WITTKIT_DEFINE_ERROR(NotAnSLagrangian, Input)
WITTKIT_DEFINE_ERROR(NotTorsion, Input)
WITTKIT_DEFINE_ERROR(NotPTorsion, Input)
WITTKIT_DEFINE_ERROR(NotSelfConjugate, Input)
WITTKIT_DEFINE_ERROR(SingularSeifertForm, Input)
WITTKIT_DEFINE_ERROR(SingularAutometricForm, Input)
WITTKIT_DEFINE_ERROR(NotEInvariant, Input)
WITTKIT_DEFINE_ERROR(NotNearProjection, Input)
WITTKIT_DEFINE_ERROR(NotAKnotForm, Input)
WITTKIT_DEFINE_ERROR(SingularAtRoot, Input)
WITTKIT_DEFINE_ERROR(NotSymmetricCase, Input)
WITTKIT_DEFINE_ERROR(SignatureNotDivisibleBy8, Input)
WITTKIT_DEFINE_ERROR(MixedSymmetry, Input)
WITTKIT_DEFINE_ERROR(InternalError, Computational)

#undef WITTKIT_DEFINE_ERROR

}  // namespace wittkit
