#ifndef DARBOUX_ERRORS_HPP
#define DARBOUX_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace darboux {

// Base for all domain-level failures. `code()` is the stable machine-readable
// name used by the CLI error JSON; `index()` locates the offending step when
// one exists.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message,
                std::optional<long> index = std::nullopt)
        : std::runtime_error(message), code_(std::move(code)), index_(index) {}

    const std::string& code() const { return code_; }
    std::optional<long> index() const { return index_; }

private:
    std::string code_;
    std::optional<long> index_;
};

#define DARBOUX_DEFINE_ERROR(Name)                                         \
    class Name : public DomainError {                                      \
    public:                                                                \
        explicit Name(const std::string& message,                          \
                      std::optional<long> index = std::nullopt)            \
            : DomainError(#Name, message, index) {}                        \
    }

DARBOUX_DEFINE_ERROR(InsufficientMoments);
DARBOUX_DEFINE_ERROR(InsufficientDepth);
DARBOUX_DEFINE_ERROR(AllZeroPrefix);
DARBOUX_DEFINE_ERROR(FloatAmbiguous);
DARBOUX_DEFINE_ERROR(GapExceedsTwo);
DARBOUX_DEFINE_ERROR(RationalTermination);
DARBOUX_DEFINE_ERROR(SingularHankel);
DARBOUX_DEFINE_ERROR(ZeroDenominator);
DARBOUX_DEFINE_ERROR(ZeroParameter);
DARBOUX_DEFINE_ERROR(DegenerateDenominator);
DARBOUX_DEFINE_ERROR(ShapeMismatch);
DARBOUX_DEFINE_ERROR(NonPositiveC);

#undef DARBOUX_DEFINE_ERROR

}  // namespace darboux

#endif
