#pragma once

#include <stdexcept>
#include <string>

namespace ddhooks {

// Every contract violation in the library is an Error carrying a stable code
// string, so the CLI can serialize it as {code, message, context}.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::string context = {})
        : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    std::string code_;
    std::string context_;
};

#define DDHOOKS_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& message, std::string context = {})    \
            : Error(#Name, message, std::move(context)) {}                     \
    };

DDHOOKS_DEFINE_ERROR(InvalidPartition)
DDHOOKS_DEFINE_ERROR(NotDoubledDistinct)
DDHOOKS_DEFINE_ERROR(MalformedArray)
DDHOOKS_DEFINE_ERROR(CoreNotTCore)
DDHOOKS_DEFINE_ERROR(OrderMismatch)
DDHOOKS_DEFINE_ERROR(NonCancellation)
DDHOOKS_DEFINE_ERROR(DomainError)
DDHOOKS_DEFINE_ERROR(HypothesisViolated)
DDHOOKS_DEFINE_ERROR(ParityError)
DDHOOKS_DEFINE_ERROR(IncompatibleStatistic)
DDHOOKS_DEFINE_ERROR(DegenerateDistribution)
DDHOOKS_DEFINE_ERROR(InvalidArgument)

#undef DDHOOKS_DEFINE_ERROR

}  // namespace ddhooks
