#pragma once

#include <stdexcept>
#include <cstddef>
#include <string>

namespace curvelat {

// Every failure raised by the library carries a stable kind name; the CLI
// prints it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CURVELAT_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& message) : Error(#Name, message) {} \
    };

CURVELAT_DEFINE_ERROR(InvalidBranch)
CURVELAT_DEFINE_ERROR(InvalidCurve)
CURVELAT_DEFINE_ERROR(InsufficientTruncation)
CURVELAT_DEFINE_ERROR(NonStabilizing)
CURVELAT_DEFINE_ERROR(ConsistencyError)
CURVELAT_DEFINE_ERROR(OutOfBox)
CURVELAT_DEFINE_ERROR(PolynomialityViolation)
CURVELAT_DEFINE_ERROR(SupportViolation)
CURVELAT_DEFINE_ERROR(BoxTooSmall)
CURVELAT_DEFINE_ERROR(UnclassifiablePattern)
CURVELAT_DEFINE_ERROR(SchemaError)

#undef CURVELAT_DEFINE_ERROR

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error("ParseError", message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace curvelat
