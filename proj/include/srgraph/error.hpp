#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srgraph {

enum class ErrorCode {
    IndexOutOfRange,
    LoopEdge,
    MissingLabels,
    DuplicateLabel,
    OrderTooLarge,
    NotBipartite,
    Disconnected,
    CompleteInput,
    EmptyOperand,
    TrivialOperand,
    UnknownVertex,
    InvalidParameter,
    LabelMismatch,
    MalformedInput,
    UnsupportedLongForm,
    GridTooLarge,
    UnknownTheorem,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can branch on the kind without parsing messages.
class GraphError : public std::runtime_error {
public:
    GraphError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace srgraph
