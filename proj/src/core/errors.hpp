#pragma once

#include <stdexcept>
#include <string>

namespace magnon {

enum class ErrorCode {
    parameter,
    resource,
    degenerate_state,
    no_root,
    misclassified_root,
    not_translation_invariant,
};

/// Exception carrying an ErrorCode; the C API maps it onto mg_status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorCode::parameter, what);
}

}  // namespace magnon
