#pragma once

#include <stdexcept>
#include <string>

namespace cyldom {

// Error categories that the CLI maps to distinct exit codes.
enum class ErrorKind {
    InputError,       // bad arguments, bad file contents
    Infeasible,       // instance too large for the requested method
    StitchFailure,    // rotation/witness search exhausted
    LongRunRefused,   // heavy computation attempted without --allow-long
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return Error(ErrorKind::InputError, what); }
inline Error infeasible_error(const std::string& what) { return Error(ErrorKind::Infeasible, what); }
inline Error stitch_error(const std::string& what) { return Error(ErrorKind::StitchFailure, what); }
inline Error long_run_refused(const std::string& what) { return Error(ErrorKind::LongRunRefused, what); }

} // namespace cyldom
