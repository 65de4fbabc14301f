#pragma once

#include <stdexcept>
#include <string>

namespace evauth {

// One named code per failure path. Handlers throw exactly one of these;
// the simulator and CLI surface the stable kebab-case name.
enum class Err {
    Decode,
    LocalAuth,
    PeerAuth,
    UserAuth,
    Identity,
    Integrity,
    LocationForgery,
    Replay,
    Confidentiality,
    ProtocolOrder,
    Threshold,
    Input,
    ShareDecrypt,
    CorruptShare,
    ReRegistrationRequired,
    Capability,
    Precondition,
    Config,
    Storage,
    NotFound,
};

const char* err_name(Err e);

class ProtocolError : public std::runtime_error {
public:
    ProtocolError(Err code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] void fail(Err code, const std::string& what);

} // namespace evauth
