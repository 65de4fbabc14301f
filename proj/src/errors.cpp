#include "evauth/errors.hpp"

namespace evauth {

const char* err_name(Err e) {
    switch (e) {
        case Err::Decode: return "decode-error";
        case Err::LocalAuth: return "local-auth-error";
        case Err::PeerAuth: return "peer-auth-error";
        case Err::UserAuth: return "user-auth-error";
        case Err::Identity: return "identity-error";
        case Err::Integrity: return "integrity-error";
        case Err::LocationForgery: return "location-forgery-error";
        case Err::Replay: return "replay-error";
        case Err::Confidentiality: return "confidentiality-error";
        case Err::ProtocolOrder: return "protocol-order-error";
        case Err::Threshold: return "threshold-error";
        case Err::Input: return "input-error";
        case Err::ShareDecrypt: return "share-decrypt-error";
        case Err::CorruptShare: return "corrupt-share-error";
        case Err::ReRegistrationRequired: return "re-registration-required";
        case Err::Capability: return "capability-error";
        case Err::Precondition: return "precondition-error";
        case Err::Config: return "config-error";
        case Err::Storage: return "storage-error";
        case Err::NotFound: return "not-found-error";
    }
    return "unknown-error";
}

void fail(Err code, const std::string& what) {
    throw ProtocolError(code, std::string(err_name(code)) + ": " + what);
}

} // namespace evauth
