#pragma once

#include "evauth/protocol.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace evauth {
namespace simnet {

// Local secrets the simulated user enrolls with. The stolen-device scenario
// runs a session attempt with anything other than kBiometric.
inline constexpr std::string_view kBiometric = "right-thumb";
inline constexpr std::string_view kPassword = "correct-horse";

// The world one scenario runs in: a provider, a station, one or more users,
// all drawing from a single seeded generator.
struct Universe {
    Rng rng = Rng::from_u64(0);
    identity::Registry reg;
    protocol::UspState usp;
    protocol::CsState cs;
    std::vector<protocol::UserWallet> wallets;

    static Universe create(std::uint64_t seed, const std::string& cs_lai,
                           std::size_t user_count = 1);
};

// One adversary decision, matched by session number and message kind. Every
// delivery passes through the rule list exactly once; the first match wins.
struct Rule {
    int session = 0;      // 1-based; 0 matches every session
    std::uint8_t tag = 0; // msg::kTagA1..kTagA6; 0 matches every message
    enum Kind { Pass, Drop, Tamper, Replay, Substitute } kind = Pass;
    std::size_t byte_index = 0; // Tamper: wire offset, reduced mod length
    int source_session = 0;     // Replay: 1-based earlier session to copy from
    std::function<Bytes(ByteSpan clean, Rng& adv)> craft; // Substitute
};

struct Scenario {
    std::uint64_t seed = 0;
    std::string cs_lai = "lai-0042";
    std::string user_lai; // empty: same as cs_lai
    int sessions = 1;
    int wrong_bio_session = 0; // that session starts with a bad biometric
    std::vector<Rule> rules;
    std::vector<std::pair<int, std::string>> expects; // session -> outcome
};

struct Transcript {
    std::vector<std::string> lines;
    std::vector<std::string> outcomes; // outcomes[i]: session i+1

    std::string text() const;         // one line per event, '\n'-terminated
    int msg_count(int session) const; // deliveries recorded for one session
};

// Outcome strings: "success", "<error-name>@<role>" with role one of
// user/cs/usp, or "dropped:<TAG>".

// Line-oriented script, one directive per line, # comments.
//   SEED <n>            SESSIONS <n>        LAI <text>      USERLAI <text>
//   SEND <s>            DROP <s> <TAG>      TAMPER <s> <TAG> <byte>
//   REPLAY <s> <TAG> <source>               BADBIO <s>
//   EXPECT <s> <outcome>
// Unknown verbs, unknown tags and out-of-range references raise config
// errors.
Scenario parse_script(const std::string& text);

// Runs every session in order. The transcript is byte-identical for equal
// scenarios. When universe_out is set, the final world state is copied there
// for inspection.
Transcript run_scenario(const Scenario& sc, Universe* universe_out = nullptr);

bool expectations_met(const Scenario& sc, const Transcript& t);

// Canned single-threat scenarios with their expected outcomes filled in:
// replay-a3, replay-a4, replay-a5, replay-a6, forge-location,
// impersonate-user, impersonate-cs, stolen-device.
std::vector<std::string> attack_types();
Scenario attack_scenario(const std::string& type, std::uint64_t seed);

} // namespace simnet
} // namespace evauth
