#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evauth/simnet.hpp"

#include "evauth/errors.hpp"
#include "evauth/storage.hpp"

#include <string>

using namespace evauth;
namespace sim = evauth::simnet;

namespace {

std::string msg_digest(const sim::Transcript& t, int session, const std::string& tag) {
    // h= token of the MSG line for (session, tag); empty when absent
    std::string prefix = "MSG " + std::to_string(session) + ' ' + tag + ' ';
    for (const std::string& l : t.lines) {
        if (l.rfind(prefix, 0) != 0) continue;
        auto pos = l.find("h=");
        return l.substr(pos + 2, 8);
    }
    return {};
}

} // namespace

TEST_CASE("clean sessions succeed and agree") {
    sim::Scenario sc;
    sc.seed = 7;
    sc.sessions = 2;
    sim::Transcript t = sim::run_scenario(sc);
    REQUIRE(t.outcomes.size() == 2);
    CHECK(t.outcomes[0] == "success");
    CHECK(t.outcomes[1] == "success");
    CHECK(t.msg_count(1) == 6);
    CHECK(t.msg_count(2) == 6);
}

TEST_CASE("identical scenarios give byte-identical transcripts") {
    sim::Scenario sc = sim::attack_scenario("replay-a4", 99);
    std::string one = sim::run_scenario(sc).text();
    std::string two = sim::run_scenario(sc).text();
    CHECK(one == two);

    sc.seed = 100;
    CHECK(sim::run_scenario(sc).text() != one);
}

TEST_CASE("a pass-everything adversary does not interfere") {
    sim::Scenario plain;
    plain.seed = 11;
    plain.sessions = 3;
    sim::Scenario passed = plain;
    sim::Rule pass_all;
    pass_all.kind = sim::Rule::Pass;
    passed.rules.push_back(pass_all);
    CHECK(sim::run_scenario(plain).text() == sim::run_scenario(passed).text());
}

TEST_CASE("every canned attack lands on its expected outcome") {
    for (const std::string& type : sim::attack_types()) {
        CAPTURE(type);
        sim::Scenario sc = sim::attack_scenario(type, 31337);
        sim::Transcript t = sim::run_scenario(sc);
        CHECK(sim::expectations_met(sc, t));
    }
    CHECK_THROWS_AS((void)sim::attack_scenario("meteor-strike", 1), ProtocolError);
}

TEST_CASE("stolen device emits nothing") {
    sim::Scenario sc = sim::attack_scenario("stolen-device", 5);
    sim::Transcript t = sim::run_scenario(sc);
    CHECK(t.outcomes[0] == "local-auth-error@user");
    CHECK(t.msg_count(1) == 0);
}

TEST_CASE("dropped delivery forces the spare-pseudonym path") {
    sim::Scenario sc = sim::parse_script("SEED 13\n"
                                         "SESSIONS 2\n"
                                         "DROP 1 A6\n"
                                         "EXPECT 1 dropped:A6\n"
                                         "EXPECT 2 success\n");
    sim::Universe after;
    sim::Transcript t = sim::run_scenario(sc, &after);
    CHECK(sim::expectations_met(sc, t));
    // the spare is consumed at both ends
    CHECK(after.wallets[0].shadow_used[0] == 1);
    CHECK(after.usp.users[0].shadow_used[0] == 1);
    CHECK(after.wallets[0].pdid == after.usp.users[0].pdid_cur);
}

TEST_CASE("replayed bytes equal the captured delivery") {
    sim::Scenario sc = sim::attack_scenario("replay-a4", 21);
    sim::Transcript t = sim::run_scenario(sc);
    std::string h1 = msg_digest(t, 1, "A4");
    std::string h2 = msg_digest(t, 2, "A4");
    REQUIRE(h1.size() == 8);
    CHECK(h1 == h2);
}

TEST_CASE("tampering any covered message never passes silently") {
    const char* tags[] = {"A1", "A2", "A3", "A4", "A5", "A6"};
    for (const char* tag : tags) {
        CAPTURE(tag);
        sim::Scenario sc;
        sc.seed = 17;
        sc.sessions = 1;
        sim::Rule r;
        r.session = 1;
        r.tag = sim::parse_script(std::string("TAMPER 1 ") + tag + " 9\n").rules[0].tag;
        r.kind = sim::Rule::Tamper;
        r.byte_index = 9;
        sc.rules.push_back(r);
        sim::Transcript t = sim::run_scenario(sc);
        CHECK(t.outcomes[0] != "success");
        CHECK(t.outcomes[0].find("-error@") != std::string::npos);
    }
}

TEST_CASE("script errors are config errors") {
    auto code = [](const std::string& text) {
        try {
            (void)sim::run_scenario(sim::parse_script(text));
        } catch (const ProtocolError& e) {
            return e.code();
        }
        return Err::NotFound;
    };
    CHECK(code("FROBNICATE 1\n") == Err::Config);
    CHECK(code("SESSIONS 1\nDROP 1 A9\n") == Err::Config);
    CHECK(code("SESSIONS 1\nDROP 4 A1\n") == Err::Config);
    CHECK(code("SESSIONS 2\nREPLAY 1 A4 1\n") == Err::Config);         // source not earlier
    CHECK(code("SESSIONS 2\nREPLAY 2 A6 1\nEXPECT 9 success\n") == Err::Config);
    CHECK(code("SESSIONS 0\n") == Err::Config);
    CHECK(code("TAMPER 1 A3\n") == Err::Config); // missing byte index
    // comments and blank lines are fine
    CHECK(code("# nothing but a comment\n\nSESSIONS 1\n") == Err::NotFound);
}

TEST_CASE("golden transcript") {
    sim::Scenario sc = sim::parse_script("SEED 2026\n"
                                         "SESSIONS 3\n"
                                         "DROP 1 A6\n"
                                         "REPLAY 3 A4 1\n"
                                         "EXPECT 1 dropped:A6\n"
                                         "EXPECT 2 success\n"
                                         "EXPECT 3 identity-error@usp\n");
    sim::Transcript t = sim::run_scenario(sc);
    CHECK(sim::expectations_met(sc, t));
    Bytes golden = read_file(std::string(EVAUTH_TEST_DATA_DIR) + "/golden_transcript.txt");
    CHECK(to_bytes(t.text()) == golden);
}
