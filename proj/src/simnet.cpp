#include "evauth/simnet.hpp"

#include "evauth/errors.hpp"
#include "evauth/hash.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace evauth {
namespace simnet {

namespace {

// Unwinds the rest of a session once its outcome is decided.
struct SessionOver {
    std::string outcome;
};

int tag_slot(std::uint8_t tag) { return static_cast<int>(tag) - msg::kTagA1; }

const char* hop_from(std::uint8_t tag) {
    switch (tag) {
    case msg::kTagA1:
    case msg::kTagA3: return "user";
    case msg::kTagA2:
    case msg::kTagA6: return "cs";
    case msg::kTagA4: return "cs";
    case msg::kTagA5: return "usp";
    default: return "?";
    }
}

const char* hop_to(std::uint8_t tag) {
    switch (tag) {
    case msg::kTagA1:
    case msg::kTagA3: return "cs";
    case msg::kTagA2:
    case msg::kTagA6: return "user";
    case msg::kTagA4: return "usp";
    case msg::kTagA5: return "cs";
    default: return "?";
    }
}

std::string short_hash(ByteSpan m) {
    Digest d = hash_parts(m);
    return to_hex(ByteSpan(d.data(), 4));
}

std::string counters_line(int session, const char* role, const OpCounters& c) {
    std::ostringstream os;
    os << "COUNTERS " << session << ' ' << role << " construct=" << c.construct_total()
       << " check=" << c.check_total() << " sign=" << c.sign_ops << " verify=" << c.verify_ops
       << " prove=" << c.prove_ops << " proofcheck=" << c.proof_check_ops
       << " wrap=" << c.wrap_ops << " seal=" << c.seal_ops;
    return os.str();
}

std::uint8_t parse_tag(const std::string& word) {
    if (word.size() == 2 && word[0] == 'A' && word[1] >= '1' && word[1] <= '6')
        return static_cast<std::uint8_t>(msg::kTagA1 + (word[1] - '1'));
    fail(Err::Config, "unknown message tag '" + word + "'");
}

void validate(const Scenario& sc) {
    if (sc.sessions < 1) fail(Err::Config, "scenario needs at least one session");
    for (const Rule& r : sc.rules) {
        if (r.session < 0 || r.session > sc.sessions)
            fail(Err::Config, "rule references undefined session");
        if (r.tag != 0 && (r.tag < msg::kTagA1 || r.tag > msg::kTagA6))
            fail(Err::Config, "rule references unknown message tag");
        if (r.kind == Rule::Replay) {
            if (r.session == 0) fail(Err::Config, "replay rule needs a concrete session");
            if (r.source_session < 1 || r.source_session >= r.session)
                fail(Err::Config, "replay source must be an earlier session");
        }
        if (r.kind == Rule::Substitute && !r.craft)
            fail(Err::Config, "substitute rule without crafted bytes");
    }
    for (const auto& [s, o] : sc.expects) {
        if (s < 1 || s > sc.sessions) fail(Err::Config, "expectation references undefined session");
        (void)o;
    }
    if (sc.wrong_bio_session < 0 || sc.wrong_bio_session > sc.sessions)
        fail(Err::Config, "bad-biometric step references undefined session");
}

} // namespace

Universe Universe::create(std::uint64_t seed, const std::string& cs_lai,
                          std::size_t user_count) {
    Universe u;
    u.rng = Rng::from_u64(seed);
    u.usp = protocol::usp_init(u.rng, u.reg);

    for (std::size_t i = 0; i < user_count; ++i) {
        KeyPair keys = keygen(u.rng);
        msg::RegisterRequest req;
        req.role = std::string(msg::kRoleUser);
        req.pub = keys.pub;
        req.delta = protocol::user_delta(kBiometric, kPassword);
        u.wallets.push_back(protocol::user_enroll(
            protocol::usp_register(u.usp, u.reg, req, u.rng), keys, kBiometric, kPassword));
    }

    KeyPair keys = keygen(u.rng);
    msg::RegisterRequest req;
    req.role = std::string(msg::kRoleStation);
    req.pub = keys.pub;
    req.lai = cs_lai;
    u.cs = protocol::station_enroll(protocol::usp_register(u.usp, u.reg, req, u.rng), keys,
                                    cs_lai);
    return u;
}

std::string Transcript::text() const {
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

int Transcript::msg_count(int session) const {
    int n = 0;
    std::string want = std::to_string(session);
    for (const std::string& l : lines) {
        if (l.rfind("MSG ", 0) != 0) continue;
        std::istringstream is(l);
        std::string verb, s;
        is >> verb >> s;
        if (s == want) ++n;
    }
    return n;
}

namespace {

class Engine {
public:
    Engine(const Scenario& sc, Universe& u)
        : sc_(sc), u_(u), adv_(Rng::from_u64(sc.seed ^ 0x6164765551ULL)),
          captures_(static_cast<std::size_t>(sc.sessions)) {}

    Transcript run() {
        std::ostringstream head;
        head << "SCENARIO seed=" << sc_.seed << " sessions=" << sc_.sessions << " cs-lai="
             << sc_.cs_lai << " user-lai=" << (sc_.user_lai.empty() ? sc_.cs_lai : sc_.user_lai);
        t_.lines.push_back(head.str());
        for (int s = 1; s <= sc_.sessions; ++s) run_session(s);
        for (const auto& [s, want] : sc_.expects) {
            std::string got = t_.outcomes[static_cast<std::size_t>(s) - 1];
            t_.lines.push_back("EXPECT " + std::to_string(s) + ' ' + want +
                               (got == want ? " OK" : " MISMATCH got=" + got));
        }
        return std::move(t_);
    }

private:
    void run_session(int s) {
        const std::string lai = sc_.user_lai.empty() ? sc_.cs_lai : sc_.user_lai;
        t_.lines.push_back("SESSION " + std::to_string(s) + " BEGIN lai=" + lai);

        OpCounters user_c, cs_c, usp_c;
        std::string outcome = run_exchange(s, lai, user_c, cs_c, usp_c);

        t_.lines.push_back("OUTCOME " + std::to_string(s) + ' ' + outcome);
        t_.lines.push_back(counters_line(s, "user", user_c));
        t_.lines.push_back(counters_line(s, "cs", cs_c));
        t_.lines.push_back(counters_line(s, "usp", usp_c));
        t_.outcomes.push_back(outcome);
    }

    std::string run_exchange(int s, const std::string& lai, OpCounters& user_c, OpCounters& cs_c,
                             OpCounters& usp_c) {
        std::optional<protocol::UserSession> us;
        std::optional<protocol::CsSession> ss;
        Bytes usp_sk;
        try {
            std::string_view bio = (s == sc_.wrong_bio_session) ? "intruder-thumb" : kBiometric;
            us.emplace(step("user", [&] {
                return protocol::UserSession::begin(u_.wallets[0], lai, bio, kPassword, u_.rng);
            }));
            ss.emplace(protocol::CsSession::begin(u_.cs, u_.rng));

            Bytes a1 = deliver(s, msg::kTagA1, step("user", [&] { return us->a1(); }));
            Bytes a2 = deliver(s, msg::kTagA2, step("cs", [&] { return ss->on_a1(a1); }));
            Bytes a3 = deliver(s, msg::kTagA3, step("user", [&] { return us->on_a2(a2); }));
            Bytes a4 = deliver(s, msg::kTagA4, step("cs", [&] { return ss->on_a3(a3); }));
            Bytes a5 = deliver(s, msg::kTagA5, step("usp", [&] {
                return protocol::usp_authorize(u_.usp, a4, u_.rng, &usp_c, {}, &usp_sk);
            }));
            Bytes a6 = deliver(s, msg::kTagA6, step("cs", [&] { return ss->on_a5(a5); }));
            step("user", [&] {
                us->finish(a6);
                return 0;
            });

            bool agreed = us->session_key() == ss->session_key() && us->session_key() == usp_sk;
            if (us) user_c = us->counters();
            if (ss) cs_c = ss->counters();
            return agreed ? "success" : "key-mismatch";
        } catch (const SessionOver& over) {
            if (us) user_c = us->counters();
            if (ss) cs_c = ss->counters();
            return over.outcome;
        }
    }

    template <typename F>
    auto step(const char* role, F&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const ProtocolError& e) {
            throw SessionOver{std::string(err_name(e.code())) + "@" + role};
        }
    }

    Bytes deliver(int session, std::uint8_t tag, Bytes m) {
        const Rule* rule = nullptr;
        for (const Rule& r : sc_.rules) {
            if ((r.session == 0 || r.session == session) && (r.tag == 0 || r.tag == tag)) {
                rule = &r;
                break;
            }
        }
        std::string marker;
        if (rule) {
            switch (rule->kind) {
            case Rule::Pass: break;
            case Rule::Drop:
                t_.lines.push_back(std::string("DROP ") + std::to_string(session) + ' ' +
                                   msg::tag_name(tag) + ' ' + hop_from(tag) + "->" + hop_to(tag));
                throw SessionOver{std::string("dropped:") + msg::tag_name(tag)};
            case Rule::Tamper: {
                std::size_t idx = rule->byte_index % m.size();
                m[idx] ^= 0x5A;
                marker = " TAMPER@" + std::to_string(idx);
                break;
            }
            case Rule::Replay: {
                const Bytes& src = captures_[static_cast<std::size_t>(rule->source_session) - 1]
                                            [static_cast<std::size_t>(tag_slot(tag))];
                if (src.empty())
                    fail(Err::Config, "replay source session never delivered that message");
                m = src;
                marker = " REPLAY<-" + std::to_string(rule->source_session);
                break;
            }
            case Rule::Substitute:
                m = rule->craft(m, adv_);
                marker = " SUBST";
                break;
            }
        }
        captures_[static_cast<std::size_t>(session) - 1][static_cast<std::size_t>(tag_slot(tag))] =
            m;
        std::ostringstream os;
        os << "MSG " << session << ' ' << msg::tag_name(tag) << ' ' << hop_from(tag) << "->"
           << hop_to(tag) << " len=" << m.size() << " h=" << short_hash(m) << marker;
        t_.lines.push_back(os.str());
        return m;
    }

    const Scenario& sc_;
    Universe& u_;
    Rng adv_;
    Transcript t_;
    std::vector<std::array<Bytes, 6>> captures_;
};

} // namespace

Transcript run_scenario(const Scenario& sc, Universe* universe_out) {
    validate(sc);
    Universe u = Universe::create(sc.seed, sc.cs_lai);
    Engine eng(sc, u);
    Transcript t = eng.run();
    if (universe_out) *universe_out = std::move(u);
    return t;
}

bool expectations_met(const Scenario& sc, const Transcript& t) {
    for (const auto& [s, want] : sc.expects) {
        if (s < 1 || static_cast<std::size_t>(s) > t.outcomes.size()) return false;
        if (t.outcomes[static_cast<std::size_t>(s) - 1] != want) return false;
    }
    return true;
}

Scenario parse_script(const std::string& text) {
    Scenario sc;
    bool have_sessions = false;
    int max_ref = 0;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string verb;
        if (!(is >> verb)) continue;
        auto want = [&](auto& v, const char* what) {
            if (!(is >> v))
                fail(Err::Config,
                     "line " + std::to_string(lineno) + ": missing or bad " + what);
        };
        if (verb == "SEED") {
            want(sc.seed, "seed");
        } else if (verb == "SESSIONS") {
            want(sc.sessions, "session count");
            have_sessions = true;
        } else if (verb == "LAI") {
            want(sc.cs_lai, "location");
        } else if (verb == "USERLAI") {
            want(sc.user_lai, "location");
        } else if (verb == "SEND") {
            int s = 0;
            want(s, "session");
            max_ref = std::max(max_ref, s);
        } else if (verb == "DROP" || verb == "TAMPER" || verb == "REPLAY") {
            Rule r;
            want(r.session, "session");
            std::string tagword;
            want(tagword, "message tag");
            r.tag = parse_tag(tagword);
            if (verb == "DROP") {
                r.kind = Rule::Drop;
            } else if (verb == "TAMPER") {
                r.kind = Rule::Tamper;
                want(r.byte_index, "byte index");
            } else {
                r.kind = Rule::Replay;
                want(r.source_session, "source session");
            }
            max_ref = std::max(max_ref, r.session);
            sc.rules.push_back(std::move(r));
        } else if (verb == "BADBIO") {
            want(sc.wrong_bio_session, "session");
            max_ref = std::max(max_ref, sc.wrong_bio_session);
        } else if (verb == "EXPECT") {
            int s = 0;
            std::string outcome;
            want(s, "session");
            want(outcome, "outcome");
            max_ref = std::max(max_ref, s);
            sc.expects.emplace_back(s, std::move(outcome));
        } else {
            fail(Err::Config, "line " + std::to_string(lineno) + ": unknown directive '" +
                                  verb + "'");
        }
    }
    if (!have_sessions) sc.sessions = std::max(1, max_ref);
    if (max_ref > sc.sessions) fail(Err::Config, "directive references undefined session");
    validate(sc);
    return sc;
}

std::vector<std::string> attack_types() {
    return {"replay-a3",        "replay-a4",     "replay-a5",      "replay-a6",
            "forge-location",   "impersonate-user", "impersonate-cs", "stolen-device"};
}

Scenario attack_scenario(const std::string& type, std::uint64_t seed) {
    Scenario sc;
    sc.seed = seed;

    auto replay = [&](std::uint8_t tag, const std::string& outcome) {
        sc.sessions = 2;
        Rule r;
        r.session = 2;
        r.tag = tag;
        r.kind = Rule::Replay;
        r.source_session = 1;
        sc.rules.push_back(std::move(r));
        sc.expects = {{1, "success"}, {2, outcome}};
    };

    if (type == "replay-a3") {
        // old proof message under a fresh session: the relay pseudonym no
        // longer matches the one inside the proof
        replay(msg::kTagA3, "integrity-error@usp");
    } else if (type == "replay-a4") {
        replay(msg::kTagA4, "replay-error@usp");
    } else if (type == "replay-a5") {
        replay(msg::kTagA5, "integrity-error@cs");
    } else if (type == "replay-a6") {
        replay(msg::kTagA6, "integrity-error@user");
    } else if (type == "forge-location") {
        sc.user_lai = "lai-9999";
        sc.expects = {{1, "location-forgery-error@usp"}};
    } else if (type == "impersonate-user") {
        // everything observable is kept; only the K_useri-dependent check
        // value is fabricated
        Rule r;
        r.session = 1;
        r.tag = msg::kTagA3;
        r.kind = Rule::Substitute;
        r.craft = [](ByteSpan clean, Rng& adv) {
            msg::CredentialProof a3 = msg::decode_credential_proof(clean);
            a3.v1 = adv.bytes(32);
            return msg::encode(a3);
        };
        sc.rules.push_back(std::move(r));
        sc.expects = {{1, "integrity-error@usp"}};
    } else if (type == "impersonate-cs") {
        Rule r;
        r.session = 1;
        r.tag = msg::kTagA4;
        r.kind = Rule::Substitute;
        r.craft = [](ByteSpan clean, Rng& adv) {
            msg::AuthRelay a4 = msg::decode_auth_relay(clean);
            a4.n_cs = adv.bytes(32);
            a4.v2 = adv.bytes(32); // needs K_CSj, which the adversary lacks
            return msg::encode(a4);
        };
        sc.rules.push_back(std::move(r));
        sc.expects = {{1, "integrity-error@usp"}};
    } else if (type == "stolen-device") {
        sc.wrong_bio_session = 1;
        sc.expects = {{1, "local-auth-error@user"}};
    } else {
        fail(Err::Config, "unknown attack type '" + type + "'");
    }
    return sc;
}

} // namespace simnet
} // namespace evauth
