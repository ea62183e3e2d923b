// Reference summarization backend speaking the line-delimited JSON protocol.
//
// Modes beyond the default "echo" exist to exercise client-side fault
// handling: a backend that exceeds its budget, crashes mid-stream, hangs,
// emits garbage, echoes the wrong request id, or never performs the
// handshake at all.

#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "susie/text.hpp"

using nlohmann::json;

namespace {

enum class Mode { Echo, Overbudget, Crash, Hang, Garbage, WrongId, Silent };

Mode parse_mode(const std::string& name) {
    if (name == "echo") return Mode::Echo;
    if (name == "overbudget") return Mode::Overbudget;
    if (name == "crash") return Mode::Crash;
    if (name == "hang") return Mode::Hang;
    if (name == "garbage") return Mode::Garbage;
    if (name == "wrong-id") return Mode::WrongId;
    if (name == "silent") return Mode::Silent;
    std::fprintf(stderr, "echo_backend: unknown mode '%s'\n", name.c_str());
    std::exit(2);
}

void emit(const json& j) {
    std::cout << j.dump() << "\n" << std::flush;
}

// Block until the client closes our stdin, discarding anything it sends.
// Keeps the faulty modes unresponsive without outliving their client.
void wait_for_stdin_eof() {
    char buf[256];
    for (;;) {
        const ssize_t n = ::read(STDIN_FILENO, buf, sizeof buf);
        if (n > 0) continue;
        if (n < 0 && errno == EINTR) continue;
        return;
    }
}

} // namespace

int main(int argc, char** argv) {
    Mode mode = Mode::Echo;
    int latency_ms = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--mode" && i + 1 < argc) {
            mode = parse_mode(argv[++i]);
        } else if (arg == "--latency-ms" && i + 1 < argc) {
            latency_ms = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "echo_backend: unknown argument '%s'\n", arg.c_str());
            return 2;
        }
    }

    if (mode == Mode::Silent) {
        // Never handshake; the client's deadline should fire.
        wait_for_stdin_eof();
        return 0;
    }

    emit(json{{"ready", true}});

    std::string line;
    bool first = true;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        json req;
        try {
            req = json::parse(line);
        } catch (const json::parse_error&) {
            std::fprintf(stderr, "echo_backend: bad request line\n");
            return 1;
        }
        const std::string id = req.value("id", "");
        const std::string source = req.value("source", "");
        const std::size_t max_len = req.value("max_len", std::size_t{120});

        if (latency_ms > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(latency_ms));
        }

        switch (mode) {
        case Mode::Crash:
            if (first) return 1;
            break;
        case Mode::Hang:
            wait_for_stdin_eof();
            return 0;
        case Mode::Garbage:
            std::cout << "not json at all\n" << std::flush;
            first = false;
            continue;
        case Mode::WrongId:
            emit(json{{"id", id + "-mismatch"}, {"summary", source}});
            first = false;
            continue;
        default:
            break;
        }

        std::vector<std::string> tokens = susie::tokenize(source);
        if (mode == Mode::Overbudget) {
            tokens.resize(200, "pad");
        } else if (tokens.size() > max_len) {
            tokens.resize(max_len);
        }
        emit(json{{"id", id}, {"summary", susie::join_tokens(tokens)}});
        first = false;
    }
    return 0;
}
