#include <doctest.h>

#include <atomic>
#include <chrono>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "susie/backend.hpp"
#include "susie/parallel.hpp"
#include "susie/text.hpp"

using namespace susie;
using namespace std::chrono_literals;

namespace {

const std::string kEcho = ECHO_BACKEND_PATH;

SummarizeRequest request(std::string id, const std::string& text,
                         std::size_t max_len = 120) {
    SummarizeRequest req;
    req.id = std::move(id);
    req.source_tokens = tokenize(text);
    req.max_output_tokens = max_len;
    return req;
}

}  // namespace

TEST_CASE("echo backend round-trips a request") {
    ExternalBackend backend(kEcho);
    CHECK(backend.name() == kEcho);
    CHECK(backend.alive());

    const auto req = request("r1", "alpha beta gamma delta", 3);
    const auto resp = backend.summarize(req);
    CHECK(resp.id == "r1");
    CHECK(resp.summary_tokens == tokenize("alpha beta gamma"));
    CHECK(backend.overbudget_responses() == 0);
}

TEST_CASE("sequential requests keep pairing ids") {
    ExternalBackend backend(kEcho);
    for (int i = 0; i < 50; ++i) {
        const std::string id = "seq-" + std::to_string(i);
        const std::string word = "tok" + std::to_string(i);
        const auto resp = backend.summarize(request(id, word + " filler", 1));
        CHECK(resp.id == id);
        REQUIRE(resp.summary_tokens.size() == 1);
        CHECK(resp.summary_tokens[0] == word);
    }
}

TEST_CASE("over-budget responses are truncated and counted") {
    ExternalBackend backend(kEcho + " --mode overbudget");
    const auto resp = backend.summarize(request("big", "seed tokens", 10));
    CHECK(resp.summary_tokens.size() == 10);
    CHECK(backend.overbudget_responses() == 1);
    CHECK(backend.alive());

    backend.summarize(request("big2", "seed tokens", 10));
    CHECK(backend.overbudget_responses() == 2);
}

TEST_CASE("crash surfaces as Crashed and the handle fails fast") {
    ExternalBackend backend(kEcho + " --mode crash");
    try {
        backend.summarize(request("c1", "will not come back"));
        FAIL("expected BackendError");
    } catch (const BackendError& e) {
        CHECK(e.kind() == BackendErrorKind::Crashed);
        CHECK(std::string(to_string(e.kind())) == "backend-crashed");
    }
    CHECK_FALSE(backend.alive());
    CHECK_THROWS_AS(backend.summarize(request("c2", "dead")), BackendError);
}

TEST_CASE("silent handshake times out") {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ExternalBackend backend(kEcho + " --mode silent", 300ms);
        FAIL("expected BackendError");
    } catch (const BackendError& e) {
        CHECK(e.kind() == BackendErrorKind::Timeout);
        CHECK(std::string(to_string(e.kind())) == "backend-timeout");
    }
    const auto elapsed = std::chrono::steady_clock::now() - t0;
    CHECK(elapsed < 5s);
}

TEST_CASE("hanging request times out") {
    ExternalBackend backend(kEcho + " --mode hang", 300ms);
    CHECK_THROWS_AS(backend.summarize(request("h1", "never answered")),
                    BackendError);
    CHECK_FALSE(backend.alive());
}

TEST_CASE("garbage output is a protocol violation") {
    ExternalBackend backend(kEcho + " --mode garbage");
    try {
        backend.summarize(request("g1", "text"));
        FAIL("expected BackendError");
    } catch (const BackendError& e) {
        CHECK(e.kind() == BackendErrorKind::Protocol);
        CHECK(std::string(to_string(e.kind())) == "protocol-violation");
    }
}

TEST_CASE("mismatched response id is a protocol violation") {
    ExternalBackend backend(kEcho + " --mode wrong-id");
    try {
        backend.summarize(request("w1", "text"));
        FAIL("expected BackendError");
    } catch (const BackendError& e) {
        CHECK(e.kind() == BackendErrorKind::Protocol);
    }
}

TEST_CASE("nonexistent command fails the handshake") {
    CHECK_THROWS_AS(ExternalBackend("/no/such/binary --flag", 500ms),
                    BackendError);
}

TEST_CASE("per-worker backends run a batch without deadlock") {
    std::vector<int> inputs(100);
    for (int i = 0; i < 100; ++i) inputs[i] = i;

    const auto results = parallel_map<std::string>(
        inputs.size(), 4,
        [&] { return std::make_unique<ExternalBackend>(kEcho); },
        [&](std::unique_ptr<ExternalBackend>& backend, std::size_t i) {
            const std::string id = "par-" + std::to_string(i);
            const auto resp = backend->summarize(
                request(id, "word" + std::to_string(i) + " tail tail", 1));
            if (resp.id != id) throw std::runtime_error("id mismatch");
            return resp.summary_tokens.at(0);
        });

    REQUIRE(results.size() == inputs.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        CHECK(results[i] == "word" + std::to_string(i));
    }
}
