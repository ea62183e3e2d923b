#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "susie/summarize.hpp"

namespace susie {

enum class BackendErrorKind {
  Crashed,   // process exited / broken pipe
  Timeout,   // no response within the deadline
  Protocol,  // malformed record or id mismatch
};

class BackendError : public std::runtime_error {
 public:
  BackendError(BackendErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  BackendErrorKind kind() const { return kind_; }

 private:
  BackendErrorKind kind_;
};

const char* to_string(BackendErrorKind kind);

// Drives one summarizer child process over line-delimited JSON:
//
//   handshake:  backend emits {"ready": true} once, before any request
//   request:    {"id": "...", "source": "tok tok ...", "max_len": 120}
//   response:   {"id": "...", "summary": "tok tok ..."}
//
// stdin/stdout carry the protocol; stderr passes through. One request is
// in flight at a time; a handle may move between threads but must not be
// shared concurrently. Responses longer than max_len are truncated and
// counted in overbudget_responses(). After a BackendError the process is
// considered dead and every later call fails fast.
class ExternalBackend final : public Summarizer {
 public:
  // Starts `command` via /bin/sh -c and waits for the ready line.
  // Throws BackendError when the handshake fails.
  explicit ExternalBackend(std::string command,
                           std::chrono::milliseconds request_timeout =
                               std::chrono::milliseconds(120000));
  ~ExternalBackend() override;

  ExternalBackend(const ExternalBackend&) = delete;
  ExternalBackend& operator=(const ExternalBackend&) = delete;

  std::string name() const override { return command_; }
  SummarizeResponse summarize(const SummarizeRequest& req) override;

  std::uint64_t overbudget_responses() const { return overbudget_; }
  bool alive() const { return pid_ > 0; }

 private:
  std::string read_line(std::chrono::milliseconds timeout);
  void write_line(const std::string& line);
  void shutdown() noexcept;
  [[noreturn]] void fail(BackendErrorKind kind, const std::string& what);

  std::string command_;
  std::chrono::milliseconds timeout_;
  int pid_ = -1;
  int stdin_fd_ = -1;
  int stdout_fd_ = -1;
  std::string buffer_;
  std::uint64_t overbudget_ = 0;
};

}  // namespace susie
