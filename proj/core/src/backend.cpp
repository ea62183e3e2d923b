#include "susie/backend.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include <nlohmann/json.hpp>

namespace susie {

namespace {

using json = nlohmann::json;

void ignore_sigpipe_once() {
  static const bool done = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)done;
}

}  // namespace

const char* to_string(BackendErrorKind kind) {
  switch (kind) {
    case BackendErrorKind::Crashed: return "backend-crashed";
    case BackendErrorKind::Timeout: return "backend-timeout";
    case BackendErrorKind::Protocol: return "protocol-violation";
  }
  return "unknown";
}

ExternalBackend::ExternalBackend(std::string command,
                                 std::chrono::milliseconds request_timeout)
    : command_(std::move(command)), timeout_(request_timeout) {
  ignore_sigpipe_once();

  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0 || ::pipe(from_child) != 0)
    throw BackendError(BackendErrorKind::Crashed, "pipe() failed");

  const int pid = ::fork();
  if (pid < 0) throw BackendError(BackendErrorKind::Crashed, "fork() failed");
  if (pid == 0) {
    // Own process group so shutdown() can signal the whole backend tree,
    // including anything the shell wrapper spawns.
    ::setpgid(0, 0);
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    // Drop every inherited descriptor beyond stdio; otherwise a backend
    // holds open pipes belonging to the host process or sibling backends.
#if defined(__linux__) && defined(__GLIBC__) && __GLIBC_PREREQ(2, 34)
    if (::close_range(3u, ~0u, 0) != 0)
#endif
    {
      for (int fd = 3; fd < 4096; ++fd) ::close(fd);
    }
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), nullptr);
    ::_exit(127);
  }

  ::setpgid(pid, pid);  // also from the parent side to close the race
  pid_ = pid;
  stdin_fd_ = to_child[1];
  stdout_fd_ = from_child[0];
  ::close(to_child[0]);
  ::close(from_child[1]);

  // Handshake: one ready line before the first request.
  std::string line;
  try {
    line = read_line(timeout_);
  } catch (const BackendError&) {
    shutdown();
    throw;
  }
  try {
    const auto msg = json::parse(line);
    if (msg.value("ready", false)) return;
  } catch (const json::exception&) {
  }
  shutdown();
  throw BackendError(BackendErrorKind::Protocol,
                     "bad handshake line: " + line);
}

ExternalBackend::~ExternalBackend() { shutdown(); }

void ExternalBackend::fail(BackendErrorKind kind, const std::string& what) {
  shutdown();
  throw BackendError(kind, what);
}

std::string ExternalBackend::read_line(std::chrono::milliseconds timeout) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
      std::string line = buffer_.substr(0, pos);
      buffer_.erase(0, pos + 1);
      return line;
    }
    const auto now = std::chrono::steady_clock::now();
    if (now >= deadline)
      fail(BackendErrorKind::Timeout, "no response within " +
                                          std::to_string(timeout.count()) + " ms");
    struct pollfd pfd {};
    pfd.fd = stdout_fd_;
    pfd.events = POLLIN;
    const auto remaining =
        std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now);
    const int rv = ::poll(&pfd, 1, static_cast<int>(remaining.count()) + 1);
    if (rv < 0) {
      if (errno == EINTR) continue;
      fail(BackendErrorKind::Crashed, std::string("poll: ") + std::strerror(errno));
    }
    if (rv == 0) continue;  // deadline re-checked above
    char chunk[4096];
    const ssize_t nread = ::read(stdout_fd_, chunk, sizeof(chunk));
    if (nread < 0) {
      if (errno == EINTR) continue;
      fail(BackendErrorKind::Crashed, std::string("read: ") + std::strerror(errno));
    }
    if (nread == 0)
      fail(BackendErrorKind::Crashed, "backend closed stdout");
    buffer_.append(chunk, static_cast<std::size_t>(nread));
  }
}

void ExternalBackend::write_line(const std::string& line) {
  std::string payload = line;
  payload.push_back('\n');
  std::size_t off = 0;
  while (off < payload.size()) {
    const ssize_t n = ::write(stdin_fd_, payload.data() + off, payload.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(BackendErrorKind::Crashed, std::string("write: ") + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
}

SummarizeResponse ExternalBackend::summarize(const SummarizeRequest& req) {
  if (pid_ <= 0)
    throw BackendError(BackendErrorKind::Crashed, "backend not running");

  json req_msg;
  req_msg["id"] = req.id;
  req_msg["source"] = join_tokens(req.source_tokens);
  req_msg["max_len"] = req.max_output_tokens;
  write_line(req_msg.dump());

  const std::string line = read_line(timeout_);
  json resp_msg;
  try {
    resp_msg = json::parse(line);
  } catch (const json::exception& e) {
    fail(BackendErrorKind::Protocol, std::string("bad response record: ") + e.what());
  }
  if (!resp_msg.contains("id") || !resp_msg.contains("summary") ||
      !resp_msg["id"].is_string() || !resp_msg["summary"].is_string())
    fail(BackendErrorKind::Protocol, "response missing id/summary");
  if (resp_msg["id"].get<std::string>() != req.id)
    fail(BackendErrorKind::Protocol,
         "id mismatch: sent '" + req.id + "', got '" +
             resp_msg["id"].get<std::string>() + "'");

  SummarizeResponse resp;
  resp.id = req.id;
  resp.summary_tokens = tokenize(resp_msg["summary"].get<std::string>());
  if (resp.summary_tokens.size() > req.max_output_tokens) {
    resp.summary_tokens.resize(req.max_output_tokens);
    ++overbudget_;
  }
  return resp;
}

void ExternalBackend::shutdown() noexcept {
  if (stdin_fd_ >= 0) {
    ::close(stdin_fd_);
    stdin_fd_ = -1;
  }
  if (stdout_fd_ >= 0) {
    ::close(stdout_fd_);
    stdout_fd_ = -1;
  }
  if (pid_ > 0) {
    // Give the child a moment to exit on EOF, then escalate. Signals go to
    // the process group: /bin/sh does not exec simple commands here, so the
    // backend proper is a grandchild a plain kill(pid_) would miss.
    int status = 0;
    for (int i = 0; i < 50; ++i) {
      const int rv = ::waitpid(pid_, &status, WNOHANG);
      if (rv == pid_ || rv < 0) {
        ::kill(-pid_, SIGKILL);  // sweep stragglers the shell left behind
        pid_ = -1;
        return;
      }
      ::usleep(2000);
    }
    ::kill(-pid_, SIGKILL);
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
  }
}

}  // namespace susie
