#include "oracle.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstring>

#include "error.hpp"

namespace ahg::oracle {

Client::Client(const std::string& command) : cmd_(command) {
  int in_pipe[2];   // parent -> child
  int out_pipe[2];  // child -> parent
  if (pipe(in_pipe) != 0 || pipe(out_pipe) != 0) fail(Errc::io, "pipe() failed");
  pid_t pid = fork();
  if (pid < 0) fail(Errc::io, "fork() failed");
  if (pid == 0) {
    dup2(in_pipe[0], STDIN_FILENO);
    dup2(out_pipe[1], STDOUT_FILENO);
    close(in_pipe[0]);
    close(in_pipe[1]);
    close(out_pipe[0]);
    close(out_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in_pipe[0]);
  close(out_pipe[1]);
  child_pid_ = pid;
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
}

Client::~Client() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (child_pid_ > 0) {
    int status = 0;
    waitpid(child_pid_, &status, 0);
  }
}

std::string Client::query(const std::string& request_line) {
  std::string line = request_line;
  line.push_back('\n');
  size_t off = 0;
  while (off < line.size()) {
    ssize_t n = write(to_child_, line.data() + off, line.size() - off);
    if (n <= 0) fail(Errc::io, "oracle subprocess is not accepting requests");
    off += static_cast<size_t>(n);
  }
  while (true) {
    size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string resp = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      return resp;
    }
    char chunk[4096];
    ssize_t n = read(from_child_, chunk, sizeof chunk);
    if (n <= 0) fail(Errc::io, "oracle subprocess closed its output");
    buffer_.append(chunk, static_cast<size_t>(n));
  }
}

}  // namespace ahg::oracle
