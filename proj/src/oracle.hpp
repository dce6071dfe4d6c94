#pragma once

#include <string>

namespace ahg::oracle {

// Line-oriented subprocess client for an external existential-reals solver.
// One JSON request per line on stdin, one JSON response per line on stdout.
class Client {
 public:
  explicit Client(const std::string& command);
  ~Client();
  Client(const Client&) = delete;
  Client& operator=(const Client&) = delete;

  // Sends one request line, returns the response line (without newline).
  std::string query(const std::string& request_line);

  const std::string& command() const { return cmd_; }

 private:
  std::string cmd_;
  int child_pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace ahg::oracle
