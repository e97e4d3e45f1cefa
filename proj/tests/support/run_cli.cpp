#include "support/run_cli.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace weylcactus::testing {

namespace {

std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (char c : s)
    quoted += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return quoted + "'";
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  static std::atomic<int> counter{0};
  namespace fs = std::filesystem;
  std::string tag = std::to_string(::getpid()) + "-" + std::to_string(counter++);
  fs::path out_file = fs::temp_directory_path() / ("weylcactus-out-" + tag);
  fs::path err_file = fs::temp_directory_path() / ("weylcactus-err-" + tag);

  std::string command = shell_quote(CLI_BIN);
  for (const std::string& arg : args) command += " " + shell_quote(arg);
  command += " > " + shell_quote(out_file.string()) + " 2> " + shell_quote(err_file.string());

  int status = std::system(command.c_str());
  if (status < 0) throw std::runtime_error("failed to launch CLI");
  CliResult result{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_file),
                   slurp(err_file)};
  fs::remove(out_file);
  fs::remove(err_file);
  return result;
}

}  // namespace weylcactus::testing
