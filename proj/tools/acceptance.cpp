#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "surfdyn/verify/suite.hpp"

#ifndef SURFDYN_CLI_PATH
#define SURFDYN_CLI_PATH "surfdyn"
#endif

namespace {

surfdyn::verify::CheckResult full_verify_run() {
  surfdyn::verify::CheckResult r{"9 full verify suite under 2 minutes", false, {}, 0.0};
  const std::string cmd = std::string("\"") + SURFDYN_CLI_PATH + "\" verify > /dev/null 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = status != -1 && WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream os;
  os << "exit code " << code << " after " << std::fixed << std::setprecision(1) << r.seconds << " s";
  r.detail = os.str();
  r.passed = code == 0 && r.seconds < 120.0;
  return r;
}

}  // namespace

int main() {
  auto results = surfdyn::verify::acceptance_checks();
  results.push_back(full_verify_run());
  bool all = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::cout << "criterion " << i + 1 << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.detail
              << "]\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
