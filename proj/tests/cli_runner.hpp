#pragma once

// Helper for driving the command-line binary from tests. The path comes
// from the DESCENT_FORGE_CLI environment variable, which ctest sets to
// the built target.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cli_test {

struct RunResult {
    int exit_code;
    std::string out;  // stdout only; stderr is dropped
};

inline std::string cli_path() {
    const char* p = std::getenv("DESCENT_FORGE_CLI");
    if (!p || !*p) {
        throw std::runtime_error(
            "DESCENT_FORGE_CLI is not set; run through ctest or export the binary path");
    }
    return p;
}

/// Runs `<env> <cli> <args>` through the shell and captures stdout.
inline RunResult run_with_env(const std::string& env, const std::string& args) {
    std::string cmd = (env.empty() ? "" : env + " ") + cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        throw std::runtime_error("popen failed for: " + cmd);
    }
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

inline RunResult run(const std::string& args) { return run_with_env("", args); }

}  // namespace cli_test
