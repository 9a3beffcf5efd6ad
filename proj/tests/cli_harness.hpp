#pragma once

// Spawns the patchlab CLI for end-to-end tests. The binary path comes from
// the PATCHLAB_CLI environment variable (set by CTest) or argv for the
// acceptance runner.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace cli_harness {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
}

inline std::string cli_path_from_env() {
    const char* env = std::getenv("PATCHLAB_CLI");
    if (!env || !*env) {
        throw std::runtime_error("PATCHLAB_CLI is not set");
    }
    return env;
}

inline CliResult run(const std::string& cli, const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = "\"" + cli + "\" " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

inline std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace cli_harness
