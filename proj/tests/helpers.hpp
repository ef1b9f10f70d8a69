#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "graphbench/graph.hpp"

namespace graphbench::test {

/// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / ("graphbench_" + tag + "_" + std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        std::abort();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Path of the CLI binary: $GRAPHBENCH_CLI or the build-tree default.
inline std::string cli_path() {
    if (const char* env = std::getenv("GRAPHBENCH_CLI")) return env;
#ifdef GRAPHBENCH_CLI_DEFAULT
    return GRAPHBENCH_CLI_DEFAULT;
#else
    return "graphbench";
#endif
}

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

/// Runs a shell command, capturing combined output.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    std::string wrapped = command + " 2>&1";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

/// Path triangle with labels [0, 0, 1]: edges (0,1), (1,2), (0,2).
inline Graph triangle_graph() {
    return Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 1});
}

} // namespace graphbench::test
