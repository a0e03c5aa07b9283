#pragma once

#include <crimenews/corpus.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace testing_support {

namespace fs = std::filesystem;

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        path_ = fs::temp_directory_path() / ("crimenews-test-" + std::to_string(rng()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

inline void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    out << content;
}

inline std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline fs::path data_dir() { return CRIMENEWS_DATA_DIR; }
inline fs::path test_data_dir() { return CRIMENEWS_TEST_DATA_DIR; }

inline crimenews::Document make_doc(std::size_t id, std::vector<std::string> tokens,
                                    crimenews::Date day = {2014, 5, 3}) {
    crimenews::Document d;
    d.id = id;
    d.tokens = std::move(tokens);
    d.published_day = day;
    return d;
}

struct RunResult {
    int status = -1;
    std::string output; // stdout and stderr interleaved
};

/// Runs the CLI with a shell command line, capturing stdout and, unless
/// `stdout_only`, stderr too.
inline RunResult run_cli(const std::string& args, bool stdout_only = false) {
    const std::string cmd = std::string("\"") + CRIMENEWS_CLI + "\" " + args + (stdout_only ? " 2>/dev/null" : " 2>&1");
    RunResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace testing_support
