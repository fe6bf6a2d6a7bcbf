#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

namespace netdist::testing {

/// Writes `content` to a fresh file under the temp directory.
inline std::filesystem::path temp_file(const std::string& content, const std::string& suffix = ".txt") {
    static std::atomic<int> counter{0};
    auto path = std::filesystem::temp_directory_path() /
                ("netdist_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + suffix);
    std::ofstream(path) << content;
    return path;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(NETDIST_FIXTURES) / name;
}

}  // namespace netdist::testing
