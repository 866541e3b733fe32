#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace pokertopo {

inline constexpr const char* kVersion = "0.1.0";

/// Run record written next to every output file as
/// "<output>.manifest.json".
struct RunManifest {
    std::string subcommand;
    std::map<std::string, std::string> flags;
    /// Input path -> SHA-256 hex digest.
    std::map<std::string, std::string> inputs;
    /// Output path -> SHA-256 hex digest.
    std::map<std::string, std::string> outputs;
    std::string version = kVersion;
    std::string started_utc;
    double wall_seconds = 0.0;
    int workers = 1;
};

std::string sha256_file(const std::filesystem::path& path);
std::filesystem::path manifest_path(const std::filesystem::path& output);

void write_manifest(const std::filesystem::path& output, const RunManifest& m);
RunManifest read_manifest(const std::filesystem::path& path);

/// Throws DataError when `output` has a manifest whose recorded digest does
/// not match the file. Files without a manifest pass.
void check_against_manifest(const std::filesystem::path& output);

std::string utc_now();

}  // namespace pokertopo
