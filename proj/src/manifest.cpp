#include "pokertopo/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pokertopo/equity.hpp"

namespace pokertopo {

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0) EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> md;
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md.data(), &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

std::filesystem::path manifest_path(const std::filesystem::path& output) { return output.string() + ".manifest.json"; }

void write_manifest(const std::filesystem::path& output, const RunManifest& m) {
    nlohmann::ordered_json j;
    j["subcommand"] = m.subcommand;
    j["flags"] = m.flags;
    j["inputs"] = m.inputs;
    j["outputs"] = m.outputs;
    j["version"] = m.version;
    j["started_utc"] = m.started_utc;
    j["wall_seconds"] = m.wall_seconds;
    j["workers"] = m.workers;
    std::ofstream out(manifest_path(output));
    out << j.dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read manifest " + path.string());
    try {
        const auto j = nlohmann::json::parse(in);
        RunManifest m;
        m.subcommand = j.at("subcommand").get<std::string>();
        m.flags = j.value("flags", std::map<std::string, std::string>{});
        m.inputs = j.value("inputs", std::map<std::string, std::string>{});
        m.outputs = j.value("outputs", std::map<std::string, std::string>{});
        m.version = j.value("version", std::string{});
        m.started_utc = j.value("started_utc", std::string{});
        m.wall_seconds = j.value("wall_seconds", 0.0);
        m.workers = j.value("workers", 1);
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("malformed manifest " + path.string() + ": " + e.what());
    }
}

void check_against_manifest(const std::filesystem::path& output) {
    const auto mp = manifest_path(output);
    if (!std::filesystem::exists(mp)) return;
    const auto m = read_manifest(mp);
    const auto name = output.filename().string();
    for (const auto& [path, digest] : m.outputs) {
        if (std::filesystem::path(path).filename().string() != name) continue;
        if (sha256_file(output) != digest) throw DataError(output.string() + " does not match the digest in " + mp.string() + " (partial or modified file)");
    }
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

}  // namespace pokertopo
