#include "class16/cache.hpp"

#include <fstream>
#include <iostream>

#include "class16/report.hpp"

namespace class16::cli {

PellCache::PellCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;  // nothing cached yet
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            ordered_json j = ordered_json::parse(line);
            if (j.at("version").get<int>() != kCacheSchemaVersion) {
                throw domain_error("unknown cache version");
            }
            Int p = decode_int(j.at("p"));
            verifier::PellCacheEntry e;
            e.d = decode_int(j.at("d"));
            e.c = decode_int(j.at("c"));
            for (const auto& b : j.at("period")) {
                e.period.push_back(decode_int(b));
            }
            if (e.period.empty() || e.d * e.d - p * e.c * e.c != 1) {
                throw domain_error("inconsistent pell record");
            }
            entries_[std::move(p)] = std::move(e);
        } catch (const std::exception&) {
            std::cerr << "warning: skipping corrupt cache line " << lineno
                      << " in " << path_ << "\n";
        }
    }
}

std::optional<verifier::PellCacheEntry> PellCache::get(const Int& p) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(p);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void PellCache::put(const Int& p, const verifier::PellCacheEntry& entry) {
    std::lock_guard<std::mutex> lock(mu_);
    if (entries_.count(p)) return;

    ordered_json j;
    j["p"] = encode_int(p);
    j["d"] = entry.d.get_str();
    j["c"] = entry.c.get_str();
    ordered_json period = ordered_json::array();
    for (const auto& b : entry.period) period.push_back(encode_int(b));
    j["period"] = std::move(period);
    j["version"] = kCacheSchemaVersion;

    std::ofstream out(path_, std::ios::app);
    if (out) {
        out << j.dump() << "\n";
    } else {
        std::cerr << "warning: cannot append to cache file " << path_ << "\n";
    }
    entries_[p] = entry;
}

}  // namespace class16::cli
