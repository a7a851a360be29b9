#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "class16/verifier.hpp"

namespace class16::cli {

inline constexpr int kCacheSchemaVersion = 1;

// Append-only JSONL Pell cache, one record per line:
//   {"p":79,"d":"80","c":"9","period":[9,18],"version":1}
// Records are verified (d^2 - p c^2 = 1, nonempty period) when the file is
// read; corrupt or stale lines are skipped with a warning on stderr.  get/put
// are safe to call from several threads.
class PellCache {
public:
    explicit PellCache(std::string path);

    std::optional<verifier::PellCacheEntry> get(const Int& p);
    void put(const Int& p, const verifier::PellCacheEntry& entry);

    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::string path_;
    std::mutex mu_;
    std::map<Int, verifier::PellCacheEntry> entries_;
};

}  // namespace class16::cli
