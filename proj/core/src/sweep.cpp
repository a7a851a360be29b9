#include "class16/sweep.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

#include "class16/cache.hpp"

namespace class16::cli {

SweepSummary run_sweep(const SweepOptions& opts,
                       const std::function<void(const SweepItem&)>& on_item) {
    if (!(opts.lo > 3 && opts.lo <= opts.hi)) {
        throw domain_error("sweep needs 3 < lo <= hi");
    }
    auto t0 = std::chrono::steady_clock::now();

    std::vector<Int> primes;
    for (Int q = next_prime(opts.lo - 1); q <= opts.hi; q = next_prime(q)) {
        if (mod(q, 4) == 3) primes.push_back(q);
    }

    verifier::VerifyOptions vo;
    vo.max_cf_steps = opts.max_cf_steps;
    vo.search_bound = opts.search_bound;
    if (opts.cache) {
        PellCache* cache = opts.cache;
        vo.cache_get = [cache](const Int& p) { return cache->get(p); };
        vo.cache_put = [cache](const Int& p, const verifier::PellCacheEntry& e) {
            cache->put(p, e);
        };
    }

    std::vector<std::optional<SweepItem>> slots(primes.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= primes.size()) return;
            SweepItem item;
            item.p = primes[i];
            try {
                item.report = verifier::verify_main(primes[i], vo);
            } catch (const std::exception& e) {
                item.error = e.what();
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[i] = std::move(item);
            }
            cv.notify_all();
        }
    };

    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                  : std::thread::hardware_concurrency();
    if (jobs < 1) jobs = 1;
    if (jobs > primes.size() && !primes.empty()) {
        jobs = static_cast<unsigned>(primes.size());
    }

    std::vector<std::thread> pool;
    if (!primes.empty()) {
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    SweepSummary summary;
    summary.primes = primes.size();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return slots[i].has_value(); });
        SweepItem item = std::move(*slots[i]);
        slots[i].reset();
        lock.unlock();
        if (!item.ok()) ++summary.failures;
        on_item(item);
    }
    for (auto& th : pool) th.join();

    auto t1 = std::chrono::steady_clock::now();
    summary.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return summary;
}

}  // namespace class16::cli
