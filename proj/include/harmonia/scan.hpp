#pragma once

#include <atomic>
#include <condition_variable>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "harmonia/checks.hpp"
#include "harmonia/errors.hpp"

namespace harmonia {

// Primes in [from, to], plain sieve of Eratosthenes.
inline std::vector<u64> sieve_primes(u64 from, u64 to) {
    if (from > to) throw BadRange("sieve_primes: from > to");
    std::vector<bool> composite(to + 1, false);
    std::vector<u64> primes;
    for (u64 i = 2; i <= to; ++i) {
        if (composite[i]) continue;
        if (i >= from) primes.push_back(i);
        for (u64 j = i * i; j <= to; j += i) composite[j] = true;
    }
    return primes;
}

using PrimeRunner = std::function<std::vector<CheckResult>(u64)>;

// Runs run_all over every prime in [from, to], farming primes out to `jobs`
// workers. The sink sees results ordered by (prime, registry order) no matter
// how completion interleaves; on a worker error the completed prefix is
// flushed before the exception resurfaces. Returns true iff every check at
// every prime passed. `run` is the per-prime pipeline (replaceable in tests).
inline bool scan_primes(u64 from, u64 to, unsigned jobs,
                        const std::function<void(const CheckResult&)>& sink,
                        const PrimeRunner& run = [](u64 p) { return run_all(p); }) {
    if (from < 7 || from > to) throw BadRange("scan_primes: requires 7 <= from <= to");
    if (jobs < 1) throw BadRange("scan_primes: requires jobs >= 1");
    const std::vector<u64> primes = sieve_primes(from, to);
    const std::size_t n = primes.size();

    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::optional<std::vector<CheckResult>>> slots(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    bool stop = false;

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (stop) break;
            }
            try {
                std::vector<CheckResult> results = run(primes[i]);
                std::lock_guard<std::mutex> lock(mu);
                slots[i] = std::move(results);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                stop = true;
            }
            cv.notify_all();
        }
        cv.notify_all();
    };

    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(n, 1)));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);

    bool all_pass = true;
    std::size_t emitted = 0;
    auto emit_ready = [&](std::unique_lock<std::mutex>& lock) {
        while (emitted < n && slots[emitted].has_value()) {
            std::vector<CheckResult> batch = std::move(*slots[emitted]);
            slots[emitted].reset();
            ++emitted;
            lock.unlock();
            for (const CheckResult& r : batch) {
                if (!r.pass) all_pass = false;
                sink(r);
            }
            lock.lock();
        }
    };
    {
        std::unique_lock<std::mutex> lock(mu);
        while (emitted < n) {
            cv.wait(lock, [&] { return slots[emitted].has_value() || stop; });
            emit_ready(lock);
            if (stop && emitted < n && !slots[emitted].has_value()) break;
        }
    }
    for (std::thread& t : pool) t.join();
    {
        // stragglers that completed while aborting still belong to the prefix
        std::unique_lock<std::mutex> lock(mu);
        emit_ready(lock);
    }
    if (error) std::rethrow_exception(error);
    return all_pass;
}

} // namespace harmonia
