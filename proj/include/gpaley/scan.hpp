#pragma once

#include <atomic>
#include <condition_variable>
#include <functional>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "gpaley/verify.hpp"

// Parameter-range scanning: every valid (q,k) with q <= max_q in increasing
// (q,k) order, classification always, full theorem verification up to a
// second bound. Rows are computed by a bounded worker pool and re-sequenced,
// so row content and order are independent of the job count.

namespace gpaley {

struct ScanRow {
    int64_t p = 0;
    int R = 0;
    int64_t q = 0, k = 0, valency = 0;
    std::optional<Classification> classification;
    std::optional<BigInt> aut_order;
    std::optional<BigInt> predicted_aut_order;
    std::optional<bool> checks_passed;
    std::string error; // per-row failures never abort the scan
};

struct ScanOptions {
    int64_t max_q = 0;
    int64_t verify_up_to = 0;
    int jobs = 1;
    std::pair<int64_t, int64_t> resume_after{-1, -1}; // emit rows strictly after this (q,k)
    VerifyOptions verify;
    int64_t field_max_q = Field::default_max_q;
};

namespace detail {

struct ScanTask {
    int64_t p;
    int R;
    int64_t q, k;
};

inline std::vector<ScanTask> scan_tasks(const ScanOptions& opt)
{
    std::vector<ScanTask> tasks;
    for (int64_t q = 2; q <= opt.max_q; ++q) {
        auto pp = as_prime_power(q);
        if (!pp)
            continue;
        for (int64_t k : valid_k_values(q)) {
            if (std::make_pair(q, k) <= opt.resume_after)
                continue;
            tasks.push_back({pp->first, pp->second, q, k});
        }
    }
    return tasks;
}

inline ScanRow scan_one(const ScanTask& t, const ScanOptions& opt)
{
    ScanRow row;
    row.p = t.p;
    row.R = t.R;
    row.q = t.q;
    row.k = t.k;
    row.valency = (t.q - 1) / t.k;
    try {
        Field f = Field::build(t.p, t.R, opt.field_max_q);
        GPaleyParams params = GPaleyParams::make(std::move(f), t.k);
        row.classification = classify(params);
        if (t.q <= opt.verify_up_to) {
            VerificationReport rep = verify_theorem(params, opt.verify);
            row.aut_order = rep.aut_order;
            row.predicted_aut_order = rep.predicted_aut_order;
            row.checks_passed = rep.all_passed();
        }
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

} // namespace detail

/// Runs the scan, invoking `sink` once per row in (q,k) order.
inline void scan(const ScanOptions& opt, const std::function<void(const ScanRow&)>& sink)
{
    auto tasks = detail::scan_tasks(opt);
    if (opt.jobs <= 1) {
        for (const auto& t : tasks)
            sink(detail::scan_one(t, opt));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::map<std::size_t, ScanRow> done;
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            ScanRow row = detail::scan_one(tasks[i], opt);
            std::lock_guard<std::mutex> lock(mu);
            done.emplace(i, std::move(row));
            cv.notify_one();
        }
    };

    std::vector<std::thread> pool;
    int jobs = std::min<int>(opt.jobs, static_cast<int>(tasks.size() ? tasks.size() : 1));
    pool.reserve(jobs);
    for (int i = 0; i < jobs; ++i)
        pool.emplace_back(worker);

    // sequencer: emit rows in task order as they complete
    std::size_t emitted = 0;
    {
        std::unique_lock<std::mutex> lock(mu);
        while (emitted < tasks.size()) {
            cv.wait(lock, [&] { return done.count(emitted) > 0; });
            while (done.count(emitted)) {
                ScanRow row = std::move(done.at(emitted));
                done.erase(emitted);
                lock.unlock();
                sink(row);
                lock.lock();
                ++emitted;
            }
        }
    }
    for (auto& th : pool)
        th.join();
}

} // namespace gpaley
