#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "crf/core.hpp"

namespace crf::util {

// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);

// Stable 64-bit hash for seeding and bucketing (not for security).
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

// Derives a named sub-seed from a parent seed.
std::uint64_t sub_seed(std::uint64_t seed, std::string_view name);

std::string read_file(const std::filesystem::path& path);
// Writes atomically via a temporary sibling file.
void write_file(const std::filesystem::path& path, std::string_view content);

std::vector<Json> read_jsonl(const std::filesystem::path& path);
void write_jsonl(const std::filesystem::path& path, const std::vector<Json>& rows);

// Fixed-point formatting used in prompts and tables.
std::string fixed(double v, int decimals);

// Worker count: `requested`, or hardware concurrency capped at 8 when 0.
std::size_t thread_count(std::size_t requested = 0);

// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index runs
// exactly once; the first exception is rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex mu;
    std::vector<std::thread> pool;
    const std::size_t t = std::min(threads, n);
    pool.reserve(t);
    for (std::size_t w = 0; w < t; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace crf::util
