#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <thread>

namespace xlbp::cli {

json to_json(const Poly& p) { return p.coeff_strings(); }

json to_json(const LaurentPoly& p) {
    json j = json::object();
    j["min_exp"] = p.min_exp();
    json c = json::array();
    if (!p.is_zero())
        for (int e = p.min_exp(); e <= p.max_exp(); ++e) c.push_back(p.coeff(e).str());
    j["coefficients"] = c;
    return j;
}

json to_json(const std::vector<Rational>& v) {
    json j = json::array();
    for (const auto& r : v) j.push_back(r.str());
    return j;
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("XLBP_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks) {
    std::vector<std::vector<CheckRecord>> slots(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                slots[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            for (auto& r : slots[i]) r.ms = ms / static_cast<double>(slots[i].size());
        }
    };
    unsigned n = std::min<std::size_t>(worker_count(), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<CheckRecord> out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        for (auto& r : slots[i]) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace xlbp::cli
