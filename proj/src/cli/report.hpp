#pragma once

#include "xlbp/hr.hpp"
#include "xlbp/poly.hpp"
#include "xlbp/rational.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace xlbp::cli {

using json = nlohmann::ordered_json;

struct CheckRecord {
    std::string check_id;
    json inputs = json::object();
    std::string status = "pass";  // pass | fail | skipped
    json witness;                 // null unless useful
    std::string note;
    double ms = 0;  // wall time of the producing task, split evenly
};

json to_json(const Poly& p);
json to_json(const LaurentPoly& p);
json to_json(const std::vector<Rational>& v);

// A task yields one or more records (a quadrature table yields one per pair).
using Task = std::function<std::vector<CheckRecord>()>;

// Runs the tasks on up to XLBP_THREADS workers (default: hardware concurrency)
// and concatenates the records in task order.
std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks);
unsigned worker_count();

struct SuiteOptions {
    Params params;
    int max_n = 10;
    int max_l0 = 2;
    std::vector<int> j0s{1, 2, 3, 4};
};

std::vector<Task> identities_suite(const SuiteOptions& o);
std::vector<Task> darboux_suite(const SuiteOptions& o);
std::vector<Task> xhr_suite(const SuiteOptions& o);
std::vector<Task> recurrence_suite(const SuiteOptions& o);
std::vector<Task> quadrature_suite(const SuiteOptions& o);

}  // namespace xlbp::cli
