#include "fd2p/report.hpp"

#include <json.hpp>

namespace fd2p {

size_t CheckReport::count_status(const std::string& status) const {
    size_t c = 0;
    for (const CheckRecord& r : checks) {
        if (r.status == status) ++c;
    }
    return c;
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["tool"] = tool;
    j["version"] = version;
    j["seed"] = seed;
    j["group_bound"] = group_bound;
    j["algebra_bound"] = algebra_bound;
    j["summary"] = {{"pass", passed()},
                    {"fail", failed()},
                    {"skipped", skipped()},
                    {"total", checks.size()}};
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckRecord& r : checks) {
        arr.push_back({{"check_id", r.check_id},
                       {"paper_ref", r.paper_ref},
                       {"params", {{"p", r.p}, {"n", r.n}, {"poly", r.poly}}},
                       {"status", r.status},
                       {"reason", r.reason},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"elapsed_ms", r.elapsed_ms}});
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

} // namespace fd2p
