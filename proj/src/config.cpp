#include "lwcq/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace lwcq {

void Config::validate() const {
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (iter_cap <= 0) throw std::invalid_argument("iteration cap must be positive");
    if (term_budget == 0) throw std::invalid_argument("term budget must be positive");
    if (vars <= 0 || deg <= 0) throw std::invalid_argument("vars and deg must be positive");
    if (zero_budget < 0) throw std::invalid_argument("zero budget must be nonnegative");
    if (!(q > 0 && q < 1)) throw std::invalid_argument("q must lie in (0,1)");
}

Config load_config_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    in >> j;
    for (const auto& [key, value] : j.items()) {
        if (key == "tol") base.tol = value.get<double>();
        else if (key == "iter_cap") base.iter_cap = value.get<long long>();
        else if (key == "term_budget") base.term_budget = value.get<std::size_t>();
        else if (key == "vars") base.vars = value.get<int>();
        else if (key == "deg") base.deg = value.get<int>();
        else if (key == "zero_budget") base.zero_budget = value.get<int>();
        else if (key == "q") base.q = value.get<double>();
        else if (key == "json") base.json = value.get<bool>();
        else throw std::invalid_argument("unknown config key: " + key);
    }
    base.validate();
    return base;
}

std::string config_path_from_env() {
    const char* p = std::getenv("LWCQ_CONFIG");
    return p ? std::string(p) : std::string();
}

}  // namespace lwcq
