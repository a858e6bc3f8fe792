#include "gburgers/runfile.hpp"

#include <fstream>
#include <sstream>

#include "gburgers/errors.hpp"

namespace gburgers {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("run file key '" + key + "' has non-numeric value '" + text + "'");
    }
    if (pos != text.size()) {
        throw ConfigError("run file key '" + key + "' has trailing junk in '" + text + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    const double v = parse_double(key, text);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError("run file key '" + key + "' must be an integer, got '" + text + "'");
    }
    return i;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

}  // namespace

RunFile parse_runfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open run file '" + path + "'");

    RunFile rf;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": key '" + key +
                              "' has no value");
        }

        if (key == "problem") {
            rf.problem = parse_int(key, value);
        } else if (key == "nu") {
            rf.nu = parse_double(key, value);
        } else if (key == "c0") {
            rf.c0 = parse_double(key, value);
        } else if (key == "sigma") {
            rf.sigma = parse_double(key, value);
        } else if (key == "J") {
            rf.J = parse_int(key, value);
        } else if (key == "dt") {
            rf.dt = parse_double(key, value);
        } else if (key == "T") {
            rf.T = parse_double(key, value);
        } else if (key == "snapshots") {
            for (const auto& item : split_list(value)) {
                rf.snapshots.push_back(parse_double(key, item));
            }
        } else if (key == "J_list") {
            for (const auto& item : split_list(value)) {
                rf.J_list.push_back(parse_int(key, item));
            }
        } else if (key == "oracle_accuracy") {
            rf.oracle_accuracy = parse_double(key, value);
        } else if (key == "out") {
            rf.out = value;
        } else {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return rf;
}

ProblemSpec problem_from_runfile(const RunFile& rf) {
    const int id = require_key(rf.problem, "problem");
    const double nu = require_key(rf.nu, "nu");
    ProblemParams params;
    params.c0 = rf.c0;
    params.sigma = rf.sigma;
    return make_test_problem(id, nu, params);
}

}  // namespace gburgers
