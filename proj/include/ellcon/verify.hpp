#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellcon/connection.hpp"

namespace ellcon::verify {

using Json = nlohmann::ordered_json;

enum class Mode { exact, specialized, sampled };
const char* mode_name(Mode m);

struct Config {
    std::uint64_t seed = 0;
    int trials = 0;             // 0: per-check default
    std::vector<Params> params; // empty: built-in triples
    Mode mode = Mode::specialized;
    int jobs = 1;
};

struct Record {
    std::string id, group, ref, mode, params;
    bool pass = false;
    bool error = false;  // the check itself threw
    double seconds = 0;
    Json details = Json::object();
};

const std::vector<std::string>& group_names();  // without "all"
bool is_group(const std::string& g);            // includes "all"

std::vector<Params> builtin_params();
std::vector<Params> random_params(std::uint64_t seed, int n);

// runs every check of the group(s); record order is fixed by the check table, not by completion
std::vector<Record> run(const std::string& group, const Config& cfg);
// only the listed check ids
std::vector<Record> run_checks(const std::vector<std::string>& ids, const Config& cfg);
std::vector<std::string> check_ids(const std::string& group);

bool all_pass(const std::vector<Record>& rs);

Json config_json(const std::string& group, const Config& cfg);
Json report_json(const std::string& group, const Config& cfg, const std::vector<Record>& rs, bool timings);
std::string report_markdown(const Json& report);

}  // namespace ellcon::verify
