#include "impactcalc/store.hpp"

#include "impactcalc/document.hpp"
#include "impactcalc/error.hpp"

#include <fstream>
#include <sstream>
#include <thread>

namespace impactcalc::io {

ScenarioStore::ScenarioStore(std::filesystem::path directory) : directory_(std::move(directory)) {
    std::filesystem::create_directories(directory_);
}

bool ScenarioStore::valid_id(std::string_view id) { return is_valid_identifier(id); }

std::filesystem::path ScenarioStore::file_for(std::string_view id) const {
    if (!valid_id(id)) {
        throw CalcError(ErrorKind::ValidationError, "scenario id must be 1-64 characters of [A-Za-z0-9_-]");
    }
    return directory_ / (std::string(id) + ".json");
}

std::mutex& ScenarioStore::lock_for(std::string_view id) const {
    std::lock_guard guard(table_mutex_);
    auto& slot = locks_[std::string(id)];
    if (!slot) slot = std::make_unique<std::mutex>();
    return *slot;
}

std::optional<ScenarioStore::Entry> ScenarioStore::read(std::string_view id) const {
    std::ifstream in(file_for(id), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    Json doc = parse_json(ss.str());
    reject_unknown_fields(doc, {"revision", "scenario"}, "$");
    Entry e;
    e.revision = count_from_json(require_field(doc, "revision", "$"), "$.revision");
    e.scenario = scenario_from_json(require_field(doc, "scenario", "$"), "$.scenario");
    return e;
}

std::optional<ScenarioStore::Entry> ScenarioStore::get(std::string_view id) const {
    std::lock_guard guard(lock_for(id));
    return read(id);
}

std::uint64_t ScenarioStore::put(std::string_view id, std::uint64_t expected_revision, const Scenario& scenario) {
    validate_scenario(scenario);
    std::lock_guard guard(lock_for(id));
    auto current = read(id);
    std::uint64_t stored = current ? current->revision : 0;
    if (stored != expected_revision) {
        throw CalcError(ErrorKind::RevisionConflict, "scenario '" + std::string(id) + "' is at revision " +
                                                         std::to_string(stored) + ", not " +
                                                         std::to_string(expected_revision));
    }
    std::uint64_t next = stored + 1;
    Json doc;
    doc["revision"] = next;
    doc["scenario"] = scenario_to_json(scenario);

    auto target = file_for(id);
    std::ostringstream tmp_name;
    tmp_name << target.filename().string() << ".tmp-" << std::this_thread::get_id();
    auto tmp = directory_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CalcError(ErrorKind::NotFound, "cannot write to store " + directory_.string());
        out << doc.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, target);
    return next;
}

}  // namespace impactcalc::io
