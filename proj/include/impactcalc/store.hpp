#pragma once

#include "impactcalc/ledger.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace impactcalc::io {

/// Directory of scenario documents, one `<id>.json` per scenario, each with
/// a revision counter. Updates are compare-and-swap on the revision and are
/// serialized per id; distinct ids never contend.
class ScenarioStore {
public:
    struct Entry {
        std::uint64_t revision = 0;
        Scenario scenario;
    };

    /// Creates the directory when missing.
    explicit ScenarioStore(std::filesystem::path directory);

    const std::filesystem::path& directory() const noexcept { return directory_; }

    std::optional<Entry> get(std::string_view id) const;

    /// Writes `scenario` if the stored revision equals `expected_revision`
    /// (0 for a scenario that does not exist yet) and returns the new
    /// revision. Throws RevisionConflict otherwise.
    std::uint64_t put(std::string_view id, std::uint64_t expected_revision, const Scenario& scenario);

    /// Ids double as file names, so they follow the identifier charset.
    static bool valid_id(std::string_view id);

private:
    std::filesystem::path file_for(std::string_view id) const;
    std::mutex& lock_for(std::string_view id) const;
    std::optional<Entry> read(std::string_view id) const;

    std::filesystem::path directory_;
    mutable std::mutex table_mutex_;
    mutable std::unordered_map<std::string, std::unique_ptr<std::mutex>> locks_;
};

}  // namespace impactcalc::io
