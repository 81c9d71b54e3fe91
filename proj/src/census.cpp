#include "cell24/census.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace cell24 {

std::vector<CensusEntry> parse_census(std::istream& in) {
    std::vector<CensusEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;

        CensusEntry entry;
        entry.line = line_no;
        if (tokens.size() == 2) {
            try {
                entry.id = std::stoll(tokens[0]);
            } catch (...) {
                entry.error = "line " + std::to_string(line_no) + ": bad id '" +
                              tokens[0] + "'";
            }
            entry.code = tokens[1];
        } else if (tokens.size() == 1) {
            entry.code = tokens[0];
        } else {
            entry.error = "line " + std::to_string(line_no) + ": expected '[id] CODE'";
            entry.code = tokens.size() > 1 ? tokens[1] : "";
        }
        if (!entry.error) {
            try {
                PairingScheme::parse(entry.code);
            } catch (const ParseError& e) {
                entry.error = "line " + std::to_string(line_no) + ": " + e.what();
            }
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

Json census_report(const std::vector<CensusEntry>& entries) {
    Json j;
    j["schema"] = kSchemaVersion;

    // Entries are independent; report them in input order whatever order the
    // workers finish in.
    auto build = [](const CensusEntry& entry) -> Json {
        Json rec;
        rec["line"] = entry.line;
        if (entry.id) rec["id"] = *entry.id;
        rec["code"] = entry.code;
        if (entry.error) {
            rec["error"] = *entry.error;
        } else {
            try {
                rec["report"] = full_report(PairingScheme::parse(entry.code));
            } catch (const Error& e) {
                rec["error"] = e.what();
            }
        }
        return rec;
    };

    std::vector<Json> records(entries.size());
    const std::size_t workers = std::min<std::size_t>(
        entries.size(), std::max(1u, std::thread::hardware_concurrency()));
    if (workers > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
                    records[i] = build(entries[i]);
            });
        for (std::thread& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < entries.size(); ++i) records[i] = build(entries[i]);
    }

    int valid = 0, invalid = 0, errors = 0;
    Json out = Json::array();
    for (Json& rec : records) {
        if (rec.contains("error"))
            ++errors;
        else if (rec["report"]["validity"]["valid"].get<bool>())
            ++valid;
        else
            ++invalid;
        out.push_back(std::move(rec));
    }
    j["entries"] = std::move(out);
    j["summary"] = Json{{"total", entries.size()},
                        {"valid", valid},
                        {"invalid", invalid},
                        {"parse_errors", errors}};
    return j;
}

}  // namespace cell24
