#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "gotz/error.hpp"
#include "gotz/json.hpp"
#include "gotz/monomial.hpp"
#include "gotz/threshold.hpp"
#include "gotz/version.hpp"

namespace gotz {

/// Append-only JSON-lines store of threshold reports. One line per entry:
/// {"version": ..., "n": ..., "u0": ..., "report": {...}}. Lines from other
/// tool versions and lines that fail to parse (e.g. a torn final write) are
/// skipped on load.
class JsonlCache : public ThresholdMemo {
public:
    explicit JsonlCache(std::filesystem::path path, std::string tool_version = gotz::version)
        : path_(std::move(path)), version_(std::move(tool_version))
    {
        load();
    }

    std::shared_ptr<const ThresholdReport> find(const Monomial& u0) override
    {
        std::lock_guard lock(mutex_);
        const auto it = entries_.find({u0.n(), format(u0)});
        if (it == entries_.end())
            return nullptr;
        ++hits_;
        return it->second;
    }

    void store(const ThresholdReport& report) override
    {
        std::lock_guard lock(mutex_);
        Key key{report.n, format(report.u0)};
        if (entries_.count(key))
            return;
        const json line{{"version", version_}, {"n", report.n}, {"u0", key.second}, {"report", to_json(report)}};
        std::ofstream out(path_, std::ios::app);
        if (!out)
            throw error("cannot append to cache file " + path_.string());
        out << line.dump() << '\n';
        out.flush();
        entries_.emplace(std::move(key), std::make_shared<const ThresholdReport>(report));
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return entries_.size();
    }

    std::size_t hits() const
    {
        std::lock_guard lock(mutex_);
        return hits_;
    }

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    using Key = std::pair<std::size_t, std::string>;

    void load()
    {
        std::ifstream in(path_);
        if (!in)
            return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            try {
                const json j = json::parse(line);
                if (j.at("version").get<std::string>() != version_)
                    continue;
                auto report = std::make_shared<const ThresholdReport>(report_from_json(j.at("report")));
                Key key{j.at("n").get<std::size_t>(), j.at("u0").get<std::string>()};
                if (key.first != report->n || key.second != format(report->u0) || report->shift != 0)
                    continue;
                entries_.emplace(std::move(key), std::move(report));
            }
            catch (const std::exception&) {
                continue;
            }
        }
    }

    std::filesystem::path path_;
    std::string version_;
    std::map<Key, std::shared_ptr<const ThresholdReport>> entries_;
    std::size_t hits_ = 0;
    mutable std::mutex mutex_;
};

} // namespace gotz
