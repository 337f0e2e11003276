#pragma once

#include <map>
#include <utility>

namespace sqz {

/// Graded Betti numbers: finitely supported map (i, j) -> beta_{i,j}.
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;

    void add(int i, int j, long long value) {
        if (value == 0) return;
        auto it = entries.find({i, j});
        if (it == entries.end()) {
            entries.emplace(std::make_pair(i, j), value);
        } else {
            it->second += value;
            if (it->second == 0) entries.erase(it);
        }
    }

    long long get(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable& other) const = default;
};

} // namespace sqz
