#pragma once

// The forbidden pattern: s triangles plus k odd cycles of prescribed lengths,
// all sharing exactly one vertex. Lengths are kept sorted descending; a list
// entry must be odd and at least 5 (triangles travel through s).

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace specturan {

struct FlowerSpec {
    int s = 0;
    std::vector<int> lengths;

    FlowerSpec(int triangles, std::vector<int> cycle_lengths)
        : s(triangles), lengths(std::move(cycle_lengths)) {
        if (s < 0) throw std::invalid_argument("FlowerSpec: negative triangle count");
        for (int t : lengths)
            if (t < 5 || t % 2 == 0)
                throw std::invalid_argument("FlowerSpec: cycle lengths must be odd and >= 5");
        if (s == 0 && lengths.empty()) throw std::invalid_argument("FlowerSpec: empty pattern");
        std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    }

    int k() const { return static_cast<int>(lengths.size()); }

    int vertex_count() const {
        int total = 1 + 2 * s;
        for (int t : lengths) total += t - 1;
        return total;
    }

    long long edge_count() const {
        return 3LL * s + std::accumulate(lengths.begin(), lengths.end(), 0LL);
    }

    // Largest cycle length present, triangles counting as 3.
    int max_cycle_length() const {
        int c = s > 0 ? 3 : 0;
        if (!lengths.empty()) c = std::max(c, lengths.front());
        return c;
    }

    // All petals as cycle lengths, longest first; triangles appear as 3s.
    std::vector<int> petal_lengths() const {
        std::vector<int> all(lengths);
        all.insert(all.end(), static_cast<std::size_t>(s), 3);
        return all;
    }

    bool operator==(const FlowerSpec& o) const { return s == o.s && lengths == o.lengths; }
};

}  // namespace specturan
