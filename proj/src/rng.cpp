#include "rng.hpp"

#include <algorithm>

namespace propb {

std::vector<std::int32_t> Rng::sample_subset(std::uint64_t pool, std::size_t k) {
    std::vector<std::int32_t> out;
    out.reserve(k);
    for (std::uint64_t j = pool - k; j < pool; ++j) {
        const auto t = static_cast<std::int32_t>(next_below(j + 1));
        if (std::find(out.begin(), out.end(), t) == out.end()) {
            out.push_back(t);
        } else {
            out.push_back(static_cast<std::int32_t>(j));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace propb
