#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fss/dataset.hpp"

namespace fss {

// Byline weight tiers. Defaults follow common life-science practice:
// intramural papers (first and last author share an affiliation) credit
// 40% to each end author and split the remaining 20% among the middle;
// extramural papers credit 30% to the ends, 15% to the second and
// penultimate authors, and split the remaining 10% among the rest.
struct WeightTable {
    double intramural_first_last = 0.40;
    double intramural_rest = 0.20;
    double extramural_first_last = 0.30;
    double extramural_second_penultimate = 0.15;
    double extramural_rest = 0.10;

    void validate() const;
    static WeightTable from_toml(const std::filesystem::path& path);
};

struct WeightVector {
    std::string pub_id;
    std::vector<double> weights;  // aligned to byline positions 1..n
};

// Positional weights for a byline of n authors. Always sums to 1.
//
// Short bylines don't fit the full tier structure; they are renormalized:
// n = 2 splits evenly, extramural n = 4 drops the middle tier, and
// extramural n = 3 gives the single interior author half of the interior
// tier mass (second + penultimate + rest) before renormalizing. With the
// default table this yields [0.375, 0.25, 0.375] for extramural trios.
std::vector<double> positional_weights(std::size_t n_authors, bool intramural, WeightingScheme scheme,
                                       const WeightTable& table = {});

bool intramural_byline(const Publication& pub);

WeightVector fractional_weights(const Publication& pub, WeightingScheme scheme, const WeightTable& table = {});

}  // namespace fss
