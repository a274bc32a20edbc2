#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace homstab {

/// Rectangular table of homology dimensions: dims[i][n - n_start] is the
/// dimension in degree i with n points.
struct StabilityTable {
    std::vector<std::vector<std::size_t>> dims;
    std::size_t n_start = 0;
    std::string provenance;

    std::size_t degrees() const { return dims.size(); }
    std::size_t columns() const { return dims.empty() ? 0 : dims.front().size(); }
    std::size_t at(std::size_t i, std::size_t n) const { return dims.at(i).at(n - n_start); }
};

}  // namespace homstab
