#pragma once

#include "homstab/chain_complex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace homstab {

/// Chain complex filtered by basis elements: levels[i][j] is the filtration
/// level (>= 0) of the j-th generator in degree bottom_degree + i.  Spans of
/// the sublevel sets must be subcomplexes, i.e. boundaries never raise the
/// level.
struct FilteredComplex {
    ChainComplex ambient;
    std::vector<std::vector<unsigned>> levels;

    unsigned level(int degree, std::size_t index) const;
    unsigned max_level() const;
};

std::optional<ComplexDefect> validate_filtered(const FilteredComplex& fc);

/// One page of the spectral sequence of a filtration, field coefficients.
/// Only nonzero entries are stored.
struct SpectralPage {
    std::size_t r = 1;
    std::int64_t field_char = 0;
    std::map<std::pair<int, int>, std::size_t> dims;  // (s, t) -> dim

    std::size_t dim(int s, int t) const;
    /// Sums along anti-diagonals: total degree -> sum of dims.
    std::map<int, std::size_t> total_dims() const;
};

/// Pages E^1 .. E^r_max of the filtration spectral sequence, computed by
/// exact rank arithmetic over Q (characteristic 0) or F_p.
std::vector<SpectralPage> spectral_pages(const FilteredComplex& fc, std::int64_t characteristic, std::size_t r_max);

}  // namespace homstab
