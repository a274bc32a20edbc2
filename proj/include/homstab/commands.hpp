#pragma once

#include "homstab/experiment.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homstab::cli {

/// Default parameter caps; the CLI can widen them explicitly.
inline constexpr std::size_t kInjwordsCap = 8;
inline constexpr std::size_t kBraidTableCap = 12;
inline constexpr std::size_t kHalfSmashCap = 6;

/// Reduced Betti certificate for the complex of injective words.
ExperimentResult cmd_injwords(std::size_t n, std::size_t cap = kInjwordsCap);

/// Mod-2 dimension table for configurations in the plane, with stable-range
/// equality, monotonicity and abelianization-oracle verdicts.
ExperimentResult cmd_braid_table(std::size_t n_max, std::size_t deg_max, std::size_t jobs = 1,
                                 std::size_t cap = kBraidTableCap);

/// H_1 of the n-point configuration space of the sphere, integrally or mod a
/// prime.
ExperimentResult cmd_sphere_h1(std::size_t n, std::optional<std::int64_t> characteristic = std::nullopt);

/// Divisibility dichotomy for the top class of the two-point model.
ExperimentResult cmd_tau(std::size_t d);

/// Random transfer system: relation check, decomposition, recovered summand
/// dimensions.
ExperimentResult cmd_dold(std::uint64_t seed, std::size_t length, const std::vector<std::size_t>& b_dims);

/// Reduced homology of the half-smash construction on injective words.
ExperimentResult cmd_halfsmash(std::size_t n, std::size_t cap = kHalfSmashCap);

/// The whole acceptance battery; scale is "small" or "full".
ExperimentResult cmd_verify_all(const std::string& scale, std::size_t jobs = 1);

}  // namespace homstab::cli
