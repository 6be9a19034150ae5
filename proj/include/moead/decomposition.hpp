#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moead/core.hpp"

namespace moead {

enum class DecompKind { Sld, Sobol };

/// Decomposition vectors plus the T-nearest neighborhood of each vector.
struct WeightSet {
    std::vector<Vector> vectors;
    std::vector<std::vector<int>> neighborhoods;

    std::size_t size() const { return vectors.size(); }
    std::size_t objectives() const { return vectors.empty() ? 0 : vectors.front().size(); }
};

/// Full simplex lattice for parameter h: all (k1/h,...,km/h) with
/// nonnegative integers ki summing to h, enumerated lexicographically.
/// Count is C(h+m-1, m-1).
std::vector<Vector> simplex_lattice(std::size_t m, unsigned h);

/// Smallest h whose lattice has at least n vectors, truncated to the first
/// n of the lexicographic enumeration.
std::vector<Vector> sld_vectors(std::size_t m, std::size_t n);

/// Raw Sobol sequence points (Joe-Kuo direction numbers, Gray code order,
/// index starting at 1). Supports up to 5 dimensions.
std::vector<Vector> sobol_points(std::size_t dims, std::size_t n);

/// First n distinct simplex vectors obtained by mapping the (m-1)-dimensional
/// Sobol sequence through the sorted-differences transform. The sequence is
/// deterministic; the seed is accepted for interface symmetry with random
/// generators and does not change the output.
std::vector<Vector> sobol_simplex(std::size_t m, std::size_t n, std::uint64_t seed = 0);

/// For each vector the indices of its T nearest vectors by Euclidean
/// distance (self included, ties broken by lower index).
/// Throws std::invalid_argument when T exceeds the vector count.
std::vector<std::vector<int>> neighborhoods(const std::vector<Vector>& vectors, std::size_t T);

WeightSet make_weight_set(DecompKind kind, std::size_t m, std::size_t n, std::size_t T,
                          std::uint64_t seed = 0);

}  // namespace moead
