#pragma once

// Seeded search for left-invariant W3 examples on the canonical Norden pair.
//
// With g and J fixed, F is linear in the structure constants, so the W3
// condition together with bracket antisymmetry cuts out a linear subspace of
// brackets. Candidates come from two sources:
//   - two-step nilpotent families (brackets land in a coordinate center), where
//     the Jacobi identity holds automatically;
//   - random points of the W3 subspace pushed onto the Jacobi variety by
//     Gauss-Newton. Every constraint is a homogeneous quadratic in the
//     coefficients, so the Jacobian is exact by polarization, and a hyperplane
//     through the starting point keeps the iterate away from zero.

#include <cstdint>
#include <string_view>
#include <vector>

#include "norden/manifest.hpp"

namespace norden {

enum class SearchTarget { W3, W3RPrimeKahler };

std::string_view to_string(SearchTarget t);           // "w3", "w3-kahler-rprime"
SearchTarget parse_search_target(std::string_view s);  // ArgumentError if unknown

struct SearchConfig {
  std::size_t dim = 4;
  std::uint64_t seed = 42;
  std::size_t max_candidates = 100000;
  double jacobi_tolerance = 1e-10;
  SearchTarget target = SearchTarget::W3;
  /// Stop after this many accepted examples; 0 means no limit.
  std::size_t max_results = 4;
  /// Class and R' Kaehler tolerance for accepting a candidate.
  double tolerance = kDefaultTolerance;
  /// Also impose |nabla J|^2 = 0 (isotropic Kaehler examples).
  bool require_isotropic = false;
  /// Lower bound on max |F| after normalizing max |C| to 1; rejects flat hits.
  double min_f_norm = 1e-3;
};

struct SearchStatistics {
  std::size_t parameters = 0;         // independent bracket entries
  std::size_t w3_subspace_dim = 0;
  std::size_t nilpotent_families = 0;
  std::size_t candidates = 0;
  std::size_t rejected_jacobi = 0;
  std::size_t rejected_class = 0;     // invalid, not W3, or too close to Kaehler
  std::size_t rejected_curvature = 0; // R' not Kaehler or norm not isotropic
  std::size_t accepted = 0;
};

struct SearchResult {
  std::vector<ManifoldManifest> manifests;
  SearchStatistics stats;
};

/// Throws ArgumentError for an odd or zero dim, max_candidates == 0, or a
/// non-positive tolerance. An unsuccessful search is not an error.
SearchResult search_w3_examples(const SearchConfig& cfg);

/// A random Lie algebra on the canonical Norden pair with no class
/// constraint; almost surely not W3. Used to sample OTHER manifolds.
LieFrameManifold random_norden_manifold(std::size_t dim, std::uint64_t seed);

}  // namespace norden
