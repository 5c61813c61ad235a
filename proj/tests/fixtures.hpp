#pragma once

// Example manifolds shared by the tests, produced once per process by the
// seeded search.

#include <vector>

#include "norden/search.hpp"

namespace fixtures {

inline const std::vector<norden::ManifoldManifest>& w3_dim4() {
  static const auto hits = [] {
    norden::SearchConfig cfg;
    cfg.max_results = 6;
    return norden::search_w3_examples(cfg).manifests;
  }();
  return hits;
}

inline const std::vector<norden::ManifoldManifest>& w3_dim6() {
  static const auto hits = [] {
    norden::SearchConfig cfg;
    cfg.dim = 6;
    cfg.max_results = 4;
    return norden::search_w3_examples(cfg).manifests;
  }();
  return hits;
}

// W3 examples in dimension 4 whose R' is a Kaehler tensor.
inline const std::vector<norden::ManifoldManifest>& r_prime_kahler_dim4() {
  static const auto hits = [] {
    norden::SearchConfig cfg;
    cfg.target = norden::SearchTarget::W3RPrimeKahler;
    cfg.max_results = 3;
    return norden::search_w3_examples(cfg).manifests;
  }();
  return hits;
}

}  // namespace fixtures
