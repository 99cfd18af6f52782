#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace cops {

using Perm = std::array<std::uint8_t, kMaxVertices>;

// Permutation-invariant encoding: n plus the upper-triangle adjacency bits of
// the canonically relabeled graph, packed MSB-first so array comparison is
// bitstring-lexicographic. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  std::uint8_t n = 0;
  std::array<std::uint64_t, 8> bits{};
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    std::uint64_t h = 1469598103934665603ull ^ f.n;
    for (auto w : f.bits) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct CanonResult {
  CanonicalForm form;
  Perm labeling{};  // labeling[v] = canonical position of v
  std::vector<Perm> aut_generators;
};

CanonicalForm canonical_form(const Graph& g);
CanonResult canonical_analysis(const Graph& g);
Graph canonical_representative(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// orbit representative (smallest member) per vertex under the group generated
// by gens
std::array<std::uint8_t, kMaxVertices> vertex_orbits(int n, const std::vector<Perm>& gens);

}  // namespace cops
