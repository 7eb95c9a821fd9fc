#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "spectramin/graph.hpp"

namespace spectramin {

inline constexpr int kMaxCanonVertices = 16;

/// Exact isomorphism key: the lexicographically minimal upper-triangle
/// bit-string (graph6 bit order) over all vertex orderings compatible with
/// iterated degree refinement. Equal keys <=> isomorphic graphs.
struct CanonicalForm {
  std::uint8_t n = 0;
  std::array<std::uint64_t, 2> bits{0, 0};  // left-packed, up to C(16,2)=120 bits

  auto operator<=>(const CanonicalForm&) const = default;
};

/// Result of a full canonicalization run.
struct CanonicalResult {
  CanonicalForm form;
  std::vector<int> labeling;  // old vertex -> canonical position
  // Automorphism generators discovered during the search. Generate a
  // subgroup of Aut(G); not guaranteed to generate all of it.
  std::vector<std::vector<int>> automorphisms;
};

/// Exact canonicalization for n <= 16; throws std::invalid_argument above.
/// Optional vertex colors restrict isomorphisms to color-preserving maps.
CanonicalResult canonicalize(const Graph& g, std::span<const int> colors = {});

CanonicalForm canonical_form(const Graph& g);

/// graph6 string of the canonically relabelled graph.
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& g, const Graph& h);

/// True iff some automorphism of g maps u to v (exact; n <= 16).
bool in_same_orbit(const Graph& g, int u, int v);

}  // namespace spectramin
