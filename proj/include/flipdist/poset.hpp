#pragma once

#include "flipdist/graph.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace flipdist {

// Finite poset given by its cover relation over indexed elements.
class FinitePoset {
public:
  FinitePoset() = default;
  // Throws ValidationError on unknown names, cyclic or redundant covers.
  FinitePoset(std::vector<std::string> elements, std::vector<std::pair<int, int>> covers);
  static FinitePoset from_names(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers);
  // Builds the cover relation from an arbitrary order relation (pairs a < b).
  static FinitePoset from_relations(std::vector<std::string> elements,
                                    const std::vector<std::pair<int, int>>& less);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  // Reflexive order test.
  bool leq(int a, int b) const { return closure_[a][b] != 0; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  std::vector<int> lower_covers(int x) const;
  std::vector<int> upper_covers(int x) const;
  int index(const std::string& name) const;
  // Length of the longest chain, in elements.
  int height() const;

private:
  std::vector<std::string> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<char>> closure_;
};

// A poset checked to have all pairwise joins and meets.
class FiniteLattice {
public:
  explicit FiniteLattice(FinitePoset poset); // throws ValidationError if not a lattice

  const FinitePoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int join(int a, int b) const { return join_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int bottom() const { return bottom_; }
  bool is_distributive() const;

private:
  FinitePoset poset_;
  std::vector<std::vector<int>> join_;
  std::vector<std::vector<int>> meet_;
  int bottom_ = 0;
};

// Subposet of elements covering exactly one element.
FinitePoset join_irreducibles(const FiniteLattice& l);

// Downsets ordered by inclusion; element names are "{a,b}" with members in
// poset order. Throws CapExceeded beyond `cap` downsets.
FiniteLattice downset_lattice(const FinitePoset& p, std::size_t cap = 1U << 16);

struct BirkhoffDigraph {
  GraphPtr graph;
  Orientation reference;
};

// Join-irreducibles with their upward Hasse orientation, plus an arc from every
// source and every sink to an added top vertex.
BirkhoffDigraph birkhoff_digraph(const FiniteLattice& l);

// Order isomorphism between two finite posets (cover graphs with rank labels,
// refined then matched by backtracking).
bool isomorphic(const FinitePoset& a, const FinitePoset& b);

} // namespace flipdist
