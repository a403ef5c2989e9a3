#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relroot/root_system.hpp"

namespace relroot {

/// Node permutation of a Dynkin diagram (0-based images).
using Perm = std::vector<int>;

/// All diagram automorphisms, identity first, then lexicographic.
std::vector<Perm> diagram_automorphisms(const RootSystem& rs);
/// Closure of a generating set under composition, sorted, identity first.
std::vector<Perm> generate_group(const std::vector<Perm>& gens, int nodes);
/// Every subgroup of Aut(D), ordered by size then elements.
std::vector<std::vector<Perm>> automorphism_subgroups(const RootSystem& rs);
/// Canonical text form of a subgroup: trivial, flip, triality or perm:...
std::string gamma_name(const RootSystem& rs, const std::vector<Perm>& group);

/// The pair (J, Gamma) together with its type.
struct FoldingSpec {
  RootType type;
  std::vector<Perm> gamma;  // full group, identity first
  std::vector<int> levi;    // sorted 0-based nodes

  /// Validates that gamma preserves the diagram and J is gamma-invariant.
  FoldingSpec(RootType type, std::vector<Perm> gamma, std::vector<int> levi);

  /// "<TYPE> gamma=<trivial|flip|triality|perm:...> levi=<i,j,...>" with 1-based nodes.
  static FoldingSpec parse(std::string_view text);
  /// Gamma text form to group. perm: takes generators as 1-based image lists separated by '/'.
  static std::vector<Perm> parse_gamma(const RootType& type, std::string_view text);
  /// 1-based comma list, or "all" for every node.
  static std::vector<int> parse_levi(const RootType& type, std::string_view text);

  bool gamma_trivial() const { return gamma.size() == 1; }
  std::string to_string() const;
};

/// Relative root system of a folding. Relative roots are stored with the
/// positive ones first, sorted by level then coordinates; index N + i holds
/// the negative of index i.
class RelativeRootSystem {
 public:
  RelativeRootSystem(std::shared_ptr<const RootSystem> rs, FoldingSpec spec);

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  const FoldingSpec& spec() const { return spec_; }

  /// Number of Gamma-orbits of J.
  int rank() const { return int(orbits_.size()); }
  /// Gamma-orbits of J ordered by minimal node.
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  /// rank() x l integer matrix.
  const std::vector<std::vector<int>>& projection_matrix() const { return proj_; }
  Coords project(const Coords& c) const;

  std::size_t size() const { return rel_.size(); }
  std::size_t num_positive() const { return rel_.size() / 2; }
  const Coords& rel_root(std::size_t i) const { return rel_.at(i); }
  const std::vector<Coords>& rel_roots() const { return rel_; }
  std::optional<std::size_t> index_of(const Coords& c) const;
  std::size_t negate(std::size_t i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  bool is_positive(std::size_t i) const { return i < num_positive(); }
  int level(std::size_t i) const;
  int sign(std::size_t i) const { return is_positive(i) ? 1 : -1; }

  /// Root indices projecting to relative root i, ordered lexicographically by coordinates.
  const std::vector<std::size_t>& fiber(std::size_t i) const { return fibers_.at(i); }
  /// Relative root of an ordinary root, empty when it projects to zero.
  std::optional<std::size_t> rel_of_root(std::size_t root) const;

  int num_components() const { return int(components_.size()); }
  /// Coordinates (orbit indices) spanned by a component.
  const std::vector<int>& component_coords(int c) const { return component_coords_.at(c); }
  /// Relative root indices of a component.
  const std::vector<std::size_t>& component_roots(int c) const { return components_.at(c); }
  int component_of(std::size_t rel) const { return component_of_.at(rel); }
  int component_rank(int c) const { return int(component_coords_.at(c).size()); }

 private:
  std::shared_ptr<const RootSystem> rs_;
  FoldingSpec spec_;
  std::vector<std::vector<int>> orbits_;
  std::vector<std::vector<int>> proj_;
  std::vector<Coords> rel_;
  std::vector<std::vector<std::size_t>> fibers_;
  std::vector<int> root_to_rel_;
  std::vector<std::vector<int>> component_coords_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<int> component_of_;
};

/// Possibly non-reduced type label such as "B2" or "BC2".
struct RelativeType {
  std::string series;
  int rank = 0;
  std::string name() const { return series + std::to_string(rank); }
};

/// Matches a component against A..G and BC up to a permutation of
/// coordinates, trying the identity permutation first. Throws
/// PreconditionError when no type matches.
RelativeType classify_relative_type(const RelativeRootSystem& rrs, int component);

/// Independent check of the decomposition property for A = B + C.
struct DecompositionCheck {
  bool ok = false;
  std::string reason;
};
DecompositionCheck check_decomposition(const RelativeRootSystem& rrs, std::size_t a, std::size_t b, std::size_t c);

struct Decomposition {
  std::size_t b;
  std::size_t c;
  /// "multiple-of-simple", "chain-split", "widened" or "exhaustive".
  std::string method;
};

/// Constructive decomposition A = B + C; among the constructed candidates
/// that pass check_decomposition the lexicographically least (B, C) wins.
/// Throws PreconditionError for rank-1 components.
Decomposition decompose_relative_root(const RelativeRootSystem& rrs, std::size_t a);

/// Solve x = i*b + j*c for integers i, j with b, c non-collinear.
std::optional<std::pair<int, int>> solve_in_plane(const Coords& x, const Coords& b, const Coords& c);
bool collinear(const Coords& a, const Coords& b);

}  // namespace relroot
