#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relroot {

/// Integer coordinates over the simple roots (or over relative simple roots).
using Coords = std::vector<int>;

/// Irreducible reduced type, series letter plus rank.
struct RootType {
  char series = 'A';
  int rank = 1;

  /// Throws InvalidArgument for an unknown series or a rank invalid for it.
  RootType(char series, int rank);
  /// Parses "G2", "C4", ... (case-insensitive series letter).
  static RootType parse(std::string_view text);

  std::string name() const;
  bool simply_laced() const;
  bool operator==(const RootType&) const = default;
};

/// One representative per isomorphism class of irreducible root systems of
/// rank <= max_rank: A1.., B2.., C3.., D4.., E6-8, F4, G2.
std::vector<RootType> irreducible_types(int max_rank);

enum class RootLength { Short, Long };

const char* to_string(RootLength l);

/// All roots of an irreducible type with Bourbaki numbering (nodes are
/// 0-based internally). Positive roots occupy indices [0, N) ordered by
/// height then lexicographic coordinates; index N + i holds the negative of
/// root i.
class RootSystem {
 public:
  explicit RootSystem(RootType type);

  const RootType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t size() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }

  const Coords& root(std::size_t i) const { return roots_.at(i); }
  const std::vector<Coords>& roots() const { return roots_; }
  std::optional<std::size_t> index_of(const Coords& c) const;
  /// Index of the simple root alpha_i (0-based node).
  std::size_t simple(int node) const { return simple_index_.at(node); }

  bool is_positive(std::size_t i) const { return i < num_positive(); }
  std::size_t negate(std::size_t i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  int height(std::size_t i) const { return height_[i]; }
  RootLength length(std::size_t i) const { return length_[i]; }
  /// (root_i, root_i) in units where the shortest simple root has norm 2.
  int norm(std::size_t i) const { return norm_[i]; }
  /// Index of root_i + root_j when it is a root.
  std::optional<std::size_t> sum(std::size_t i, std::size_t j) const;

  int inner(const Coords& a, const Coords& b) const;
  int inner(std::size_t i, std::size_t j) const { return inner(roots_[i], roots_[j]); }
  /// <root_i, alpha_node^vee> = 2 (root_i, alpha_node) / (alpha_node, alpha_node).
  int pairing_with_simple(std::size_t i, int node) const;
  /// <root_b, root_a^vee>.
  int pairing(std::size_t b, std::size_t a) const;

  /// (p, q): p = max{i : b - i a in Phi}, q = max{i : b + i a in Phi}.
  std::pair<int, int> root_string(std::size_t a, std::size_t b) const;

  /// cartan()[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  /// Half-norms d_i of the simple roots.
  const std::vector<int>& node_lengths() const { return node_len_; }
  bool adjacent(int i, int j) const { return i != j && gram_[i][j] != 0; }

  /// Closed-form number of roots for a type.
  static std::size_t expected_size(const RootType& t);
  /// Gram matrix of the simple roots without building the root set.
  static std::vector<std::vector<int>> gram_of(const RootType& t);

 private:
  RootType type_;
  std::vector<int> node_len_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Coords> roots_;
  std::map<Coords, std::size_t> index_;
  std::vector<std::size_t> simple_index_;
  std::vector<int> height_;
  std::vector<int> norm_;
  std::vector<RootLength> length_;
  std::vector<int> sum_table_;  // size()^2, -1 when not a root
};

std::string coords_to_string(const Coords& c);

}  // namespace relroot
