#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "relroot/chevalley.hpp"
#include "relroot/root_system.hpp"

namespace relroot {

/// Square matrix over F_p stored row-major, one byte per entry (p < 256).
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t n, std::uint32_t p);
  static FqMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t size() const { return n_; }
  std::uint32_t modulus() const { return p_; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);

  FqMatrix operator*(const FqMatrix& o) const;
  bool operator==(const FqMatrix& o) const { return p_ == o.p_ && a_ == o.a_; }
  /// Canonical byte encoding (entries row by row).
  const std::string& bytes() const { return a_; }

 private:
  std::size_t n_ = 0;
  std::uint32_t p_ = 2;
  std::string a_;
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix& m) const { return std::hash<std::string>()(m.bytes()); }
};

/// x_root(c) in the adjoint representation reduced mod p.
FqMatrix adjoint_root_element_mod(const ChevalleyBasis& cb, std::size_t root, std::int64_t c, std::uint32_t p);

struct GroupClosure {
  std::vector<FqMatrix> generators;
  std::unordered_set<FqMatrix, FqMatrixHash> elements;
  std::size_t order() const { return elements.size(); }
};

/// Default element cap, overridden by the RELROOT_CAP environment variable.
std::size_t default_closure_cap();

/// Breadth-first closure of the generators. Throws CapExceeded once more than
/// `cap` elements are found.
GroupClosure close_group(std::vector<FqMatrix> generators, std::size_t cap);

/// Order of the adjoint elementary group: q^N prod (q^{d_i} - 1) / |center|.
std::uint64_t predicted_order(const RootType& t, std::uint32_t p);

/// Group generated by all x_root(c), c in F_p \ {0}. Throws PreconditionError
/// for a non-prime or too large p and CapExceeded when the predicted order
/// or the closure exceeds the cap.
GroupClosure generate_elementary_group(const RootType& t, std::uint32_t p, std::size_t cap = default_closure_cap());

/// Normal closure of the commutators of generator pairs, as a closed set.
GroupClosure derived_subgroup(const GroupClosure& g, std::size_t cap = default_closure_cap());
/// |G| / |[G, G]|.
std::uint64_t derived_subgroup_index(const GroupClosure& g, std::size_t cap = default_closure_cap());

struct PerfectnessRow {
  RootType type;
  std::uint32_t p;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> index;
  /// "perfect", "not perfect" or "skipped: cap".
  std::string result;
  /// "perfect" / "not perfect" for rank >= 2, "out-of-hypothesis" for rank 1.
  std::string prediction;
  /// "agrees", "disagrees", "out-of-hypothesis" or "skipped".
  std::string verdict;
};

/// Rows for each (type, p); cap overruns become skipped rows.
std::vector<PerfectnessRow> perfectness_report(const std::vector<std::pair<RootType, std::uint32_t>>& cases,
                                               std::size_t cap = default_closure_cap());
/// {A2, C2, G2, A3, B3} x {2, 3}.
std::vector<std::pair<RootType, std::uint32_t>> default_perfectness_catalog();

nlohmann::json to_json(const PerfectnessRow& row);
/// Aligned text table.
std::string format_table(const std::vector<PerfectnessRow>& rows);

}  // namespace relroot
