#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relroot/chevalley.hpp"
#include "relroot/folding.hpp"
#include "relroot/poly.hpp"

namespace relroot {

/// X_A(v) as the product of x_alpha(v_alpha) over fiber(A) in fiber order.
/// Throws PreconditionError for a nontrivial Gamma.
Word<Poly> relative_element_word(const RelativeRootSystem& rrs, std::size_t a, const std::vector<Poly>& coords);
UnipotentMatrix embed_relative_element(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::size_t a,
                                       const std::vector<Poly>& coords);

/// One map N_{ABij}: coordinates over fiber(target) as polynomials in
/// u_1..u_m (coordinates of u in V_A) and v_1..v_n (coordinates of v in V_B).
struct NMapEntry {
  int i = 0;
  int j = 0;
  std::size_t target = 0;
  std::vector<Poly> coords;
};

struct NMapTable {
  std::size_t a = 0;
  std::size_t b = 0;
  RegistryPtr reg;
  std::vector<Poly> u;
  std::vector<Poly> v;
  /// Sorted by the collection order of their targets, then (i, j).
  std::vector<NMapEntry> entries;
  /// Whether the recomposed product was compared with the commutator matrix.
  bool verified = false;

  const NMapEntry* find(int i, int j) const;
};

/// Computes the commutator maps N_{ABij} for the pair (A, B) by collecting the commutator
/// [X_A(u), X_B(v)] with symbolic u, v. With `verify` the grouped product is
/// compared against the commutator as full matrices (InternalError on mismatch).
NMapTable compute_relative_commutator_maps(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::size_t a,
                                           std::size_t b, bool verify = true);

/// Relative roots of the form iA + jB (i, j > 0) in collection order.
std::vector<std::size_t> pair_targets(const RelativeRootSystem& rrs, std::size_t a, std::size_t b);

/// True when mA = -kB for some m, k >= 1.
bool opposite_collinear(const Coords& a, const Coords& b);

struct SumFormulaReport {
  bool pass = false;
  /// Correction maps u_i for i >= 2 with iA a relative root.
  std::vector<NMapEntry> corrections;
  nlohmann::json witness;
};

/// X_A(u + u') = X_A(u) X_A(u') prod_{i>1} X_{iA}(u_i): computes the u_i and
/// checks the identity as matrices.
SumFormulaReport check_sum_formula(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::size_t a);

enum class SurjectivityCase { A, B, C, D };
char to_char(SurjectivityCase c);
SurjectivityCase surjectivity_case_from_char(char c);

/// Cases whose hypotheses hold for (A, B). `units` lists the absolute values
/// of structure constants regarded as invertible for case (a).
std::vector<SurjectivityCase> applicable_surjectivity_cases(const RelativeRootSystem& rrs, const ChevalleyBasis& cb,
                                                std::size_t a, std::size_t b, const std::set<int>& units = {1});

struct SurjectivityReport {
  bool pass = false;
  /// Per target root: the basis pair and the coefficient found.
  nlohmann::json witness;
  /// Largest |coefficient| of N_{AB11} over all basis pairs.
  std::int64_t max_coefficient = 0;
};

/// Checks surjectivity of N_{AB11} under the named case. Throws
/// PreconditionError when the case hypothesis fails.
SurjectivityReport check_N11_surjectivity(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::size_t a,
                                          std::size_t b, SurjectivityCase which, const std::set<int>& units = {1});

/// Coefficients c of N_{AB11}(e_alpha, e_beta) = c e_gamma for every basis pair.
struct N11Coefficient {
  std::size_t alpha;
  std::size_t beta;
  std::size_t gamma;
  std::int64_t c;
};
std::vector<N11Coefficient> n11_coefficients(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::size_t a,
                                             std::size_t b);

/// Field used by spanning checks: 0 for the rationals, otherwise a prime.
using FieldChar = std::uint32_t;

/// Rank of integer vectors over the rationals (p = 0) or F_p.
std::size_t rank_over(const std::vector<std::vector<Rational>>& rows, FieldChar p);

struct SpanningReport {
  bool pass = false;
  bool vacuous = false;
  /// Per field: rank reached, target dimension, and method (probe or symbolic).
  nlohmann::json fields;
  nlohmann::json witness;
};

/// For (A, B) with A - B and A + B relative roots: checks that the three images span V_{A+B}
/// over Q, F_2, F_3, F_5. `seed` drives the random probes.
SpanningReport check_spanning_lemma2_2(const RelativeRootSystem& rrs, const ChevalleyBasis& cb, std::size_t a,
                                       std::size_t b, std::uint64_t seed = 0);

/// Spanning for C_l with J = {alpha_{l/2}, alpha_l}. Throws InvalidArgument
/// for odd l or l < 4.
SpanningReport check_spanning_lemma3(int l, std::uint64_t seed = 0);

/// Default probe count for random spanning vectors.
constexpr int kRandomProbes = 100;

}  // namespace relroot
