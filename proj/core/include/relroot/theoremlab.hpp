#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relroot/chevalley.hpp"
#include "relroot/folding.hpp"
#include "relroot/poly.hpp"
#include "relroot/report.hpp"

namespace relroot {

// ---------------------------------------------------------------------------
// Decomposition catalog

/// One case per irreducible component of every folding of one type: pass
/// when every relative root of a rank >= 2 component has a checked (B, C);
/// rank-1 components are recorded as skipped. Failures are recorded, not thrown.
std::vector<VerificationCase> verify_lemma1_folding(const FoldingSpec& spec);
std::vector<VerificationCase> verify_lemma1_type(const RootType& type);
/// All irreducible types of rank <= max_rank (at most 8), every Gamma, every
/// Gamma-invariant nonempty J.
std::vector<VerificationCase> verify_lemma1_catalog(int max_rank);

// ---------------------------------------------------------------------------
// Identities in rank 2. Signs are +1 / -1 per slot; the search walks the
// assignments with bit k of the mask set meaning slot k is negated.

/// Optional value of eps; empty keeps eps symbolic. Throws PreconditionError
/// when eps^2 - eps vanishes.
using EpsBinding = std::optional<Rational>;

using Signs = std::vector<int>;

/// g1(s Z^2, t Z^{k-4} eps d v) g2(s' Z, Z eps, u Z^{k-4} d v) = X_{2A1+A2}(Z^k v)
/// with d = (eps^2 - eps)^{-1}; slots g1.s, g1.t, g2.s, g2.u.
bool c2_long_identity_holds(int k, const EpsBinding& eps, const Signs& signs);
/// g1(s Z, t Z^{k-1} v) X_{2A1+A2}(x Z^{k+1} v) = X_{A1+A2}(Z^k v); slots g1.s, g1.t, x.
bool c2_short_identity_holds(int k, const EpsBinding& eps, const Signs& signs);
extern const std::array<const char*, 4> kC2LongSlots;
extern const std::array<const char*, 3> kC2ShortSlots;

/// Pair (long, short). Throws PreconditionError for k < 5.
std::pair<VerificationCase, VerificationCase> verify_C2_identities(int k, const EpsBinding& eps);

/// [X_{A2}(s Z v), X_{3A1+A2}(t Z^{k-1})] = X_{3A1+2A2}(Z^k v); slots s, t.
bool g2_long_identity_holds(int k, const Signs& signs);

/// Normal form of [X_{A1}(a Z eps), X_{A2}(b d Z^{k-2} v)]^{-1} [X_{A1}(c Z), X_{A2}(e eps d Z^{k-2} v)].
struct G2ShortOutcome {
  /// Support within {2A1+A2, 3A1+A2, 3A1+2A2}, leading coefficient Z^k v,
  /// trailing roots long, and the normal form re-multiplies to the left side.
  bool shape_ok = false;
  Word<Poly> factors;
};
G2ShortOutcome g2_short_identity(int k, const EpsBinding& eps, const Signs& signs);

/// Pair (long, short). Throws PreconditionError for k_long < 2 or k_short < 3.
std::pair<VerificationCase, VerificationCase> verify_G2_identities(int k_long, int k_short, const EpsBinding& eps);
/// The four-factor expansion of [X_{A1}(s), X_{A2}(t)] in G2.
VerificationCase verify_G2_expansion();

// ---------------------------------------------------------------------------
// Case schemas for the doubly laced types

enum class CaseSchema { F4Long, BlPairs, ClBC2, ClC2 };
const char* to_string(CaseSchema s);
CaseSchema case_schema_from_string(const std::string& s);

/// `l` is ignored for F4Long; `k` = 0 selects the threshold (2, -, 4, 3).
/// Throws PreconditionError for l or k outside the schema's range.
std::vector<VerificationCase> verify_case_schemas(CaseSchema schema, int l = 0, int k = 0);

// ---------------------------------------------------------------------------
// Suites over catalogs

/// Recomposition of the commutator maps checked as matrices for every pair
/// of every Gamma-trivial folding of rank <= max_rank; one case per type.
std::vector<VerificationCase> verify_commutator_maps_catalog(int max_rank);
VerificationCase verify_commutator_maps_type(const RootType& type);

/// Surjectivity cases (a)-(d), the C2 pair outside every case, and the
/// spanning statement on a fixed folding list.
std::vector<VerificationCase> verify_lemma2_suite(int simply_laced_max_rank, std::uint64_t seed);

/// Spanning for C_l, l in {4, 6}.
std::vector<VerificationCase> verify_lemma3_suite(std::uint64_t seed);

}  // namespace relroot
