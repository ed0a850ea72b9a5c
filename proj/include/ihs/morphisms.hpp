#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ihs/cubes.hpp"
#include "ihs/extended_nat.hpp"
#include "ihs/hyperspace.hpp"

namespace ihs {

enum class MorphismKind { Embedding, WeakEmbedding, Parbedding };

struct MorphismWitness {
    MorphismKind kind;
    std::vector<int> map;   // domain element -> target element, injective
    std::vector<int> pi;    // WeakEmbedding: permutation of the relation indices
    std::vector<int> beta;  // Parbedding: target relation -> domain relation
};

/// f is an embedding of b into a iff it is injective and class equality is
/// preserved both ways: [x]_i = [y]_i iff [f(x)]_i = [f(y)]_i. Requires
/// equal relation counts.
bool verify_embedding(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map);

/// Embedding up to a permutation pi of the relation indices:
/// [x]_{pi(i)} = [y]_{pi(i)} iff [f(x)]_i = [f(y)]_i.
bool verify_weak_embedding(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map,
                           const std::vector<int>& pi);

/// One-directional variant: beta maps a's relation indices into b's, and
/// [x]_{beta(i)} = [y]_{beta(i)} implies [f(x)]_i = [f(y)]_i. f must be
/// injective; the converse implication is not required.
bool verify_parbedding(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map,
                       const std::vector<int>& beta);

enum class SearchStatus { Found, None, Indeterminate };

struct SearchOutcome {
    SearchStatus status;
    std::optional<MorphismWitness> witness;
    std::uint64_t nodes;
};

constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Complete backtracking search. Found witnesses always verify; None is
/// only returned after exhausting the space; running out of node budget
/// yields Indeterminate, never None. The returned witness is the
/// lexicographically least one (ordering maps as sequences, and weak/par
/// variants by (pi, map) resp. (beta, map)). When the budget runs out
/// midway, the weak/parbedding scans keep trying later index maps, so a
/// witness found afterwards is least only among fully searched
/// candidates.
SearchOutcome find_embedding(const Hyperspace& b, const Hyperspace& a,
                             std::uint64_t node_budget = kDefaultNodeBudget);
SearchOutcome find_weak_embedding(const Hyperspace& b, const Hyperspace& a,
                                  std::uint64_t node_budget = kDefaultNodeBudget);
SearchOutcome find_parbedding(const Hyperspace& b, const Hyperspace& a,
                              std::uint64_t node_budget = kDefaultNodeBudget);

/// Transports a coloring of a back along a parbedding (map, beta) of b into
/// a: the result colors x with beta(color(f(x))). The witness pair is
/// re-verified and rejected if it is not a parbedding.
Coloring pullback_coloring(const Coloring& coloring, const Hyperspace& b, const Hyperspace& a,
                           const std::vector<int>& map, const std::vector<int>& beta);

enum class Answer { Yes, No, Indeterminate };

/// Decides, up to the factor-size budget, whether every cube of the tuple
/// with factors <= max_factor embeds into a. Smaller cubes embed
/// coordinatewise into larger ones, so the all-max_factor cube decides the
/// whole family.
Answer embeds_all_small_cubes(const Hyperspace& a, const SetTuple& tuple, std::uint64_t max_factor,
                              std::uint64_t node_budget = kDefaultNodeBudget);

struct FcnEstimate {
    ExtendedNat value;               // least d whose witness passed, infinity if none can
    std::optional<SetTuple> witness; // n-tuple of nonempty subsets of d
    bool indeterminate;              // some candidate ran out of budget before any passed
};

/// Budget-relative stand-in for the finite cube number: the least d <= n
/// such that some n-tuple of nonempty subsets of {0..d-1} has all its
/// cubes with factors <= max_factor embeddable into a. The result is a
/// lower bound on the unbounded quantity; candidates are scanned in
/// lexicographic order.
FcnEstimate fcn_estimate(const Hyperspace& a, std::uint64_t max_factor,
                         std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace ihs
