#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ihs/extended_nat.hpp"

namespace ihs {

/// Subsets of a ground set {0..n-1} are stored as bit masks, bit i = element i.
using Mask = std::uint64_t;

constexpr Mask mask_bit(int i) { return Mask{1} << i; }
constexpr int mask_size(Mask m) { return std::popcount(m); }
Mask mask_from_indices(const std::vector<int>& indices);
std::vector<int> indices_from_mask(Mask m);

/// A finite family of subsets of {0..ground-1}, deduplicated and kept in
/// ascending mask order. Ground sets are limited to 64 elements.
class SetSystem {
public:
    SetSystem(int ground, std::vector<Mask> members);

    /// The family of all k-element subsets of {0..ground-1}.
    static SetSystem all_k_subsets(int ground, int k);

    int ground() const { return ground_; }
    Mask ground_mask() const { return ground_ >= 64 ? ~Mask{0} : mask_bit(ground_) - 1; }
    const std::vector<Mask>& members() const { return members_; }
    bool contains(Mask member) const;

    friend bool operator==(const SetSystem& a, const SetSystem& b) {
        return a.ground_ == b.ground_ && a.members_ == b.members_;
    }

private:
    int ground_;
    std::vector<Mask> members_;
};

/// An n-tuple of subsets of {0..codomain-1}. Entries may repeat or be empty.
struct SetTuple {
    int codomain;
    std::vector<Mask> sets;

    SetTuple(int codomain, std::vector<Mask> sets);
    int length() const { return static_cast<int>(sets.size()); }
};

/// True iff t meets every member of the family. The empty set is a
/// transversal of the empty family; nothing is a transversal of a family
/// containing the empty set.
bool is_transversal(Mask t, const SetSystem& sys);

/// Least cardinality of a transversal; infinity iff the empty set is a
/// member, 0 iff the family is empty. Exact branch-and-bound hitting set.
ExtendedNat transversal_number(const SetSystem& sys);

/// Transversal number of the (deduplicated) family {S_0..S_{n-1}} over the
/// tuple's codomain.
ExtendedNat tuple_transversal_number(const SetTuple& tuple);

/// Least d admitting d transversals with empty intersection; infinity iff
/// some member has at most one element; 1 iff the family is empty.
///
/// Solved as an exact cover problem: a set is a transversal iff its
/// complement contains no member, and d transversals intersect emptily iff
/// their complements cover the ground set, so the answer is the minimum
/// number of member-free sets covering {0..n-1}. Grounds above 20 are
/// rejected (the solver tabulates all 2^n subsets).
ExtendedNat depth(const SetSystem& sys);

/// Reference solver for depth: breadth-first search over intersections of
/// transversal tuples, using nothing but the transversal definition.
/// Retained for cross-validation of the cover reformulation.
ExtendedNat depth_by_tuple_search(const SetSystem& sys);

/// The system over ground n of index sets I with an empty coordinate
/// intersection of the tuple. The intersection over the empty index set is
/// the full codomain, so the empty set is never a member; codomain 0 is
/// rejected. Upward closed.
SetSystem induced_system(const SetTuple& tuple);

struct Restriction {
    SetSystem system;            // over ground |subset|, contiguous indices
    std::vector<int> index_map;  // new index -> original element
};

/// Members contained in the given subset, re-indexed onto {0..|subset|-1}.
/// The subset must be nonempty.
Restriction restrict_to(const SetSystem& sys, Mask subset);

/// True iff for every permutation p of the ground set there are indices
/// 0 = i_0 <= i_1 <= ... <= i_d < n such that each of the d windows
/// {p(j) : i_k <= j <= i_{k+1}} contains a member. Iterates all n!
/// permutations; grounds above 8 are rejected. Requires d <= n.
bool dandy_to_depth(const SetSystem& sys, int d);

/// Drops every member that strictly contains another member. Transversal
/// number and depth are invariant under this normalization.
SetSystem remove_supersets(const SetSystem& sys);

std::string member_to_string(Mask member);
std::string system_to_string(const SetSystem& sys);

}  // namespace ihs
