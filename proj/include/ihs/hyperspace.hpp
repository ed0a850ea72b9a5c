#pragma once

#include <cstdint>
#include <vector>

#include "ihs/set_system.hpp"

namespace ihs {

/// A coloring assigns one relation index to every element of a carrier.
struct Coloring {
    std::vector<int> colors;

    std::size_t size() const { return colors.size(); }
};

/// A finite set {0..size-1} carrying one equivalence relation per index
/// i < relation_count, each stored as a dense class-label array.
///
/// Labels are canonical: within each relation, class identifiers are
/// renumbered in order of first occurrence, so structurally equal inputs
/// compare equal. Instances are immutable after construction and safe to
/// share across threads.
class Hyperspace {
public:
    Hyperspace(int relation_count, int size, std::vector<std::vector<int>> labels);

    int relation_count() const { return n_; }
    int size() const { return size_; }
    const std::vector<std::vector<int>>& labels() const { return labels_; }

    int label(int relation, int element) const {
        check_relation(relation);
        check_element(element);
        return labels_[relation][element];
    }

    int class_count(int relation) const {
        check_relation(relation);
        return static_cast<int>(class_sizes_[relation].size());
    }

    int class_size(int relation, int element) const {
        return class_sizes_[relation][label(relation, element)];
    }

    /// All elements sharing the element's class under the relation,
    /// ascending. Always contains the element itself.
    std::vector<int> class_of(int element, int relation) const;

    /// Intersection of the element's classes over all relations, ascending.
    std::vector<int> total_intersection(int element) const;

    friend bool operator==(const Hyperspace& a, const Hyperspace& b) {
        return a.n_ == b.n_ && a.size_ == b.size_ && a.labels_ == b.labels_;
    }

private:
    void check_relation(int relation) const;
    void check_element(int element) const;

    int n_;
    int size_;
    std::vector<std::vector<int>> labels_;       // relation x element -> class id
    std::vector<std::vector<int>> class_sizes_;  // relation x class id -> size
};

/// True iff for every element and every member I of the profile the
/// intersection of its classes over I has at most `bound` elements. The
/// profile's ground set must equal the relation index set. The
/// intersection over the empty member is the whole carrier.
bool is_grid_for(const Hyperspace& space, const SetSystem& profile, std::uint64_t bound);

struct AcceptabilityReport {
    bool acceptable;                                   // always true on finite carriers
    std::uint64_t max_count;                           // max over (a, i) of the counts below
    std::vector<std::vector<std::uint64_t>> counts;    // relation x element: |{x in [a]_i : color(x) = i}|
};

/// Counts, for every element a and relation i, the elements of [a]_i
/// carrying color i. Every coloring of a finite carrier is acceptable; the
/// count table is the diagnostic the stream audit builds on. The coloring
/// must be total with colors below relation_count.
AcceptabilityReport is_acceptable(const Hyperspace& space, const Coloring& coloring);

void validate_coloring(const Coloring& coloring, int relation_count, std::size_t carrier_size);

}  // namespace ihs
