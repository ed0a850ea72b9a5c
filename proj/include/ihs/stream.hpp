#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ihs/hyperspace.hpp"
#include "ihs/set_system.hpp"

namespace ihs {

/// Index sets whose class intersections the stream asserts to be finite,
/// each optionally with a numeric size bound. The assertion is trusted
/// input: the audit checks it on prefixes and reports contradictions, it
/// never proves it.
struct DeclaredProfile {
    SetSystem sets;
    std::vector<std::optional<std::uint64_t>> bounds;  // parallel to sets.members()

    DeclaredProfile(SetSystem sets_in, std::vector<std::optional<std::uint64_t>> bounds_in);
    bool contains_full_index_set() const;
    std::optional<std::uint64_t> bound_for(Mask member) const;
};

/// A countable structure presented as a fixed nonrepeating enumeration
/// a_0, a_1, ... with decidable per-relation class equality.
///
/// Classes are identified by canonical keys; same_class defaults to key
/// equality. element_label must be injective (audited on every prefix the
/// library touches). Enumeration access is meant for one thread at a time.
class StreamHyperspace {
public:
    virtual ~StreamHyperspace() = default;

    virtual int relation_count() const = 0;

    /// Canonical token for the class of a_k under the relation: two
    /// elements share a class iff their keys are equal.
    virtual std::string class_key(int relation, std::uint64_t k) const = 0;

    virtual bool same_class(int relation, std::uint64_t x, std::uint64_t y) const {
        return class_key(relation, x) == class_key(relation, y);
    }

    /// Printable identity of a_k, unique across the enumeration.
    virtual std::string element_label(std::uint64_t k) const = 0;

    virtual const DeclaredProfile& declared_profile() const = 0;

    /// Structure-wide upper bound on the union over tuples (r_0..r_{n-1})
    /// with all r_t <= k of the total class intersections of a_{r_0}..,
    /// when the stream has a closed form for it. Such a bound is valid for
    /// every prefix length.
    virtual std::optional<std::uint64_t> tuple_union_bound(std::uint64_t k) const {
        (void)k;
        return std::nullopt;
    }

    /// Total number of elements for finite streams, nullopt for infinite.
    virtual std::optional<std::uint64_t> total_size() const { return std::nullopt; }
};

/// Materialized class tables for a prefix a_0..a_{N-1}: per-relation class
/// ids in first-occurrence order and, per element and relation, the least
/// index whose class contains it.
class PrefixIndex {
public:
    PrefixIndex(const StreamHyperspace& stream, std::uint64_t prefix_length);

    std::uint64_t length() const { return length_; }
    int relation_count() const { return n_; }
    int class_id(int relation, std::uint64_t k) const { return class_ids_[relation][k]; }
    int class_count(int relation) const { return class_counts_[relation]; }

    /// m_i(k): least m with a_k in the class of a_m under the relation.
    std::uint64_t first_occurrence(int relation, std::uint64_t k) const { return first_occ_[relation][k]; }

    /// max over relations of first_occurrence.
    std::uint64_t max_first_occurrence(std::uint64_t k) const { return max_first_occ_[k]; }

    /// Number of prefix elements whose every relation has a representative
    /// at index <= k; the certificate bound evaluated within the prefix.
    std::uint64_t union_bound_within_prefix(std::uint64_t k) const;

    /// The prefix as a finite hyperspace (labels are the class ids).
    Hyperspace to_hyperspace() const;

private:
    std::uint64_t length_;
    int n_;
    std::vector<std::vector<int>> class_ids_;           // relation x element
    std::vector<int> class_counts_;
    std::vector<std::vector<std::uint64_t>> first_occ_; // relation x element
    std::vector<std::uint64_t> max_first_occ_;
    std::vector<std::uint64_t> cumulative_by_max_;      // union_bound_within_prefix table
};

/// The greedy coloring of the prefix: a_k gets the least relation index j
/// maximizing m_j(k), where m_i(k) is the least m with a_k in [a_m]_i.
/// Restricting to a shorter prefix reproduces the shorter prefix's
/// coloring. Requires the declared profile to contain the full index set;
/// throws if the enumeration repeats an element within the prefix.
Coloring greedy_coloring(const StreamHyperspace& stream, std::uint64_t prefix_length);

Coloring constant_coloring(int color, std::uint64_t prefix_length, int relation_count);

struct CertificateBound {
    std::uint64_t value;
    bool structure_wide;  // valid for every prefix length, not just this one
};

/// Upper bound on |{x in [a_k]_i : color(x) = i}| for the greedy coloring,
/// provided the declared profile is honest: every such x has all its
/// first-occurrence indices <= k, so the count is at most the size of the
/// union of total intersections over index tuples bounded by k. Uses the
/// stream's closed form when available, otherwise the union evaluated
/// within the prefix (an estimate that later prefixes may exceed). The
/// value does not depend on the relation index.
CertificateBound certificate_bound(const StreamHyperspace& stream, std::uint64_t k, int relation,
                                   std::uint64_t prefix_length);

struct AuditEntry {
    std::uint64_t element;
    int relation;
    std::uint64_t count;
    std::uint64_t bound;
};

struct ProfileViolation {
    Mask member;
    std::uint64_t witness;  // least element of the offending intersection
    std::uint64_t count;
    std::uint64_t bound;
};

struct ProfileObservation {
    Mask member;
    std::uint64_t max_count;  // largest class intersection seen in the prefix
    std::optional<std::uint64_t> bound;
};

struct AuditReport {
    std::uint64_t prefix_length = 0;
    std::vector<AuditEntry> counts;                    // every (element, relation)
    std::vector<AuditEntry> certificate_violations;    // count exceeds its bound
    std::vector<ProfileViolation> profile_violations;  // declared bound exceeded
    std::vector<ProfileObservation> profile;           // per declared member

    std::uint64_t max_count() const;
};

/// Counts, for every prefix element a and relation i, the prefix elements
/// of [a]_i colored i, next to their certificate bounds, and checks every
/// declared profile bound within the prefix. A certificate violation
/// falsifies the declared profile or the coloring's greedy provenance;
/// violations are reported, never fatal.
AuditReport acceptability_audit(const StreamHyperspace& stream, const Coloring& coloring,
                                std::uint64_t prefix_length);

/// Product of countable (or capped) factors with one relation per tuple
/// entry, enumerated diagonally: tuples ordered by coordinate sum, then
/// lexicographically. A factor cap of nullopt means the factor is all of
/// the naturals.
class CubeStream : public StreamHyperspace {
public:
    /// An empty factor_caps vector stands for all factors unbounded.
    CubeStream(SetTuple tuple, std::vector<std::optional<std::uint64_t>> factor_caps);
    explicit CubeStream(SetTuple tuple);  // all factors unbounded

    int relation_count() const override { return tuple_.length(); }
    std::string class_key(int relation, std::uint64_t k) const override;
    std::string element_label(std::uint64_t k) const override;
    const DeclaredProfile& declared_profile() const override;
    std::optional<std::uint64_t> tuple_union_bound(std::uint64_t k) const override;
    std::optional<std::uint64_t> total_size() const override { return total_size_; }

    const std::vector<std::uint64_t>& coordinates(std::uint64_t k) const;
    const SetTuple& tuple() const { return tuple_; }

private:
    void extend(std::uint64_t k) const;

    SetTuple tuple_;
    std::vector<std::optional<std::uint64_t>> caps_;
    std::optional<std::uint64_t> total_size_;
    std::unique_ptr<DeclaredProfile> profile_;
    mutable std::vector<std::vector<std::uint64_t>> cache_;
    mutable std::uint64_t next_sum_ = 0;
};

/// Relations that all collapse the whole carrier into one class, with a
/// deliberately unprovable profile claim: the full index set is declared
/// finite with the given bound although every class is the entire stream.
/// The audit reports the lie as soon as the prefix outgrows the bound.
class SingleClassStream : public StreamHyperspace {
public:
    SingleClassStream(int relation_count, std::uint64_t claimed_bound);

    int relation_count() const override { return n_; }
    std::string class_key(int relation, std::uint64_t k) const override;
    std::string element_label(std::uint64_t k) const override { return std::to_string(k); }
    const DeclaredProfile& declared_profile() const override { return profile_; }

private:
    int n_;
    DeclaredProfile profile_;
};

/// One relation whose classes are consecutive blocks of the given size.
class BlockStream : public StreamHyperspace {
public:
    explicit BlockStream(std::uint64_t block_size);

    int relation_count() const override { return 1; }
    std::string class_key(int relation, std::uint64_t k) const override;
    std::string element_label(std::uint64_t k) const override { return std::to_string(k); }
    const DeclaredProfile& declared_profile() const override { return profile_; }

private:
    std::uint64_t block_size_;
    DeclaredProfile profile_;
};

}  // namespace ihs
