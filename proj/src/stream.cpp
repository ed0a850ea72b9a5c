#include "ihs/stream.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ihs {

DeclaredProfile::DeclaredProfile(SetSystem sets_in, std::vector<std::optional<std::uint64_t>> bounds_in)
    : sets(std::move(sets_in)), bounds(std::move(bounds_in)) {
    if (bounds.size() != sets.members().size())
        throw std::invalid_argument("DeclaredProfile: one bound slot per member required");
}

bool DeclaredProfile::contains_full_index_set() const {
    return sets.contains(sets.ground_mask());
}

std::optional<std::uint64_t> DeclaredProfile::bound_for(Mask member) const {
    const auto& members = sets.members();
    const auto it = std::lower_bound(members.begin(), members.end(), member);
    if (it == members.end() || *it != member)
        return std::nullopt;
    return bounds[static_cast<std::size_t>(it - members.begin())];
}

PrefixIndex::PrefixIndex(const StreamHyperspace& stream, std::uint64_t prefix_length)
    : length_(prefix_length), n_(stream.relation_count()) {
    if (const auto total = stream.total_size(); total && prefix_length > *total)
        throw std::invalid_argument("prefix length exceeds the stream's size");
    class_ids_.assign(n_, std::vector<int>(length_, 0));
    first_occ_.assign(n_, std::vector<std::uint64_t>(length_, 0));
    class_counts_.assign(n_, 0);
    max_first_occ_.assign(length_, 0);

    std::unordered_set<std::string> labels_seen;
    labels_seen.reserve(length_);
    std::vector<std::unordered_map<std::string, std::pair<int, std::uint64_t>>> first_by_key(n_);
    for (std::uint64_t k = 0; k < length_; ++k) {
        if (!labels_seen.insert(stream.element_label(k)).second)
            throw std::runtime_error("stream enumeration repeats an element");
        std::uint64_t max_m = 0;
        for (int i = 0; i < n_; ++i) {
            auto [it, inserted] =
                first_by_key[i].try_emplace(stream.class_key(i, k), std::pair<int, std::uint64_t>{class_counts_[i], k});
            if (inserted)
                ++class_counts_[i];
            class_ids_[i][k] = it->second.first;
            first_occ_[i][k] = it->second.second;
            max_m = std::max(max_m, it->second.second);
        }
        max_first_occ_[k] = max_m;
    }

    cumulative_by_max_.assign(length_ + 1, 0);
    if (length_ > 0) {
        std::vector<std::uint64_t> histogram(length_, 0);
        for (std::uint64_t k = 0; k < length_; ++k)
            ++histogram[max_first_occ_[k]];
        std::uint64_t running = 0;
        for (std::uint64_t k = 0; k < length_; ++k) {
            running += histogram[k];
            cumulative_by_max_[k + 1] = running;
        }
    }
}

std::uint64_t PrefixIndex::union_bound_within_prefix(std::uint64_t k) const {
    if (k >= length_)
        throw std::out_of_range("union_bound_within_prefix: index beyond the prefix");
    return cumulative_by_max_[k + 1];
}

Hyperspace PrefixIndex::to_hyperspace() const {
    return Hyperspace(n_, static_cast<int>(length_), class_ids_);
}

Coloring greedy_coloring(const StreamHyperspace& stream, std::uint64_t prefix_length) {
    if (!stream.declared_profile().contains_full_index_set())
        throw std::invalid_argument("greedy_coloring: declared profile must contain the full index set");
    const PrefixIndex index(stream, prefix_length);
    Coloring coloring;
    coloring.colors.resize(prefix_length);
    for (std::uint64_t k = 0; k < prefix_length; ++k) {
        const std::uint64_t target = index.max_first_occurrence(k);
        for (int i = 0; i < index.relation_count(); ++i)
            if (index.first_occurrence(i, k) == target) {
                coloring.colors[k] = i;
                break;
            }
    }
    return coloring;
}

Coloring constant_coloring(int color, std::uint64_t prefix_length, int relation_count) {
    if (color < 0 || color >= relation_count)
        throw std::invalid_argument("constant_coloring: color outside the relation index set");
    Coloring coloring;
    coloring.colors.assign(prefix_length, color);
    return coloring;
}

CertificateBound certificate_bound(const StreamHyperspace& stream, std::uint64_t k, int relation,
                                   std::uint64_t prefix_length) {
    if (relation < 0 || relation >= stream.relation_count())
        throw std::out_of_range("certificate_bound: relation index out of range");
    if (k >= prefix_length)
        throw std::out_of_range("certificate_bound: element index beyond the prefix");
    if (const auto closed = stream.tuple_union_bound(k))
        return CertificateBound{*closed, true};
    const PrefixIndex index(stream, prefix_length);
    return CertificateBound{index.union_bound_within_prefix(k), false};
}

std::uint64_t AuditReport::max_count() const {
    std::uint64_t out = 0;
    for (const AuditEntry& e : counts)
        out = std::max(out, e.count);
    return out;
}

namespace {

// Bounded spot check that the stream's pairwise predicate agrees with its
// class keys on the prefix; keys make same_class an equivalence relation,
// so any disagreement breaks the stream's own contract.
void check_predicate_consistency(const StreamHyperspace& stream, const PrefixIndex& index) {
    const std::uint64_t window = std::min<std::uint64_t>(index.length(), 48);
    for (int i = 0; i < index.relation_count(); ++i)
        for (std::uint64_t x = 0; x < window; ++x)
            for (std::uint64_t y = x; y < std::min(index.length(), x + 12); ++y) {
                const bool by_key = index.class_id(i, x) == index.class_id(i, y);
                if (stream.same_class(i, x, y) != by_key)
                    throw std::runtime_error("stream class predicate disagrees with its class keys");
            }
}

}  // namespace

AuditReport acceptability_audit(const StreamHyperspace& stream, const Coloring& coloring,
                                std::uint64_t prefix_length) {
    AuditReport report;
    report.prefix_length = prefix_length;
    if (prefix_length == 0)
        return report;
    validate_coloring(coloring, stream.relation_count(), prefix_length);
    const PrefixIndex index(stream, prefix_length);
    check_predicate_consistency(stream, index);
    const int n = index.relation_count();

    // Count, per relation and class, the elements carrying that relation's
    // color; every member of the class shares the count.
    std::vector<std::vector<std::uint64_t>> per_class(n);
    for (int i = 0; i < n; ++i)
        per_class[i].assign(index.class_count(i), 0);
    for (std::uint64_t k = 0; k < prefix_length; ++k)
        ++per_class[coloring.colors[k]][index.class_id(coloring.colors[k], k)];

    report.counts.reserve(prefix_length * n);
    for (std::uint64_t k = 0; k < prefix_length; ++k) {
        const std::uint64_t bound = index.union_bound_within_prefix(k);
        for (int i = 0; i < n; ++i) {
            const AuditEntry entry{k, i, per_class[i][index.class_id(i, k)], bound};
            report.counts.push_back(entry);
            if (entry.count > entry.bound)
                report.certificate_violations.push_back(entry);
        }
    }

    // Declared-profile check: group elements by their class tuple over each
    // declared member and compare the group sizes against the bound.
    const auto& profile = stream.declared_profile();
    for (std::size_t mi = 0; mi < profile.sets.members().size(); ++mi) {
        const Mask member = profile.sets.members()[mi];
        const std::optional<std::uint64_t> bound = profile.bounds[mi];
        const std::vector<int> rels = indices_from_mask(member);
        std::map<std::vector<int>, std::pair<std::uint64_t, std::uint64_t>> groups;  // key -> (count, least element)
        std::vector<int> key(rels.size());
        std::uint64_t max_count = 0;
        for (std::uint64_t k = 0; k < prefix_length; ++k) {
            for (std::size_t j = 0; j < rels.size(); ++j)
                key[j] = index.class_id(rels[j], k);
            auto [it, inserted] = groups.try_emplace(key, std::pair<std::uint64_t, std::uint64_t>{0, k});
            ++it->second.first;
            max_count = std::max(max_count, it->second.first);
        }
        report.profile.push_back(ProfileObservation{member, max_count, bound});
        if (bound) {
            std::vector<ProfileViolation> violations;
            for (const auto& [k, v] : groups)
                if (v.first > *bound)
                    violations.push_back(ProfileViolation{member, v.second, v.first, *bound});
            std::sort(violations.begin(), violations.end(),
                      [](const ProfileViolation& x, const ProfileViolation& y) { return x.witness < y.witness; });
            report.profile_violations.insert(report.profile_violations.end(), violations.begin(), violations.end());
        }
    }
    return report;
}

namespace {

DeclaredProfile cube_stream_profile(const SetTuple& tuple, const std::vector<std::optional<std::uint64_t>>& caps) {
    const int n = tuple.length();
    if (n < 1 || n > 20)
        throw std::invalid_argument("CubeStream: relation count must be in 1..20");
    std::vector<Mask> members;
    std::vector<std::optional<std::uint64_t>> bounds;
    std::vector<std::pair<Mask, std::uint64_t>> collected;
    for (Mask idx = 0; idx < (Mask{1} << n); ++idx) {
        Mask free = tuple.codomain >= 64 ? ~Mask{0} : (mask_bit(tuple.codomain) - 1);
        for (int i : indices_from_mask(idx))
            free &= tuple.sets[i];
        // The class intersection over idx fixes every coordinate outside
        // `free`; it is finite iff every free coordinate is capped.
        std::uint64_t bound = 1;
        bool finite = true;
        for (int j : indices_from_mask(free)) {
            if (!caps[j]) {
                finite = false;
                break;
            }
            bound *= *caps[j];
        }
        if (finite)
            collected.emplace_back(idx, bound);
    }
    std::sort(collected.begin(), collected.end());
    for (const auto& [m, b] : collected) {
        members.push_back(m);
        bounds.emplace_back(b);
    }
    return DeclaredProfile(SetSystem(n, std::move(members)), std::move(bounds));
}

}  // namespace

CubeStream::CubeStream(SetTuple tuple, std::vector<std::optional<std::uint64_t>> factor_caps)
    : tuple_(std::move(tuple)), caps_(std::move(factor_caps)) {
    if (tuple_.length() < 1)
        throw std::invalid_argument("CubeStream: tuple must be nonempty");
    if (caps_.empty())
        caps_.assign(static_cast<std::size_t>(tuple_.codomain), std::nullopt);
    if (static_cast<int>(caps_.size()) != tuple_.codomain)
        throw std::invalid_argument("CubeStream: one factor cap per coordinate required");
    for (const auto& cap : caps_)
        if (cap && *cap == 0)
            throw std::invalid_argument("CubeStream: empty factor");
    bool all_capped = true;
    std::uint64_t total = 1;
    for (const auto& cap : caps_) {
        if (!cap) {
            all_capped = false;
            break;
        }
        total *= *cap;
    }
    if (all_capped)
        total_size_ = total;
    profile_ = std::make_unique<DeclaredProfile>(cube_stream_profile(tuple_, caps_));
}

CubeStream::CubeStream(SetTuple tuple) : CubeStream(std::move(tuple), {}) {}

const DeclaredProfile& CubeStream::declared_profile() const { return *profile_; }

void CubeStream::extend(std::uint64_t k) const {
    // Diagonal enumeration: tuples grouped by coordinate sum, lexicographic
    // within a group.
    const int m = tuple_.codomain;
    while (cache_.size() <= k) {
        if (total_size_ && cache_.size() >= *total_size_)
            throw std::out_of_range("CubeStream: enumeration exhausted");
        const std::uint64_t sum = next_sum_++;
        std::vector<std::uint64_t> current(m, 0);
        auto emit = [&](auto&& self, int j, std::uint64_t remaining) -> void {
            if (j == m - 1) {
                if (!caps_[j] || remaining < *caps_[j]) {
                    current[j] = remaining;
                    cache_.push_back(current);
                }
                return;
            }
            const std::uint64_t limit = caps_[j] ? std::min(remaining, *caps_[j] - 1) : remaining;
            for (std::uint64_t v = 0; v <= limit; ++v) {
                current[j] = v;
                self(self, j + 1, remaining - v);
            }
        };
        if (m == 0) {
            if (sum == 0)
                cache_.push_back(current);
        } else {
            emit(emit, 0, sum);
        }
    }
}

const std::vector<std::uint64_t>& CubeStream::coordinates(std::uint64_t k) const {
    extend(k);
    return cache_[k];
}

std::string CubeStream::class_key(int relation, std::uint64_t k) const {
    if (relation < 0 || relation >= tuple_.length())
        throw std::out_of_range("CubeStream: relation index out of range");
    const auto& coords = coordinates(k);
    std::string key;
    for (int j = 0; j < tuple_.codomain; ++j)
        if ((tuple_.sets[relation] & mask_bit(j)) == 0) {
            key += std::to_string(coords[j]);
            key += ',';
        }
    return key;
}

std::string CubeStream::element_label(std::uint64_t k) const {
    const auto& coords = coordinates(k);
    std::string out = "(";
    for (int j = 0; j < tuple_.codomain; ++j) {
        if (j)
            out += ',';
        out += std::to_string(coords[j]);
    }
    return out + ")";
}

std::optional<std::uint64_t> CubeStream::tuple_union_bound(std::uint64_t k) const {
    // Exact merge count: an element lies in the total intersection of
    // a_{r_0}.. iff each coordinate j agrees with a_{r_t} whenever j is
    // outside S_t. Distinct outcomes are counted; coordinates free in every
    // S_t multiply by their cap (none may be uncapped).
    const int n = tuple_.length();
    const int m = tuple_.codomain;
    Mask always_free = m >= 64 ? ~Mask{0} : (mask_bit(m) - 1);
    for (Mask s : tuple_.sets)
        always_free &= s;
    std::uint64_t multiplier = 1;
    for (int j : indices_from_mask(always_free)) {
        if (!caps_[j])
            return std::nullopt;
        multiplier *= *caps_[j];
    }

    std::uint64_t tuples = 1;
    for (int i = 0; i < n; ++i) {
        if (tuples > 65536 / (k + 1))
            return std::nullopt;  // closed form too wide to enumerate
        tuples *= k + 1;
    }

    std::set<std::vector<std::int64_t>> outcomes;
    std::vector<std::uint64_t> choice(n, 0);
    std::vector<std::int64_t> merged(m);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::uint64_t rest = t;
        for (int i = 0; i < n; ++i) {
            choice[i] = rest % (k + 1);
            rest /= k + 1;
        }
        std::fill(merged.begin(), merged.end(), -1);
        bool consistent = true;
        for (int i = 0; i < n && consistent; ++i) {
            const auto& coords = coordinates(choice[i]);
            for (int j = 0; j < m; ++j) {
                if (tuple_.sets[i] & mask_bit(j))
                    continue;
                const std::int64_t v = static_cast<std::int64_t>(coords[j]);
                if (merged[j] == -1)
                    merged[j] = v;
                else if (merged[j] != v) {
                    consistent = false;
                    break;
                }
            }
        }
        if (consistent)
            outcomes.insert(merged);
    }
    return outcomes.size() * multiplier;
}

SingleClassStream::SingleClassStream(int relation_count, std::uint64_t claimed_bound)
    : n_(relation_count),
      profile_(SetSystem(relation_count, {relation_count >= 64 ? ~Mask{0} : (mask_bit(relation_count) - 1)}),
               {claimed_bound}) {
    if (relation_count < 1)
        throw std::invalid_argument("SingleClassStream: relation count must be positive");
}

std::string SingleClassStream::class_key(int relation, std::uint64_t k) const {
    if (relation < 0 || relation >= n_)
        throw std::out_of_range("SingleClassStream: relation index out of range");
    (void)k;
    return "";
}

BlockStream::BlockStream(std::uint64_t block_size)
    : block_size_(block_size), profile_(SetSystem(1, {mask_bit(0)}), {block_size}) {
    if (block_size_ == 0)
        throw std::invalid_argument("BlockStream: block size must be positive");
}

std::string BlockStream::class_key(int relation, std::uint64_t k) const {
    if (relation != 0)
        throw std::out_of_range("BlockStream: relation index out of range");
    return std::to_string(k / block_size_);
}

}  // namespace ihs
