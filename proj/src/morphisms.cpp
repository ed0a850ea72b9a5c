#include "ihs/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ihs {

namespace {

void validate_map(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != b.size())
        throw std::invalid_argument("morphism map must be total on the domain");
    for (int v : map)
        if (v < 0 || v >= a.size())
            throw std::out_of_range("morphism map value outside the target carrier");
}

bool injective(const std::vector<int>& map, int target_size) {
    std::vector<char> used(target_size, 0);
    for (int v : map) {
        if (used[v])
            return false;
        used[v] = 1;
    }
    return true;
}

bool is_permutation(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        return false;
    std::vector<char> seen(n, 0);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

bool verify_embedding(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map) {
    std::vector<int> identity(b.relation_count());
    std::iota(identity.begin(), identity.end(), 0);
    return verify_weak_embedding(b, a, map, identity);
}

bool verify_weak_embedding(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map,
                           const std::vector<int>& pi) {
    if (b.relation_count() != a.relation_count())
        throw std::invalid_argument("weak embedding requires equal relation counts");
    if (!is_permutation(pi, a.relation_count()))
        throw std::invalid_argument("pi must be a permutation of the relation indices");
    validate_map(b, a, map);
    if (!injective(map, a.size()))
        return false;
    for (int x = 0; x < b.size(); ++x)
        for (int y = x + 1; y < b.size(); ++y)
            for (int i = 0; i < a.relation_count(); ++i) {
                const bool in_b = b.label(pi[i], x) == b.label(pi[i], y);
                const bool in_a = a.label(i, map[x]) == a.label(i, map[y]);
                if (in_b != in_a)
                    return false;
            }
    return true;
}

bool verify_parbedding(const Hyperspace& b, const Hyperspace& a, const std::vector<int>& map,
                       const std::vector<int>& beta) {
    if (static_cast<int>(beta.size()) != a.relation_count())
        throw std::invalid_argument("beta must be defined on the target's relation indices");
    for (int v : beta)
        if (v < 0 || v >= b.relation_count())
            throw std::out_of_range("beta value outside the domain's relation indices");
    validate_map(b, a, map);
    if (!injective(map, a.size()))
        return false;
    for (int x = 0; x < b.size(); ++x)
        for (int y = x + 1; y < b.size(); ++y)
            for (int i = 0; i < a.relation_count(); ++i) {
                if (b.label(beta[i], x) == b.label(beta[i], y) &&
                    a.label(i, map[x]) != a.label(i, map[y]))
                    return false;
            }
    return true;
}

namespace {

// Shared backtracking core. Relations of the domain are viewed through
// dom_rel[i] (the relation of b compared against relation i of a);
// bidirectional toggles the reverse implication (embeddings) off
// (parbeddings).
struct MapSearch {
    const Hyperspace& b;
    const Hyperspace& a;
    std::vector<int> dom_rel;
    bool bidirectional;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted_budget = false;
    std::vector<int> assignment;
    std::vector<char> used;

    MapSearch(const Hyperspace& b_in, const Hyperspace& a_in, std::vector<int> dom_rel_in, bool bidir,
              std::uint64_t budget_in)
        : b(b_in), a(a_in), dom_rel(std::move(dom_rel_in)), bidirectional(bidir), budget(budget_in) {}

    bool candidate_ok(int x, int v) const {
        const int n = a.relation_count();
        for (int i = 0; i < n; ++i) {
            // An element only fits where its class can fit.
            if (b.class_size(dom_rel[i], x) > a.class_size(i, v))
                return false;
        }
        for (int y = 0; y < x; ++y) {
            for (int i = 0; i < n; ++i) {
                const bool in_b = b.label(dom_rel[i], x) == b.label(dom_rel[i], y);
                const bool in_a = a.label(i, v) == a.label(i, assignment[y]);
                if (bidirectional ? (in_b != in_a) : (in_b && !in_a))
                    return false;
            }
        }
        return true;
    }

    // Depth-first in element id order with ascending images: the first hit
    // is the lexicographically least map.
    bool run(int x) {
        if (x == b.size())
            return true;
        for (int v = 0; v < a.size(); ++v) {
            if (used[v])
                continue;
            if (++nodes > budget) {
                exhausted_budget = true;
                return false;
            }
            if (!candidate_ok(x, v))
                continue;
            assignment[x] = v;
            used[v] = 1;
            if (run(x + 1))
                return true;
            used[v] = 0;
            if (exhausted_budget)
                return false;
        }
        return false;
    }

    SearchOutcome search() {
        assignment.assign(b.size(), -1);
        used.assign(a.size(), 0);
        if (b.size() > a.size())
            return {SearchStatus::None, std::nullopt, 0};
        if (run(0))
            return {SearchStatus::Found, std::nullopt, nodes};
        return {exhausted_budget ? SearchStatus::Indeterminate : SearchStatus::None, std::nullopt, nodes};
    }
};

}  // namespace

SearchOutcome find_embedding(const Hyperspace& b, const Hyperspace& a, std::uint64_t node_budget) {
    if (b.relation_count() != a.relation_count())
        throw std::invalid_argument("embedding search requires equal relation counts");
    std::vector<int> identity(a.relation_count());
    std::iota(identity.begin(), identity.end(), 0);
    MapSearch search(b, a, identity, true, node_budget);
    SearchOutcome outcome = search.search();
    if (outcome.status == SearchStatus::Found)
        outcome.witness = MorphismWitness{MorphismKind::Embedding, search.assignment, {}, {}};
    return outcome;
}

SearchOutcome find_weak_embedding(const Hyperspace& b, const Hyperspace& a, std::uint64_t node_budget) {
    if (b.relation_count() != a.relation_count())
        throw std::invalid_argument("weak embedding search requires equal relation counts");
    const int n = a.relation_count();
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::uint64_t spent = 0;
    bool any_indeterminate = false;
    do {
        MapSearch search(b, a, pi, true, node_budget > spent ? node_budget - spent : 0);
        SearchOutcome outcome = search.search();
        spent += outcome.nodes;
        if (outcome.status == SearchStatus::Found) {
            outcome.witness = MorphismWitness{MorphismKind::WeakEmbedding, search.assignment, pi, {}};
            outcome.nodes = spent;
            return outcome;
        }
        if (outcome.status == SearchStatus::Indeterminate)
            any_indeterminate = true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return {any_indeterminate ? SearchStatus::Indeterminate : SearchStatus::None, std::nullopt, spent};
}

SearchOutcome find_parbedding(const Hyperspace& b, const Hyperspace& a, std::uint64_t node_budget) {
    const int n = a.relation_count();
    const int d = b.relation_count();
    std::vector<int> beta(n, 0);
    std::uint64_t spent = 0;
    bool any_indeterminate = false;
    while (true) {
        MapSearch search(b, a, beta, false, node_budget > spent ? node_budget - spent : 0);
        SearchOutcome outcome = search.search();
        spent += outcome.nodes;
        if (outcome.status == SearchStatus::Found) {
            outcome.witness = MorphismWitness{MorphismKind::Parbedding, search.assignment, {}, beta};
            outcome.nodes = spent;
            return outcome;
        }
        if (outcome.status == SearchStatus::Indeterminate)
            any_indeterminate = true;
        // Next beta in lexicographic order over {0..d-1}^n.
        int i = n - 1;
        while (i >= 0 && beta[i] == d - 1)
            beta[i--] = 0;
        if (i < 0)
            break;
        ++beta[i];
    }
    return {any_indeterminate ? SearchStatus::Indeterminate : SearchStatus::None, std::nullopt, spent};
}

Coloring pullback_coloring(const Coloring& coloring, const Hyperspace& b, const Hyperspace& a,
                           const std::vector<int>& map, const std::vector<int>& beta) {
    if (!verify_parbedding(b, a, map, beta))
        throw std::invalid_argument("pullback_coloring: witness is not a parbedding");
    validate_coloring(coloring, a.relation_count(), static_cast<std::size_t>(a.size()));
    Coloring out;
    out.colors.resize(b.size());
    for (int x = 0; x < b.size(); ++x)
        out.colors[x] = beta[coloring.colors[map[x]]];
    return out;
}

namespace {

Answer embeds_all_small_cubes_impl(const Hyperspace& a, const SetTuple& tuple, std::uint64_t max_factor,
                                   std::uint64_t node_budget, std::uint64_t& nodes_spent) {
    if (max_factor < 1)
        throw std::invalid_argument("embeds_all_small_cubes: factor budget must be positive");
    if (tuple.length() != a.relation_count())
        throw std::invalid_argument("embeds_all_small_cubes: tuple length must equal the relation count");
    std::uint64_t size = 1;
    for (int j = 0; j < tuple.codomain; ++j) {
        size *= max_factor;
        if (size > static_cast<std::uint64_t>(a.size()))
            return Answer::No;  // the largest cube is already bigger than a
    }
    const Cube largest = make_cube(tuple, std::vector<std::uint64_t>(tuple.codomain, max_factor));
    const SearchOutcome outcome = find_embedding(largest.space, a, node_budget);
    nodes_spent = outcome.nodes;
    switch (outcome.status) {
        case SearchStatus::Found:
            return Answer::Yes;
        case SearchStatus::None:
            return Answer::No;
        default:
            return Answer::Indeterminate;
    }
}

}  // namespace

Answer embeds_all_small_cubes(const Hyperspace& a, const SetTuple& tuple, std::uint64_t max_factor,
                              std::uint64_t node_budget) {
    std::uint64_t spent = 0;
    return embeds_all_small_cubes_impl(a, tuple, max_factor, node_budget, spent);
}

FcnEstimate fcn_estimate(const Hyperspace& a, std::uint64_t max_factor, std::uint64_t node_budget) {
    const int n = a.relation_count();
    bool any_indeterminate = false;
    std::uint64_t spent = 0;
    for (int d = 1; d <= n; ++d) {
        // All n-tuples of nonempty subsets of {0..d-1}, lexicographic.
        const Mask limit = mask_bit(d) - 1;
        std::vector<Mask> sets(n, 1);
        while (true) {
            // Each candidate costs at least one node so that the scan
            // itself respects the budget.
            if (++spent > node_budget)
                return FcnEstimate{ExtendedNat::infinity(), std::nullopt, true};
            SetTuple candidate(d, sets);
            std::uint64_t search_nodes = 0;
            const std::uint64_t remaining = node_budget > spent ? node_budget - spent : 0;
            switch (embeds_all_small_cubes_impl(a, candidate, max_factor, remaining, search_nodes)) {
                case Answer::Yes:
                    return FcnEstimate{ExtendedNat(static_cast<std::uint64_t>(d)), candidate, false};
                case Answer::Indeterminate:
                    any_indeterminate = true;
                    break;
                case Answer::No:
                    break;
            }
            spent += search_nodes;
            int i = n - 1;
            while (i >= 0 && sets[i] == limit)
                sets[i--] = 1;
            if (i < 0)
                break;
            ++sets[i];
        }
    }
    return FcnEstimate{ExtendedNat::infinity(), std::nullopt, any_indeterminate};
}

}  // namespace ihs
