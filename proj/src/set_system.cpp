#include "ihs/set_system.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace ihs {

Mask mask_from_indices(const std::vector<int>& indices) {
    Mask m = 0;
    for (int i : indices) {
        if (i < 0 || i >= 64)
            throw std::out_of_range("mask_from_indices: element out of range");
        m |= mask_bit(i);
    }
    return m;
}

std::vector<int> indices_from_mask(Mask m) {
    std::vector<int> out;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1)
            out.push_back(i);
    return out;
}

SetSystem::SetSystem(int ground, std::vector<Mask> members) : ground_(ground), members_(std::move(members)) {
    if (ground_ < 1 || ground_ > 64)
        throw std::invalid_argument("SetSystem: ground must be in 1..64");
    const Mask gm = ground_mask();
    for (Mask m : members_)
        if ((m & ~gm) != 0)
            throw std::invalid_argument("SetSystem: member outside ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SetSystem SetSystem::all_k_subsets(int ground, int k) {
    if (ground > 24)
        throw std::invalid_argument("all_k_subsets: ground sets above 24 elements are not supported");
    std::vector<Mask> members;
    if (k >= 0 && k <= ground) {
        const Mask limit = (ground >= 64) ? ~Mask{0} : (mask_bit(ground) - 1);
        for (Mask m = 0; m <= limit; ++m) {
            if (mask_size(m) == k)
                members.push_back(m);
            if (m == limit)
                break;
        }
    }
    return SetSystem(ground, std::move(members));
}

bool SetSystem::contains(Mask member) const {
    return std::binary_search(members_.begin(), members_.end(), member);
}

SetTuple::SetTuple(int codomain_in, std::vector<Mask> sets_in) : codomain(codomain_in), sets(std::move(sets_in)) {
    if (codomain < 0 || codomain > 64)
        throw std::invalid_argument("SetTuple: codomain must be in 0..64");
    const Mask cm = codomain >= 64 ? ~Mask{0} : (mask_bit(codomain) - 1);
    for (Mask s : sets)
        if ((s & ~cm) != 0)
            throw std::invalid_argument("SetTuple: entry outside codomain");
}

bool is_transversal(Mask t, const SetSystem& sys) {
    for (Mask m : sys.members())
        if ((t & m) == 0)
            return false;
    return true;
}

namespace {

// Greedy hitting set: repeatedly take the element meeting the most unhit
// members (least index on ties).
int greedy_hitting_size(const SetSystem& sys) {
    std::vector<Mask> unhit = sys.members();
    int size = 0;
    while (!unhit.empty()) {
        int best_e = -1;
        std::size_t best_hits = 0;
        for (int e = 0; e < sys.ground(); ++e) {
            std::size_t hits = 0;
            for (Mask m : unhit)
                if (m & mask_bit(e))
                    ++hits;
            if (hits > best_hits) {
                best_hits = hits;
                best_e = e;
            }
        }
        const Mask chosen = mask_bit(best_e);
        std::erase_if(unhit, [&](Mask m) { return (m & chosen) != 0; });
        ++size;
    }
    return size;
}

// Lower bound: a greedily built pairwise-disjoint subfamily must be hit by
// pairwise distinct elements.
int disjoint_members_bound(const std::vector<Mask>& members) {
    Mask used = 0;
    int count = 0;
    for (Mask m : members) {
        if ((m & used) == 0) {
            used |= m;
            ++count;
        }
    }
    return count;
}

void hitting_set_search(const std::vector<Mask>& unhit, int current, int& best) {
    if (unhit.empty()) {
        best = std::min(best, current);
        return;
    }
    if (current + disjoint_members_bound(unhit) >= best)
        return;
    Mask branch = unhit.front();
    for (Mask m : unhit)
        if (mask_size(m) < mask_size(branch))
            branch = m;
    for (int e : indices_from_mask(branch)) {
        std::vector<Mask> next;
        next.reserve(unhit.size());
        for (Mask m : unhit)
            if ((m & mask_bit(e)) == 0)
                next.push_back(m);
        hitting_set_search(next, current + 1, best);
    }
}

}  // namespace

ExtendedNat transversal_number(const SetSystem& sys) {
    if (sys.members().empty())
        return 0;
    for (Mask m : sys.members())
        if (m == 0)
            return ExtendedNat::infinity();
    int best = greedy_hitting_size(sys);
    hitting_set_search(sys.members(), 0, best);
    return ExtendedNat(static_cast<std::uint64_t>(best));
}

ExtendedNat tuple_transversal_number(const SetTuple& tuple) {
    if (tuple.sets.empty())
        return 0;
    if (tuple.codomain < 1) {
        // Nonempty tuples over an empty codomain consist of empty sets.
        return ExtendedNat::infinity();
    }
    return transversal_number(SetSystem(tuple.codomain, tuple.sets));
}

namespace {

constexpr int kMaxTabulatedGround = 20;

// bad[m] == true iff some member is contained in m.
std::vector<char> superset_closure(const SetSystem& sys) {
    const std::size_t space = std::size_t{1} << sys.ground();
    std::vector<char> bad(space, 0);
    for (Mask m : sys.members())
        bad[m] = 1;
    for (int b = 0; b < sys.ground(); ++b)
        for (std::size_t m = 0; m < space; ++m)
            if ((m & mask_bit(b)) && bad[m ^ mask_bit(b)])
                bad[m] = 1;
    return bad;
}

struct CoverProblem {
    Mask universe;
    std::vector<Mask> sets;
    int best;

    int lower_bound(Mask uncovered) const {
        int widest = 0;
        for (Mask s : sets)
            widest = std::max(widest, mask_size(s & uncovered));
        if (widest == 0)
            return std::numeric_limits<int>::max() / 2;
        return (mask_size(uncovered) + widest - 1) / widest;
    }

    void search(Mask uncovered, int used) {
        if (uncovered == 0) {
            best = std::min(best, used);
            return;
        }
        if (used + lower_bound(uncovered) >= best)
            return;
        // Branch on the uncovered element with the fewest candidate sets.
        int pick = -1;
        int pick_count = std::numeric_limits<int>::max();
        for (int e : indices_from_mask(uncovered)) {
            int count = 0;
            for (Mask s : sets)
                if (s & mask_bit(e))
                    ++count;
            if (count < pick_count) {
                pick_count = count;
                pick = e;
            }
        }
        for (Mask s : sets)
            if (s & mask_bit(pick))
                search(uncovered & ~s, used + 1);
    }
};

}  // namespace

ExtendedNat depth(const SetSystem& sys) {
    for (Mask m : sys.members())
        if (mask_size(m) <= 1)
            return ExtendedNat::infinity();
    if (sys.members().empty())
        return 1;
    if (sys.ground() > kMaxTabulatedGround)
        throw std::invalid_argument("depth: ground sets above 20 elements are not supported");

    const std::vector<char> bad = superset_closure(sys);
    const std::size_t space = std::size_t{1} << sys.ground();
    std::vector<Mask> maximal_free;
    for (std::size_t m = 0; m < space; ++m) {
        if (bad[m])
            continue;
        bool maximal = true;
        for (int b = 0; b < sys.ground() && maximal; ++b)
            if (!(m & mask_bit(b)) && !bad[m | mask_bit(b)])
                maximal = false;
        if (maximal)
            maximal_free.push_back(static_cast<Mask>(m));
    }

    CoverProblem cover{sys.ground_mask(), std::move(maximal_free), sys.ground()};
    // Greedy warm start.
    {
        Mask uncovered = cover.universe;
        int used = 0;
        while (uncovered != 0) {
            Mask pick = 0;
            for (Mask s : cover.sets)
                if (mask_size(s & uncovered) > mask_size(pick & uncovered))
                    pick = s;
            uncovered &= ~pick;
            ++used;
        }
        cover.best = std::min(cover.best, used);
    }
    cover.search(cover.universe, 0);
    return ExtendedNat(static_cast<std::uint64_t>(cover.best));
}

ExtendedNat depth_by_tuple_search(const SetSystem& sys) {
    if (sys.ground() > kMaxTabulatedGround)
        throw std::invalid_argument("depth_by_tuple_search: ground sets above 20 elements are not supported");
    const std::size_t space = std::size_t{1} << sys.ground();
    std::vector<Mask> transversals;
    for (std::size_t t = 0; t < space; ++t) {
        bool hits_all = true;
        for (Mask m : sys.members())
            if ((t & m) == 0) {
                hits_all = false;
                break;
            }
        if (hits_all)
            transversals.push_back(static_cast<Mask>(t));
    }
    if (transversals.empty())
        return ExtendedNat::infinity();

    std::vector<char> seen(space, 0);
    std::vector<Mask> frontier = {sys.ground_mask()};
    seen[sys.ground_mask()] = 1;
    for (std::uint64_t d = 1; !frontier.empty(); ++d) {
        std::vector<Mask> next;
        for (Mask r : frontier)
            for (Mask t : transversals) {
                const Mask x = r & t;
                if (x == 0)
                    return ExtendedNat(d);
                if (!seen[x]) {
                    seen[x] = 1;
                    next.push_back(x);
                }
            }
        frontier = std::move(next);
    }
    return ExtendedNat::infinity();
}

SetSystem induced_system(const SetTuple& tuple) {
    if (tuple.codomain < 1)
        throw std::invalid_argument("induced_system: codomain must be positive");
    const int n = tuple.length();
    if (n < 1)
        throw std::invalid_argument("induced_system: tuple must be nonempty");
    if (n > kMaxTabulatedGround)
        throw std::invalid_argument("induced_system: tuples longer than 20 are not supported");
    const Mask full = tuple.codomain >= 64 ? ~Mask{0} : (mask_bit(tuple.codomain) - 1);
    std::vector<Mask> members;
    for (Mask idx = 0; idx < (Mask{1} << n); ++idx) {
        Mask inter = full;
        for (int i : indices_from_mask(idx))
            inter &= tuple.sets[i];
        if (inter == 0)
            members.push_back(idx);
    }
    return SetSystem(n, std::move(members));
}

Restriction restrict_to(const SetSystem& sys, Mask subset) {
    if ((subset & ~sys.ground_mask()) != 0)
        throw std::invalid_argument("restrict_to: subset outside ground set");
    if (subset == 0)
        throw std::invalid_argument("restrict_to: subset must be nonempty");
    const std::vector<int> index_map = indices_from_mask(subset);
    std::vector<int> compress(sys.ground(), -1);
    for (std::size_t k = 0; k < index_map.size(); ++k)
        compress[index_map[k]] = static_cast<int>(k);
    std::vector<Mask> members;
    for (Mask m : sys.members()) {
        if ((m & ~subset) != 0)
            continue;
        Mask remapped = 0;
        for (int e : indices_from_mask(m))
            remapped |= mask_bit(compress[e]);
        members.push_back(remapped);
    }
    return Restriction{SetSystem(static_cast<int>(index_map.size()), std::move(members)), index_map};
}

bool dandy_to_depth(const SetSystem& sys, int d) {
    const int n = sys.ground();
    if (n > 8)
        throw std::invalid_argument("dandy_to_depth: ground sets above 8 elements are not supported");
    if (d < 0 || d > n)
        throw std::invalid_argument("dandy_to_depth: d must be in 0..ground");
    if (d == 0)
        return true;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int pos = 0;
        int count = 0;
        while (count < d) {
            // Least e >= pos with a member inside the window {perm[pos..e]}.
            Mask window = 0;
            int e = pos;
            bool found = false;
            for (; e < n; ++e) {
                window |= mask_bit(perm[e]);
                for (Mask m : sys.members())
                    if ((m & ~window) == 0) {
                        found = true;
                        break;
                    }
                if (found)
                    break;
            }
            if (!found)
                return false;
            if (e == pos) {
                // Single-point window; the index sequence may repeat it, so
                // this permutation reaches every depth.
                count = d;
                break;
            }
            ++count;
            pos = e;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

SetSystem remove_supersets(const SetSystem& sys) {
    std::vector<Mask> minimal;
    for (Mask m : sys.members()) {
        bool has_proper_subset = false;
        for (Mask other : sys.members())
            if (other != m && (other & ~m) == 0) {
                has_proper_subset = true;
                break;
            }
        if (!has_proper_subset)
            minimal.push_back(m);
    }
    return SetSystem(sys.ground(), std::move(minimal));
}

std::string member_to_string(Mask member) {
    std::string out = "{";
    bool first = true;
    for (int e : indices_from_mask(member)) {
        if (!first)
            out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

std::string system_to_string(const SetSystem& sys) {
    std::string out = "{";
    bool first = true;
    for (Mask m : sys.members()) {
        if (!first)
            out += ",";
        out += member_to_string(m);
        first = false;
    }
    return out + "}";
}

}  // namespace ihs
