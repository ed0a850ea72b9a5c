#include "ihs/identities.hpp"

#include <random>
#include <vector>

namespace ihs {

namespace {

std::string tuple_to_string(const SetTuple& tuple) {
    std::string out = "m=" + std::to_string(tuple.codomain) + " <";
    for (int i = 0; i < tuple.length(); ++i) {
        if (i)
            out += ",";
        out += member_to_string(tuple.sets[i]);
    }
    return out + ">";
}

SetSystem random_system(std::mt19937_64& rng, int ground) {
    const Mask limit = mask_bit(ground) - 1;
    std::uniform_real_distribution<double> density(0.05, 0.5);
    std::bernoulli_distribution keep(density(rng));
    std::vector<Mask> members;
    for (Mask m = 0; m <= limit; ++m)
        if (keep(rng))
            members.push_back(m);
    return SetSystem(ground, std::move(members));
}

}  // namespace

SuiteResult check_tau_equals_induced_depth_exhaustive(int max_n, int max_m) {
    SuiteResult result{"tau-equals-induced-depth (exhaustive)", 0, std::nullopt};
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m <= max_m; ++m) {
            const Mask limit = mask_bit(m) - 1;
            std::vector<Mask> sets(n, 1);
            while (true) {
                const SetTuple tuple(m, sets);
                ++result.cases;
                if (tuple_transversal_number(tuple) != depth(induced_system(tuple))) {
                    result.counterexample = tuple_to_string(tuple);
                    return result;
                }
                int i = n - 1;
                while (i >= 0 && sets[i] == limit)
                    sets[i--] = 1;
                if (i < 0)
                    break;
                ++sets[i];
            }
        }
    return result;
}

SuiteResult check_tau_equals_induced_depth_sampled(int max_n, int max_m, std::uint64_t samples,
                                                   std::uint64_t seed) {
    SuiteResult result{"tau-equals-induced-depth (sampled)", 0, std::nullopt};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(1, max_n), pick_m(1, max_m);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const int n = pick_n(rng);
        const int m = pick_m(rng);
        std::uniform_int_distribution<Mask> pick_set(0, mask_bit(m) - 1);
        std::vector<Mask> sets(n);
        for (Mask& set : sets)
            set = pick_set(rng);
        const SetTuple tuple(m, std::move(sets));
        ++result.cases;
        if (tuple_transversal_number(tuple) != depth(induced_system(tuple))) {
            result.counterexample = tuple_to_string(tuple);
            return result;
        }
    }
    return result;
}

namespace {

std::optional<std::string> dandy_mismatch(const SetSystem& sys) {
    const ExtendedNat d_depth = depth(sys);
    for (int d = 0; d <= sys.ground(); ++d) {
        const bool dandy = dandy_to_depth(sys, d);
        const bool below = ExtendedNat(static_cast<std::uint64_t>(d)) < d_depth;
        if (dandy != below)
            return "n=" + std::to_string(sys.ground()) + " I=" + system_to_string(sys) +
                   " d=" + std::to_string(d) + " dandy=" + (dandy ? "true" : "false") +
                   " depth=" + d_depth.to_string();
    }
    return std::nullopt;
}

}  // namespace

SuiteResult check_dandy_vs_depth_exhaustive(int max_n) {
    SuiteResult result{"dandy-vs-depth (exhaustive)", 0, std::nullopt};
    for (int n = 1; n <= max_n; ++n) {
        // Families whose members all have at least two elements.
        std::vector<Mask> pool;
        for (Mask m = 0; m < mask_bit(n); ++m)
            if (mask_size(m) >= 2)
                pool.push_back(m);
        for (Mask family = 0; family < mask_bit(static_cast<int>(pool.size())); ++family) {
            std::vector<Mask> members;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (family & mask_bit(static_cast<int>(i)))
                    members.push_back(pool[i]);
            const SetSystem sys(n, std::move(members));
            ++result.cases;
            if (auto bad = dandy_mismatch(sys)) {
                result.counterexample = *bad;
                return result;
            }
        }
    }
    return result;
}

SuiteResult check_dandy_vs_depth_sampled(int ground, std::uint64_t samples, std::uint64_t seed) {
    SuiteResult result{"dandy-vs-depth (sampled)", 0, std::nullopt};
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const SetSystem sys = random_system(rng, ground);
        ++result.cases;
        if (auto bad = dandy_mismatch(sys)) {
            result.counterexample = *bad;
            return result;
        }
    }
    return result;
}

SuiteResult check_restriction_depth_drop_sampled(int max_n, std::uint64_t samples, std::uint64_t seed) {
    SuiteResult result{"restriction-depth-drop (sampled)", 0, std::nullopt};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_n(1, max_n);
    for (std::uint64_t s = 0; s < samples; ++s) {
        const int n = pick_n(rng);
        SetSystem sys = random_system(rng, n);
        // Families containing the empty member have no transversal at all.
        if (!sys.members().empty() && sys.members().front() == 0) {
            --s;
            continue;
        }
        // Random subset repaired into a transversal by hitting every missed
        // member with its least element.
        std::uniform_int_distribution<Mask> pick_subset(0, mask_bit(n) - 1);
        Mask j = pick_subset(rng);
        for (Mask m : sys.members())
            if ((j & m) == 0)
                j |= mask_bit(indices_from_mask(m).front());
        if (j == 0)
            j = mask_bit(std::uniform_int_distribution<int>(0, n - 1)(rng));
        const ExtendedNat full = depth(sys);
        const ExtendedNat restricted = depth(restrict_to(sys, j).system);
        ++result.cases;
        if (restricted < full.minus(1)) {
            result.counterexample = "n=" + std::to_string(n) + " I=" + system_to_string(sys) +
                                    " J=" + member_to_string(j) + " depth(I)=" + full.to_string() +
                                    " depth(I|J)=" + restricted.to_string();
            return result;
        }
    }
    return result;
}

SuiteResult check_depth_cross_validation_exhaustive(int max_n) {
    SuiteResult result{"depth-cross-validation (exhaustive)", 0, std::nullopt};
    for (int n = 1; n <= max_n; ++n) {
        const int pool = 1 << n;  // every subset of the ground set may be a member
        for (std::uint64_t family = 0; family < (std::uint64_t{1} << pool); ++family) {
            std::vector<Mask> members;
            for (int i = 0; i < pool; ++i)
                if (family & (std::uint64_t{1} << i))
                    members.push_back(static_cast<Mask>(i));
            const SetSystem sys(n, std::move(members));
            ++result.cases;
            const ExtendedNat by_cover = depth(sys);
            const ExtendedNat by_tuples = depth_by_tuple_search(sys);
            if (by_cover != by_tuples) {
                result.counterexample = "n=" + std::to_string(n) + " I=" + system_to_string(sys) +
                                        " cover=" + by_cover.to_string() + " tuples=" + by_tuples.to_string();
                return result;
            }
        }
    }
    return result;
}

}  // namespace ihs
