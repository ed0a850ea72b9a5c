#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ihs/identities.hpp"
#include "ihs/set_system.hpp"
#include "oracles.hpp"

using namespace ihs;

TEST_CASE("extended naturals order and subtract correctly") {
    CHECK(ExtendedNat::infinity() > ExtendedNat(1'000'000));
    CHECK(ExtendedNat::infinity().minus(1) == ExtendedNat::infinity());
    CHECK(ExtendedNat(3).minus(1) == ExtendedNat(2));
    CHECK(ExtendedNat(0).minus(1) == ExtendedNat(0));
    CHECK(ExtendedNat::infinity().to_string() == "inf");
    CHECK(ExtendedNat::parse("17") == ExtendedNat(17));
    CHECK(ExtendedNat::parse("inf") == ExtendedNat::infinity());
    CHECK_FALSE(ExtendedNat::parse("1x7").has_value());
}

TEST_CASE("transversal basics") {
    const SetSystem empty_family(3, {});
    CHECK(is_transversal(0, empty_family));
    const SetSystem pairs(3, {mask_from_indices({0, 1}), mask_from_indices({1, 2})});
    CHECK(is_transversal(mask_from_indices({1}), pairs));
    CHECK_FALSE(is_transversal(mask_from_indices({0}), pairs));
    const SetSystem with_empty(3, {0});
    CHECK_FALSE(is_transversal(mask_from_indices({0, 1, 2}), with_empty));
}

TEST_CASE("transversal numbers of the named families") {
    // Singletons force one element each.
    const SetSystem singletons(3, {mask_bit(0), mask_bit(1), mask_bit(2)});
    CHECK(transversal_number(singletons) == ExtendedNat(3));

    // Complements of singletons over four elements: any two elements hit all.
    std::vector<Mask> complements;
    for (int i = 0; i < 4; ++i)
        complements.push_back(mask_from_indices({0, 1, 2, 3}) & ~mask_bit(i));
    CHECK(transversal_number(SetSystem(4, complements)) == ExtendedNat(2));

    CHECK(transversal_number(SetSystem(4, {})) == ExtendedNat(0));
    CHECK(transversal_number(SetSystem(4, {0})) == ExtendedNat::infinity());
}

TEST_CASE("transversal number matches the popcount-scan oracle") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> pick_n(1, 6);
        const int n = pick_n(rng);
        std::uniform_int_distribution<int> pick_count(0, 6);
        std::uniform_int_distribution<Mask> pick_member(0, mask_bit(n) - 1);
        std::vector<Mask> members;
        for (int i = pick_count(rng); i > 0; --i)
            members.push_back(pick_member(rng));
        const SetSystem sys(n, members);
        CHECK(transversal_number(sys) == oracles::brute_transversal_number(sys));
    }
}

TEST_CASE("tuple transversal numbers") {
    CHECK(tuple_transversal_number(SetTuple(2, {mask_bit(0), mask_bit(1)})) == ExtendedNat(2));
    CHECK(tuple_transversal_number(SetTuple(3, {mask_bit(0), 0})) == ExtendedNat::infinity());
    // Nonempty entries keep the number within min(m, n).
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> pick(1, 5);
        const int n = pick(rng), m = pick(rng);
        std::uniform_int_distribution<Mask> pick_set(1, mask_bit(m) - 1);
        std::vector<Mask> sets(n);
        for (Mask& s : sets)
            s = pick_set(rng);
        const ExtendedNat tau = tuple_transversal_number(SetTuple(m, sets));
        CHECK(tau <= ExtendedNat(static_cast<std::uint64_t>(std::min(m, n))));
        CHECK(tau >= ExtendedNat(1));
    }
}

TEST_CASE("depth of the named families") {
    CHECK(depth(SetSystem(3, {})) == ExtendedNat(1));
    CHECK(depth(SetSystem::all_k_subsets(4, 2)) == ExtendedNat(4));
    CHECK(depth(SetSystem::all_k_subsets(5, 3)) == ExtendedNat(3));
    CHECK(depth(SetSystem(3, {mask_bit(2)})) == ExtendedNat::infinity());
    CHECK(depth(SetSystem(3, {0})) == ExtendedNat::infinity());
}

TEST_CASE("depth stays between 2 and n on families of pairs-or-bigger members") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> pick_n(2, 6);
        const int n = pick_n(rng);
        std::vector<Mask> members;
        std::uniform_int_distribution<Mask> pick_member(0, mask_bit(n) - 1);
        std::uniform_int_distribution<int> pick_count(1, 5);
        for (int i = pick_count(rng); i > 0; --i) {
            const Mask m = pick_member(rng);
            if (mask_size(m) >= 2)
                members.push_back(m);
        }
        if (members.empty())
            continue;
        const ExtendedNat d = depth(SetSystem(n, members));
        CHECK(d >= ExtendedNat(2));
        CHECK(d <= ExtendedNat(static_cast<std::uint64_t>(n)));
    }
}

TEST_CASE("cover-based depth equals the tuple-search reference on small grounds") {
    const SuiteResult result = check_depth_cross_validation_exhaustive(3);
    INFO(result.counterexample.value_or(""));
    CHECK(result.passed());
}

TEST_CASE("cover-based depth equals the tuple-search reference on random larger grounds") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 400; ++trial) {
        std::uniform_int_distribution<int> pick_n(5, 7);
        const int n = pick_n(rng);
        std::uniform_int_distribution<Mask> pick_member(0, mask_bit(n) - 1);
        std::uniform_int_distribution<int> pick_count(0, 8);
        std::vector<Mask> members;
        for (int i = pick_count(rng); i > 0; --i)
            members.push_back(pick_member(rng));
        const SetSystem sys(n, members);
        CHECK(depth(sys) == depth_by_tuple_search(sys));
    }
}

TEST_CASE("induced system of named tuples") {
    CHECK(induced_system(SetTuple(2, {mask_bit(0), mask_bit(1)})) ==
          SetSystem(2, {mask_from_indices({0, 1})}));
    // An empty entry induces its own singleton index set.
    const SetSystem with_empty = induced_system(SetTuple(2, {mask_bit(0), 0}));
    CHECK(with_empty.contains(mask_bit(1)));
    // Equal singletons never intersect to nothing.
    CHECK(induced_system(SetTuple(1, {mask_bit(0), mask_bit(0)})) == SetSystem(2, {}));
    CHECK_THROWS_AS(induced_system(SetTuple(0, {0, 0})), std::invalid_argument);
}

TEST_CASE("induced systems are upward closed and never contain the empty set") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> pick(1, 5);
        const int n = pick(rng), m = pick(rng);
        std::uniform_int_distribution<Mask> pick_set(0, mask_bit(m) - 1);
        std::vector<Mask> sets(n);
        for (Mask& s : sets)
            s = pick_set(rng);
        const SetSystem induced = induced_system(SetTuple(m, sets));
        CHECK_FALSE(induced.contains(0));
        for (Mask member : induced.members())
            for (int extra = 0; extra < n; ++extra)
                CHECK(induced.contains(member | mask_bit(extra)));
    }
}

TEST_CASE("tau of a tuple equals the depth of its induced system, exhaustively") {
    const SuiteResult result = check_tau_equals_induced_depth_exhaustive(4, 4);
    INFO(result.counterexample.value_or(""));
    CHECK(result.passed());
    CHECK(result.cases > 50000);
    const SuiteResult sampled = check_tau_equals_induced_depth_sampled(6, 6, 2000, 99);
    INFO(sampled.counterexample.value_or(""));
    CHECK(sampled.passed());
}

TEST_CASE("restriction keeps members inside the subset") {
    const Restriction r = restrict_to(SetSystem::all_k_subsets(3, 2), mask_from_indices({0, 1}));
    CHECK(r.system == SetSystem(2, {mask_from_indices({0, 1})}));
    CHECK(r.index_map == std::vector<int>{0, 1});

    const Restriction s = restrict_to(SetSystem(3, {mask_from_indices({0, 1}), mask_bit(2)}),
                                      mask_from_indices({0, 1}));
    CHECK(s.system == SetSystem(2, {mask_from_indices({0, 1})}));

    const SetSystem whole = SetSystem(4, {mask_from_indices({1, 3}), mask_from_indices({0, 2})});
    CHECK(restrict_to(whole, whole.ground_mask()).system == whole);
}

TEST_CASE("restricting to a transversal drops depth by at most one") {
    const SuiteResult result = check_restriction_depth_drop_sampled(6, 2000, 123);
    INFO(result.counterexample.value_or(""));
    CHECK(result.passed());
}

TEST_CASE("window covering at depth zero is vacuous") {
    CHECK(dandy_to_depth(SetSystem(1, {}), 0));
    CHECK(dandy_to_depth(SetSystem(4, {mask_bit(0)}), 0));
}

TEST_CASE("window covering on the triangle matches brute enumeration") {
    const SetSystem triangle = SetSystem::all_k_subsets(3, 2);
    CHECK(oracles::brute_dandy_to_depth(triangle, 2));
    CHECK_FALSE(oracles::brute_dandy_to_depth(triangle, 3));
    CHECK(dandy_to_depth(triangle, 2));
    CHECK_FALSE(dandy_to_depth(triangle, 3));
}

TEST_CASE("window covering matches brute enumeration on random families") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<int> pick_n(1, 5);
        const int n = pick_n(rng);
        std::uniform_int_distribution<Mask> pick_member(0, mask_bit(n) - 1);
        std::uniform_int_distribution<int> pick_count(0, 4);
        std::vector<Mask> members;
        for (int i = pick_count(rng); i > 0; --i)
            members.push_back(pick_member(rng));
        const SetSystem sys(n, members);
        for (int d = 0; d <= n; ++d)
            CHECK(dandy_to_depth(sys, d) == oracles::brute_dandy_to_depth(sys, d));
    }
}

TEST_CASE("window covering characterizes depth on small grounds") {
    const SuiteResult exhaustive = check_dandy_vs_depth_exhaustive(4);
    INFO(exhaustive.counterexample.value_or(""));
    CHECK(exhaustive.passed());
    const SuiteResult sampled = check_dandy_vs_depth_sampled(5, 100, 5);
    INFO(sampled.counterexample.value_or(""));
    CHECK(sampled.passed());
}

TEST_CASE("window covering rejects oversized grounds and depths") {
    CHECK_THROWS_AS(dandy_to_depth(SetSystem(9, {}), 1), std::invalid_argument);
    CHECK_THROWS_AS(dandy_to_depth(SetSystem(3, {}), 4), std::invalid_argument);
}

TEST_CASE("superset removal preserves both invariants") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> pick_n(1, 6);
        const int n = pick_n(rng);
        std::uniform_int_distribution<Mask> pick_member(0, mask_bit(n) - 1);
        std::uniform_int_distribution<int> pick_count(0, 6);
        std::vector<Mask> members;
        for (int i = pick_count(rng); i > 0; --i)
            members.push_back(pick_member(rng));
        const SetSystem sys(n, members);
        const SetSystem reduced = remove_supersets(sys);
        CHECK(oracles::brute_transversal_number(sys) == oracles::brute_transversal_number(reduced));
        CHECK(transversal_number(sys) == transversal_number(reduced));
        CHECK(depth_by_tuple_search(sys) == depth_by_tuple_search(reduced));
        CHECK(depth(sys) == depth(reduced));
    }
}

TEST_CASE("set systems deduplicate and validate members") {
    const SetSystem sys(3, {mask_bit(0), mask_bit(0), mask_bit(1)});
    CHECK(sys.members().size() == 2);
    CHECK_THROWS_AS(SetSystem(2, {mask_bit(5)}), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem(0, {}), std::invalid_argument);
}
