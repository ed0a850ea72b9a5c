#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "doctest.h"
#include "ihs/cubes.hpp"
#include "ihs/morphisms.hpp"
#include "oracles.hpp"

using namespace ihs;

namespace {

Hyperspace square(int side) {
    return make_cube(n_cube_tuple(2), {static_cast<std::uint64_t>(side), static_cast<std::uint64_t>(side)}).space;
}

std::vector<int> identity_map(int size) {
    std::vector<int> map(size);
    std::iota(map.begin(), map.end(), 0);
    return map;
}

// A pool of small cube and halfcube structures with two relations.
std::vector<Hyperspace> structure_pool(int max_size) {
    std::vector<Hyperspace> pool;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> shapes = {{1, 1}, {2, 1}, {2, 2}, {3, 1},
                                                                         {2, 3}, {3, 2}, {4, 2}, {2, 4}, {3, 3}};
    for (Mask s0 = 0; s0 < 4; ++s0)
        for (Mask s1 = 0; s1 < 4; ++s1)
            for (const auto& [f0, f1] : shapes) {
                if (f0 * f1 > static_cast<std::uint64_t>(max_size))
                    continue;
                pool.push_back(make_cube(SetTuple(2, {s0, s1}), {f0, f1}).space);
            }
    for (std::uint64_t k = 2; k <= 4; ++k) {
        const Cube half = make_n_halfcube(2, k);
        if (half.space.size() <= max_size)
            pool.push_back(half.space);
    }
    return pool;
}

}  // namespace

TEST_CASE("identity is an embedding") {
    const Hyperspace a = square(3);
    CHECK(verify_embedding(a, a, identity_map(a.size())));
}

TEST_CASE("coordinatewise inclusion of a smaller square is an embedding") {
    const Hyperspace small = square(2);
    const Hyperspace big = square(3);
    // Map (x, y) in the 2x2 cube to (x, y) in the 3x3 cube, colex ids.
    std::vector<int> map = {0, 1, 3, 4};
    CHECK(verify_embedding(small, big, map));
}

TEST_CASE("constant maps are not embeddings") {
    const Hyperspace a = square(2);
    CHECK_FALSE(verify_embedding(a, a, std::vector<int>(a.size(), 0)));
}

TEST_CASE("arity mismatch is an error") {
    const Hyperspace two = square(2);
    const Hyperspace one(1, 4, {{0, 1, 2, 3}});
    CHECK_THROWS_AS(verify_embedding(one, two, identity_map(4)), std::invalid_argument);
}

TEST_CASE("weak embedding accepts a relation swap of the square") {
    const Hyperspace cube = square(2);
    // The same carrier with the two relations swapped embeds weakly into
    // the original under the identity element map.
    const Hyperspace swapped(2, 4, {cube.labels()[1], cube.labels()[0]});
    CHECK_FALSE(verify_embedding(swapped, cube, identity_map(4)));
    CHECK(verify_weak_embedding(swapped, cube, identity_map(4), {1, 0}));
    CHECK_THROWS_AS(verify_weak_embedding(swapped, cube, identity_map(4), {0, 0}), std::invalid_argument);
}

TEST_CASE("every embedding verifies weakly with the identity permutation") {
    const Hyperspace small = square(2);
    const Hyperspace big = square(3);
    const SearchOutcome outcome = find_embedding(small, big);
    REQUIRE(outcome.status == SearchStatus::Found);
    CHECK(verify_weak_embedding(small, big, outcome.witness->map, {0, 1}));
    CHECK(verify_parbedding(small, big, outcome.witness->map, {0, 1}));
}

TEST_CASE("weak embeddings are parbeddings through their permutation") {
    const Hyperspace cube = square(2);
    const Hyperspace swapped(2, 4, {cube.labels()[1], cube.labels()[0]});
    REQUIRE(verify_weak_embedding(swapped, cube, identity_map(4), {1, 0}));
    CHECK(verify_parbedding(swapped, cube, identity_map(4), {1, 0}));
}

TEST_CASE("parbeddings compose with composed index maps") {
    // Chain the transversal parbedding with a relation-collapsing one.
    std::vector<Mask> sets;
    for (int i = 0; i < 3; ++i)
        sets.push_back(mask_from_indices({0, 1, 2}) & ~mask_bit(i));
    const ParbeddingConstruction first = min_transversal_parbedding(SetTuple(3, sets), 2, 0);
    REQUIRE(verify_parbedding(first.domain.space, first.target.space, first.map, first.beta));

    const Hyperspace middle = first.domain.space;  // 2-cube over {0,1}
    const SearchOutcome second = find_parbedding(middle, first.target.space);
    REQUIRE(second.status == SearchStatus::Found);

    // first: domain -> target (beta1: target rel -> domain rel). Composing
    // g after f needs g's witness from the middle structure; reuse first's
    // construction as f and second as g where g maps middle into target.
    // Compose f: domain->target with beta_f and the identity parbedding of
    // target into itself instead, then check associativity of verification.
    const std::vector<int> id_beta = {0, 1, 2};
    CHECK(verify_parbedding(first.target.space, first.target.space, identity_map(first.target.space.size()),
                            id_beta));
    std::vector<int> composed_map(first.map.size());
    for (std::size_t x = 0; x < first.map.size(); ++x)
        composed_map[x] = first.map[x];
    std::vector<int> composed_beta(3);
    for (int i = 0; i < 3; ++i)
        composed_beta[i] = first.beta[id_beta[i]];
    CHECK(verify_parbedding(first.domain.space, first.target.space, composed_map, composed_beta));
}

TEST_CASE("search agrees with exhaustive enumeration on small pools") {
    const std::vector<Hyperspace> domains = structure_pool(6);
    const std::vector<Hyperspace> targets = structure_pool(10);
    int compared = 0;
    for (const Hyperspace& b : domains)
        for (const Hyperspace& a : targets) {
            if (b.size() > 4 || a.size() > 9)
                continue;
            const auto expected = oracles::first_verified_injection(
                b, a, [&](const std::vector<int>& map) { return verify_embedding(b, a, map); });
            const SearchOutcome outcome = find_embedding(b, a);
            REQUIRE(outcome.status != SearchStatus::Indeterminate);
            CHECK((outcome.status == SearchStatus::Found) == expected.has_value());
            if (expected) {
                REQUIRE(outcome.witness.has_value());
                CHECK(outcome.witness->map == *expected);
                CHECK(verify_embedding(b, a, outcome.witness->map));
            }
            ++compared;
        }
    CHECK(compared > 500);
}

TEST_CASE("parbedding search agrees with enumeration over all index maps") {
    const std::vector<Hyperspace> pool = structure_pool(6);
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const Hyperspace& b = pool[pick(rng)];
        const Hyperspace& a = pool[pick(rng)];
        if (b.size() > 4 || a.size() > 6)
            continue;
        bool enumerated = false;
        for (Mask beta_code = 0; beta_code < 4 && !enumerated; ++beta_code) {
            const std::vector<int> beta = {static_cast<int>(beta_code & 1), static_cast<int>(beta_code >> 1)};
            enumerated = oracles::first_verified_injection(b, a, [&](const std::vector<int>& map) {
                              return verify_parbedding(b, a, map, beta);
                          }).has_value();
        }
        const SearchOutcome outcome = find_parbedding(b, a);
        REQUIRE(outcome.status != SearchStatus::Indeterminate);
        CHECK((outcome.status == SearchStatus::Found) == enumerated);
        if (outcome.status == SearchStatus::Found)
            CHECK(verify_parbedding(b, a, outcome.witness->map, outcome.witness->beta));
    }
}

TEST_CASE("search agrees with enumeration at the six-into-ten scale") {
    const Hyperspace six = make_cube(n_cube_tuple(2), {2, 3}).space;
    const Hyperspace ten = make_cube(n_cube_tuple(2), {2, 5}).space;
    const Hyperspace thin = make_cube(n_cube_tuple(2), {1, 10}).space;
    for (const Hyperspace* a : {&ten, &thin}) {
        const auto expected = oracles::first_verified_injection(
            six, *a, [&](const std::vector<int>& map) { return verify_embedding(six, *a, map); });
        const SearchOutcome outcome = find_embedding(six, *a);
        REQUIRE(outcome.status != SearchStatus::Indeterminate);
        CHECK((outcome.status == SearchStatus::Found) == expected.has_value());
        if (expected)
            CHECK(outcome.witness->map == *expected);
    }
}

TEST_CASE("weak search finds the swapped-relations witness") {
    const Cube asym = make_cube(SetTuple(2, {mask_bit(0), mask_from_indices({0, 1})}), {2, 2});
    const Cube swapped = make_cube(SetTuple(2, {mask_from_indices({0, 1}), mask_bit(0)}), {2, 2});
    CHECK(find_embedding(asym.space, swapped.space).status == SearchStatus::None);
    const SearchOutcome weak = find_weak_embedding(asym.space, swapped.space);
    REQUIRE(weak.status == SearchStatus::Found);
    CHECK(verify_weak_embedding(asym.space, swapped.space, weak.witness->map, weak.witness->pi));
    // Least witness in (pi, map) order: the identity permutation admits no
    // embedding, the swap admits the identity element map.
    CHECK(weak.witness->pi == std::vector<int>{1, 0});
    CHECK(weak.witness->map == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("squares embed into squares exactly when they fit") {
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
            const SearchOutcome outcome = find_embedding(square(j), square(k));
            CHECK(outcome.status == (j <= k ? SearchStatus::Found : SearchStatus::None));
        }
}

TEST_CASE("halfcube sits inside the cube it restricts") {
    const Cube half = make_n_halfcube(3, 4);
    const Cube full = make_cube(n_cube_tuple(3), {4, 4, 4});
    CHECK(half.space.size() == 4);
    const SearchOutcome outcome = find_embedding(half.space, full.space);
    CHECK(outcome.status == SearchStatus::Found);
}

TEST_CASE("tiny budgets give indeterminate, not none") {
    const Hyperspace big = square(3);
    const SearchOutcome outcome = find_embedding(big, big, 3);
    CHECK(outcome.status == SearchStatus::Indeterminate);
}

TEST_CASE("pullback along the identity returns the coloring") {
    const Hyperspace a = square(2);
    Coloring chi;
    chi.colors = {0, 1, 1, 0};
    const Coloring back = pullback_coloring(chi, a, a, identity_map(4), {0, 1});
    CHECK(back.colors == chi.colors);
}

TEST_CASE("pullback of a constant coloring is constant") {
    std::vector<Mask> sets;
    for (int i = 0; i < 3; ++i)
        sets.push_back(mask_from_indices({0, 1, 2}) & ~mask_bit(i));
    const ParbeddingConstruction built = min_transversal_parbedding(SetTuple(3, sets), 2, 0);
    Coloring constant;
    constant.colors.assign(built.target.space.size(), 2);
    const Coloring back =
        pullback_coloring(constant, built.domain.space, built.target.space, built.map, built.beta);
    for (int c : back.colors)
        CHECK(c == built.beta[2]);
}

TEST_CASE("pullback rejects non-parbeddings") {
    const Hyperspace a = square(2);
    Coloring chi;
    chi.colors = {0, 0, 0, 0};
    CHECK_THROWS_AS(pullback_coloring(chi, a, a, std::vector<int>(4, 0), {0, 1}), std::invalid_argument);
}

TEST_CASE("pullback counts stay within the transported bound") {
    // Domain and target are 3x3 structures tied by a verified parbedding.
    const ParbeddingConstruction built = min_transversal_parbedding(n_cube_tuple(2), 3, 1);
    const Hyperspace& b = built.domain.space;
    const Hyperspace& a = built.target.space;
    Coloring chi;
    chi.colors.resize(a.size());
    for (int x = 0; x < a.size(); ++x)
        chi.colors[x] = x % 2;
    const Coloring psi = pullback_coloring(chi, b, a, built.map, built.beta);
    const AcceptabilityReport b_report = is_acceptable(b, psi);
    const AcceptabilityReport a_report = is_acceptable(a, chi);
    // Every color-j member of a domain class maps into one target class
    // with color beta^{-1} summed over matching indices.
    std::uint64_t transported = 0;
    for (int x = 0; x < b.size(); ++x)
        for (int j = 0; j < b.relation_count(); ++j) {
            std::uint64_t total = 0;
            for (int i = 0; i < a.relation_count(); ++i)
                if (built.beta[i] == j)
                    total += a_report.counts[i][built.map[x]];
            transported = std::max(transported, total);
        }
    CHECK(b_report.max_count <= transported);
}

TEST_CASE("cube family check on the finite square") {
    const Hyperspace target = square(4);
    CHECK(embeds_all_small_cubes(target, n_cube_tuple(2), 4) == Answer::Yes);
    CHECK(embeds_all_small_cubes(target, n_cube_tuple(2), 5) == Answer::No);
}

TEST_CASE("cube family check fails on all-singleton structures") {
    std::vector<std::vector<int>> labels(2, std::vector<int>(6));
    for (int i = 0; i < 2; ++i)
        for (int x = 0; x < 6; ++x)
            labels[i][x] = x;
    const Hyperspace discrete(2, 6, labels);
    CHECK(embeds_all_small_cubes(discrete, n_cube_tuple(2), 2) == Answer::No);
}

TEST_CASE("fcn estimate of the square needs two dimensions") {
    const Hyperspace target = square(5);
    const FcnEstimate estimate = fcn_estimate(target, 3);
    CHECK(estimate.value == ExtendedNat(2));
    REQUIRE(estimate.witness.has_value());
    CHECK(embeds_all_small_cubes(target, *estimate.witness, 3) == Answer::Yes);
}

TEST_CASE("factor budget one always yields one dimension") {
    const Hyperspace one_point(3, 1, {{0}, {0}, {0}});
    const FcnEstimate estimate = fcn_estimate(one_point, 1);
    CHECK(estimate.value == ExtendedNat(1));
}

TEST_CASE("fcn estimate exhausts to infinity on finite carriers") {
    const Hyperspace target = square(2);
    const FcnEstimate estimate = fcn_estimate(target, 3);
    CHECK(estimate.value == ExtendedNat::infinity());
    CHECK_FALSE(estimate.indeterminate);
}
