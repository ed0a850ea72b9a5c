#include "ihs/cubes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ihs {

namespace {

constexpr std::uint64_t kMaxCarrier = 1u << 20;

// Labels a carrier of coordinate tuples: under relation i two tuples share
// a class iff they agree on every coordinate outside S_i.
Hyperspace label_by_projections(const SetTuple& tuple, const std::vector<std::vector<std::uint64_t>>& carrier) {
    const int n = tuple.length();
    const int m = tuple.codomain;
    std::vector<std::vector<int>> labels(n, std::vector<int>(carrier.size(), 0));
    for (int i = 0; i < n; ++i) {
        std::map<std::vector<std::uint64_t>, int> ids;
        std::vector<std::uint64_t> key;
        for (std::size_t e = 0; e < carrier.size(); ++e) {
            key.clear();
            for (int j = 0; j < m; ++j)
                if ((tuple.sets[i] & mask_bit(j)) == 0)
                    key.push_back(carrier[e][j]);
            auto [it, inserted] = ids.try_emplace(key, static_cast<int>(ids.size()));
            labels[i][e] = it->second;
        }
    }
    return Hyperspace(n, static_cast<int>(carrier.size()), std::move(labels));
}

}  // namespace

SetTuple n_cube_tuple(int n) {
    if (n < 1)
        throw std::invalid_argument("n_cube_tuple: n must be positive");
    std::vector<Mask> sets(n);
    for (int i = 0; i < n; ++i)
        sets[i] = mask_bit(i);
    return SetTuple(n, std::move(sets));
}

Cube make_cube(const SetTuple& tuple, const std::vector<std::uint64_t>& factors) {
    if (tuple.length() < 1)
        throw std::invalid_argument("make_cube: tuple must be nonempty");
    if (static_cast<int>(factors.size()) != tuple.codomain)
        throw std::invalid_argument("make_cube: factor count must equal the tuple codomain");
    std::uint64_t size = 1;
    for (std::uint64_t f : factors) {
        if (f == 0)
            throw std::invalid_argument("make_cube: empty factor");
        if (size > kMaxCarrier / f)
            throw std::invalid_argument("make_cube: carrier too large");
        size *= f;
    }
    const int m = tuple.codomain;
    std::vector<std::vector<std::uint64_t>> carrier(size, std::vector<std::uint64_t>(m, 0));
    for (std::uint64_t e = 0; e < size; ++e) {
        std::uint64_t rest = e;
        for (int j = 0; j < m; ++j) {
            carrier[e][j] = rest % factors[j];
            rest /= factors[j];
        }
    }
    return Cube{label_by_projections(tuple, carrier), std::move(carrier)};
}

Cube make_halfcube(const SetTuple& tuple, std::uint64_t k, bool allow_empty) {
    if (tuple.length() < 1)
        throw std::invalid_argument("make_halfcube: tuple must be nonempty");
    const int m = tuple.codomain;
    if (m < 1)
        throw std::invalid_argument("make_halfcube: codomain must be positive");
    if (k < static_cast<std::uint64_t>(m) && !allow_empty)
        throw std::invalid_argument("make_halfcube: k below the codomain gives an empty carrier");

    std::vector<std::vector<std::uint64_t>> carrier;
    std::vector<std::uint64_t> current(m);
    // Strictly increasing tuples from {0..k-1} in lexicographic order.
    if (k >= static_cast<std::uint64_t>(m)) {
        for (int j = 0; j < m; ++j)
            current[j] = static_cast<std::uint64_t>(j);
        while (true) {
            carrier.push_back(current);
            if (carrier.size() > kMaxCarrier)
                throw std::invalid_argument("make_halfcube: carrier too large");
            int j = m - 1;
            while (j >= 0 && current[j] == k - static_cast<std::uint64_t>(m - 1 - j) - 1)
                --j;
            if (j < 0)
                break;
            ++current[j];
            for (int r = j + 1; r < m; ++r)
                current[r] = current[r - 1] + 1;
        }
    }
    return Cube{label_by_projections(tuple, carrier), std::move(carrier)};
}

Cube make_n_halfcube(int n, std::uint64_t k) {
    return make_halfcube(n_cube_tuple(n), k);
}

ParbeddingConstruction min_transversal_parbedding(const SetTuple& tuple, std::uint64_t x_size, std::uint64_t c) {
    const int n = tuple.length();
    const int m = tuple.codomain;
    if (n < 1)
        throw std::invalid_argument("min_transversal_parbedding: tuple must be nonempty");
    for (Mask s : tuple.sets)
        if (s == 0)
            throw std::invalid_argument("min_transversal_parbedding: tuple entries must be nonempty");
    if (x_size < 1)
        throw std::invalid_argument("min_transversal_parbedding: X must be nonempty");
    if (c >= x_size)
        throw std::invalid_argument("min_transversal_parbedding: c outside X");

    const ExtendedNat tau = tuple_transversal_number(tuple);
    const int d = static_cast<int>(tau.finite_value());

    // Lexicographically least transversal of minimum size, as an ascending
    // index sequence.
    std::vector<int> transversal;
    {
        std::vector<int> choice(d);
        auto is_tuple_transversal = [&](const std::vector<int>& t) {
            Mask tm = 0;
            for (int e : t)
                tm |= mask_bit(e);
            for (Mask s : tuple.sets)
                if ((s & tm) == 0)
                    return false;
            return true;
        };
        // First d-combination of {0..m-1}, in lexicographic order, that is
        // a transversal.
        for (int j = 0; j < d; ++j)
            choice[j] = j;
        while (true) {
            if (is_tuple_transversal(choice)) {
                transversal = choice;
                break;
            }
            int j = d - 1;
            while (j >= 0 && choice[j] == m - d + j)
                --j;
            if (j < 0)
                break;
            ++choice[j];
            for (int r = j + 1; r < d; ++r)
                choice[r] = choice[r - 1] + 1;
        }
    }
    if (transversal.empty() && d > 0)
        throw std::logic_error("min_transversal_parbedding: no transversal of the computed size");

    std::vector<int> beta(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j)
            if (tuple.sets[i] & mask_bit(transversal[j])) {
                beta[i] = j;
                break;
            }
    }

    Cube domain = make_cube(n_cube_tuple(d), std::vector<std::uint64_t>(d, x_size));
    Cube target = make_cube(tuple, std::vector<std::uint64_t>(m, x_size));

    // Target ids are colexicographic, so a coordinate tuple converts back to
    // an id by mixed-radix evaluation.
    std::vector<int> map(domain.coordinates.size());
    std::vector<std::uint64_t> y(m);
    for (std::size_t e = 0; e < domain.coordinates.size(); ++e) {
        std::fill(y.begin(), y.end(), c);
        for (int j = 0; j < d; ++j)
            y[transversal[j]] = domain.coordinates[e][j];
        std::uint64_t id = 0;
        for (int j = m - 1; j >= 0; --j)
            id = id * x_size + y[j];
        map[e] = static_cast<int>(id);
    }

    return ParbeddingConstruction{std::move(domain), std::move(target), std::move(map), std::move(beta),
                                  std::move(transversal)};
}

}  // namespace ihs
