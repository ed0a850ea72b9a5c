#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ihs/set_system.hpp"

namespace ihs {

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::optional<std::string> counterexample;  // set iff the suite refuted its identity

    bool passed() const { return !counterexample.has_value(); }
};

/// tuple_transversal_number(S) == depth(induced_system(S)) over every tuple
/// of nonempty subsets with length <= max_n and codomain <= max_m.
SuiteResult check_tau_equals_induced_depth_exhaustive(int max_n, int max_m);

/// Same identity over random tuples (entries may be empty) with length and
/// codomain up to max_n and max_m.
SuiteResult check_tau_equals_induced_depth_sampled(int max_n, int max_m, std::uint64_t samples,
                                                   std::uint64_t seed);

/// dandy_to_depth(I, d) iff d < depth(I), exhaustively over every family of
/// members of size >= 2 on grounds up to max_n, for every d <= ground.
SuiteResult check_dandy_vs_depth_exhaustive(int max_n);

/// Same equivalence over random families (members of any size) on the
/// given ground.
SuiteResult check_dandy_vs_depth_sampled(int ground, std::uint64_t samples, std::uint64_t seed);

/// depth(restrict(I, J)) >= depth(I) - 1 for random families and random
/// transversals J, grounds up to max_n.
SuiteResult check_restriction_depth_drop_sampled(int max_n, std::uint64_t samples, std::uint64_t seed);

/// Cover-reformulation depth equals the transversal-tuple brute force on
/// every family over grounds up to max_n.
SuiteResult check_depth_cross_validation_exhaustive(int max_n);

}  // namespace ihs
