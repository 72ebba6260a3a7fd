#pragma once

// Randomised property suites over a group and its universal tree. Reports are
// deterministic functions of (group, samples, seed).

#include <cstdint>
#include <string_view>

#include "ltree/group.hpp"
#include "ltree/tree.hpp"

namespace ltree {

/// Random point <alpha, g>: alpha is an endpoint, a branch value c(g, h) for a
/// random h, or uniform on a random level of [0, |g|].
TreePoint random_point(ElementSampler& sampler);

/// A second representative of p (same point, different element) when one is
/// found among a few random right multiples; p itself otherwise.
TreePoint other_representative(ElementSampler& sampler, const TreePoint& p);

/// M1-M4, well-definedness under representative swaps (WD), isosceles
/// overlaps (H0), medians (MED) and letter labels (XI).
CheckReport check_metric(const GroupDef& group, std::size_t samples, std::uint64_t seed);

/// Isometry (ISO), composition (COMP), freeness (FREE), based length (BL)
/// and axis/translation length consistency (AX).
CheckReport check_action(const GroupDef& group, std::size_t samples, std::uint64_t seed);

/// "length", "metric", "action" or "all". Throws std::invalid_argument for
/// other names.
CheckReport run_suite(const GroupDef& group, std::string_view suite, std::size_t samples,
                      std::uint64_t seed);

}  // namespace ltree
