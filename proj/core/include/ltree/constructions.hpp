#pragma once

// Ready-made groups: free groups with the standard length, and HNN extensions
// of a free group embedded in words over Z^2 via a periodic stable letter.

#include <string>
#include <string_view>
#include <vector>

#include "ltree/group.hpp"

namespace ltree {

/// F(X) over Z, one generator per letter.
GroupDef free_group(const std::vector<std::string>& alphabet);

/// <F, s | s^-1 u s = u>: s is the Z^2 word of length (0,1) reading u forwards
/// from its start and backwards from its end. Requires u cyclically reduced
/// and not a proper power.
GroupDef hnn_stable(const Alphabet& alphabet, const FiniteWord& u, const std::string& stable = "s");

/// <F, s | s^-1 u s = v> with |u| = |v|: s reads u forwards from its start
/// and v backwards from its end.
GroupDef hnn_conjugate(const Alphabet& alphabet, const FiniteWord& u, const FiniteWord& v,
                       const std::string& stable = "s");

/// Text front ends; an empty alphabet is inferred from the letters of u (and v).
GroupDef hnn_stable(std::vector<std::string> alphabet, std::string_view u,
                    const std::string& stable = "s");
GroupDef hnn_conjugate(std::vector<std::string> alphabet, std::string_view u, std::string_view v,
                       const std::string& stable = "s");

}  // namespace ltree
