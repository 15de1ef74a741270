#pragma once

#include <span>
#include <vector>

#include "seeds/text.hpp"

namespace seeds {

/// Z-function: z[k] = longest common prefix of s and s[k..] (0-based),
/// z[0] = |s|.
std::vector<Pos> z_function(std::span<const Symbol> s);

/// Every position of w lies inside an occurrence of v.
bool is_cover(std::span<const Symbol> v, const Text& w);
/// w = xyz with |x|, |z| < |v| and v a cover of y.
bool is_quasiseed(std::span<const Symbol> v, const Text& w);
/// v occurs in w and covers some superstring of w. Linear time.
bool is_seed(std::span<const Symbol> v, const Text& w);

}  // namespace seeds
