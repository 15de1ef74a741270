#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "seeds/text.hpp"

namespace seeds {

/// Word families for benchmarks and stress runs.
enum class Family { Random, Fibonacci, ThueMorse, Periodic };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);

/// A word of length n from the family. Random draws letters from {a, b}
/// (sigma = 2) or more; periodic repeats a random primitive-looking block of
/// length period with a few substitutions, so it is not purely periodic.
Text make_family_word(Family f, Pos n, std::uint64_t seed, int sigma = 2);

}  // namespace seeds
