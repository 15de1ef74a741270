#include "seeds/families.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace seeds {

std::optional<Family> parse_family(std::string_view name) {
  if (name == "random") return Family::Random;
  if (name == "fibonacci") return Family::Fibonacci;
  if (name == "thue-morse") return Family::ThueMorse;
  if (name == "periodic") return Family::Periodic;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Random: return "random";
    case Family::Fibonacci: return "fibonacci";
    case Family::ThueMorse: return "thue-morse";
    case Family::Periodic: return "periodic";
  }
  return "?";
}

Text make_family_word(Family f, Pos n, std::uint64_t seed, int sigma) {
  if (n <= 0) throw std::invalid_argument("make_family_word: n must be positive");
  if (sigma < 1) throw std::invalid_argument("make_family_word: sigma must be positive");
  std::mt19937_64 rng(seed);
  std::string out;
  out.reserve(static_cast<std::size_t>(n));
  switch (f) {
    case Family::Random: {
      std::uniform_int_distribution<int> pick(0, sigma - 1);
      for (Pos k = 0; k < n; ++k) out.push_back(static_cast<char>('a' + pick(rng)));
      break;
    }
    case Family::Fibonacci: {
      // prefix of the fixed point of a -> ab, b -> a
      std::string prev = "a";
      std::string cur = "ab";
      while (static_cast<Pos>(cur.size()) < n) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      out = cur.substr(0, static_cast<std::size_t>(n));
      break;
    }
    case Family::ThueMorse:
      for (Pos k = 0; k < n; ++k) {
        out.push_back(std::popcount(static_cast<std::uint32_t>(k)) % 2 == 0 ? 'a' : 'b');
      }
      break;
    case Family::Periodic: {
      std::uniform_int_distribution<int> pick(0, std::max(sigma, 2) - 1);
      const Pos period = 3 + static_cast<Pos>(rng() % 14);
      std::string block;
      for (Pos k = 0; k < period; ++k) block.push_back(static_cast<char>('a' + pick(rng)));
      for (Pos k = 0; k < n; ++k) out.push_back(block[static_cast<std::size_t>(k % period)]);
      // sparse substitutions keep long repeats without making w a pure power
      const Pos edits = std::max<Pos>(1, n / 4096);
      for (Pos e = 0; e < edits; ++e) {
        out[rng() % static_cast<std::uint64_t>(n)] = static_cast<char>('a' + pick(rng));
      }
      break;
    }
  }
  return Text::from_bytes(out);
}

}  // namespace seeds
