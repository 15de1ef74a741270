#include "seeds/text.hpp"

#include <algorithm>

namespace seeds {

Text::Text(std::vector<Symbol> symbols) : sym_(std::move(symbols)) {
  if (sym_.size() > static_cast<std::size_t>(INT32_MAX / 2)) {
    throw TextError("text too long");
  }
  for (Symbol s : sym_) {
    if (s < 0) throw TextError("negative symbol " + std::to_string(s));
    bound_ = std::max(bound_, s + 1);
  }
}

Text Text::from_bytes(std::string_view bytes) {
  std::vector<Symbol> v(bytes.size());
  std::transform(bytes.begin(), bytes.end(), v.begin(),
                 [](char c) { return static_cast<Symbol>(static_cast<unsigned char>(c)); });
  return Text(std::move(v));
}

std::string Text::render(Pos p, Pos len) const {
  std::string out;
  if (is_byte_text()) {
    out.reserve(static_cast<std::size_t>(len));
    for (Pos k = p; k < p + len; ++k) out.push_back(static_cast<char>((*this)[k]));
    return out;
  }
  for (Pos k = p; k < p + len; ++k) {
    if (k != p) out.push_back(' ');
    out += std::to_string((*this)[k]);
  }
  return out;
}

}  // namespace seeds
