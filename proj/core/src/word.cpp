#include "cotrans/word.hpp"

#include <charconv>

namespace cotrans {

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  if (text.empty() || text == "e") return {};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view piece = text.substr(pos, dot - pos);
    Letter value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size())
      throw Error(Errc::SyntaxError, "bad word '" + std::string(text) + "' at offset " + std::to_string(pos));
    letters.push_back(value);
    pos = dot + 1;
  }
  return Word(std::move(letters));
}

std::string to_string(const RootPath& r) {
  std::string out = "[";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r[i]);
  }
  return out + "]";
}

}  // namespace cotrans
