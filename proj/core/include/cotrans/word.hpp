#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cotrans/error.hpp"

namespace cotrans {

using Letter = std::uint32_t;

/// A finite sequence of naturals addressing a node of a tree.
///
/// The order is lexicographic on letters, so a word sorts before all of its
/// proper extensions and sibling subtrees are contiguous: iterating a
/// `std::map<Word, T>` visits a tree in preorder.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  Word child(Letter i) const {
    Word w = *this;
    w.letters_.push_back(i);
    return w;
  }

  Word parent() const {
    Word w = *this;
    w.letters_.pop_back();
    return w;
  }

  // Suffix left after removing `prefix`; caller guarantees prefix_le(prefix, *this).
  Word drop(const Word& prefix) const {
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                                    letters_.end()));
  }

  Word& operator+=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline bool prefix_le(const Word& w, const Word& v) {
  if (w.size() > v.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != v[i]) return false;
  return true;
}

inline bool prefix_lt(const Word& w, const Word& v) { return w.size() < v.size() && prefix_le(w, v); }

// No common prefix-upper bound.
inline bool disjoint(const Word& w, const Word& v) { return !prefix_le(w, v) && !prefix_le(v, w); }

// Dot-separated letters; the empty word prints as "e".
std::string to_string(const Word& w);
Word parse_word(std::string_view text);

/// A finite sequence of non-empty words: the roots crossed when walking from
/// a fragment root to a later one.
class RootPath {
 public:
  RootPath() = default;
  RootPath(std::initializer_list<Word> items) {
    for (const auto& w : items) push_back(w);
  }
  explicit RootPath(const std::vector<Word>& items) {
    for (const auto& w : items) push_back(w);
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::vector<Word>& items() const noexcept { return items_; }
  const Word& operator[](std::size_t i) const { return items_[i]; }
  const Word& front() const { return items_.front(); }

  void push_back(const Word& w) {
    if (w.empty()) throw Error(Errc::NotARootPath, "root-path items must be non-empty words");
    items_.push_back(w);
  }

  RootPath then(const Word& w) const {
    RootPath r = *this;
    r.push_back(w);
    return r;
  }

  RootPath tail() const {
    RootPath r;
    r.items_.assign(items_.begin() + 1, items_.end());
    return r;
  }

  RootPath prefix(std::size_t n) const {
    RootPath r;
    r.items_.assign(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(n));
    return r;
  }

  friend RootPath operator+(RootPath lhs, const RootPath& rhs) {
    lhs.items_.insert(lhs.items_.end(), rhs.items_.begin(), rhs.items_.end());
    return lhs;
  }
  friend bool operator==(const RootPath&, const RootPath&) = default;
  friend auto operator<=>(const RootPath&, const RootPath&) = default;

 private:
  std::vector<Word> items_;
};

inline bool prefix_le(const RootPath& r, const RootPath& s) {
  if (r.size() > s.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != s[i]) return false;
  return true;
}

inline bool prefix_lt(const RootPath& r, const RootPath& s) { return r.size() < s.size() && prefix_le(r, s); }

inline Word word_of(const RootPath& r) {
  Word w;
  for (const auto& item : r.items()) w += item;
  return w;
}

std::string to_string(const RootPath& r);

}  // namespace cotrans
