#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace cotrans::grz {

enum class Kind : std::uint8_t { Bot, Atom, Imp, Box };

/// Modal formula over false, atoms p0 p1 ..., implication and box. Immutable
/// and shared; equality and order are structural.
class Formula {
 public:
  Formula();  // false

  static Formula bot();
  static Formula atom(std::uint32_t index);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula box(Formula body);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }
  std::uint32_t atom_index() const noexcept;
  const Formula& lhs() const noexcept;   // Imp
  const Formula& rhs() const noexcept;   // Imp
  const Formula& body() const noexcept;  // Box

  // Symbols in the formula.
  std::size_t size() const noexcept;
  // Count of implications and boxes.
  std::size_t rank() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

inline std::size_t rank(const Formula& f) noexcept { return f.rank(); }

std::set<Formula> subformulas(const Formula& f);

// Grammar: atoms p0 p1 ..., `false`, prefix `box`, right-associative `->`,
// parentheses. `box` binds tighter than `->`.
Formula parse_formula(std::string_view text);
std::string to_string(const Formula& f);

}  // namespace cotrans::grz
