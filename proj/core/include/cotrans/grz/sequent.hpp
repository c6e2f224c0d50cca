#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cotrans/grz/formula.hpp"

namespace cotrans::grz {

/// Finite multiset of formulas kept as a sorted vector, so equal multisets
/// have equal representations and union, difference and intersection are
/// linear merges.
class Multiset {
 public:
  Multiset() = default;
  Multiset(std::initializer_list<Formula> items);
  explicit Multiset(std::vector<Formula> items);

  const std::vector<Formula>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  std::size_t count(const Formula& f) const;
  bool contains(const Formula& f) const { return count(f) > 0; }
  bool includes(const Multiset& sub) const;
  // Distinct elements, in order.
  std::vector<Formula> distinct() const;

  void insert(const Formula& f);
  // Removes one occurrence; false if there was none.
  bool erase(const Formula& f);

  friend Multiset operator+(const Multiset& a, const Multiset& b);
  // Multiset difference: multiplicities subtract, floored at zero.
  friend Multiset operator-(const Multiset& a, const Multiset& b);
  // Per-formula minimum.
  friend Multiset intersect(const Multiset& a, const Multiset& b);
  // Per-formula maximum.
  friend Multiset join(const Multiset& a, const Multiset& b);

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Formula> items_;
};

/// Two-sided sequent: antecedent (the bullet side) and succedent (the circle side).
struct Sequent {
  Multiset ante;
  Multiset succ;

  Sequent with_left(const Formula& f) const;
  Sequent with_right(const Formula& f) const;
  // Throws FormulaAbsent if the formula is not there.
  Sequent without_left(const Formula& f) const;
  Sequent without_right(const Formula& f) const;
  bool includes(const Sequent& sub) const { return ante.includes(sub.ante) && succ.includes(sub.succ); }
  bool empty() const noexcept { return ante.empty() && succ.empty(); }
  std::size_t size() const noexcept { return ante.size() + succ.size(); }

  friend Sequent operator+(const Sequent& a, const Sequent& b) { return {a.ante + b.ante, a.succ + b.succ}; }
  friend Sequent operator-(const Sequent& a, const Sequent& b) { return {a.ante - b.ante, a.succ - b.succ}; }
  friend Sequent intersect(const Sequent& a, const Sequent& b) {
    return {intersect(a.ante, b.ante), intersect(a.succ, b.succ)};
  }

  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend auto operator<=>(const Sequent&, const Sequent&) = default;
};

inline Sequent left(const Formula& f) { return {Multiset{f}, {}}; }
inline Sequent right(const Formula& f) { return {{}, Multiset{f}}; }

// "p0, box p1 |- p0"; either side may be empty.
std::string to_string(const Multiset& m);
std::string to_string(const Sequent& s);
Sequent parse_sequent(std::string_view text);

}  // namespace cotrans::grz
