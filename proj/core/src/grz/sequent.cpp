#include "cotrans/grz/sequent.hpp"

#include <algorithm>
#include <iterator>

#include "cotrans/error.hpp"

namespace cotrans::grz {

Multiset::Multiset(std::initializer_list<Formula> items) : items_(items) { std::sort(items_.begin(), items_.end()); }

Multiset::Multiset(std::vector<Formula> items) : items_(std::move(items)) { std::sort(items_.begin(), items_.end()); }

std::size_t Multiset::count(const Formula& f) const {
  auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
  return static_cast<std::size_t>(hi - lo);
}

bool Multiset::includes(const Multiset& sub) const {
  return std::includes(items_.begin(), items_.end(), sub.items_.begin(), sub.items_.end());
}

std::vector<Formula> Multiset::distinct() const {
  std::vector<Formula> out;
  std::unique_copy(items_.begin(), items_.end(), std::back_inserter(out));
  return out;
}

void Multiset::insert(const Formula& f) { items_.insert(std::upper_bound(items_.begin(), items_.end(), f), f); }

bool Multiset::erase(const Formula& f) {
  auto it = std::lower_bound(items_.begin(), items_.end(), f);
  if (it == items_.end() || *it != f) return false;
  items_.erase(it);
  return true;
}

Multiset operator+(const Multiset& a, const Multiset& b) {
  Multiset out;
  out.items_.reserve(a.size() + b.size());
  std::merge(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(), std::back_inserter(out.items_));
  return out;
}

Multiset operator-(const Multiset& a, const Multiset& b) {
  Multiset out;
  std::set_difference(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

Multiset intersect(const Multiset& a, const Multiset& b) {
  Multiset out;
  std::set_intersection(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(),
                        std::back_inserter(out.items_));
  return out;
}

Multiset join(const Multiset& a, const Multiset& b) {
  Multiset out;
  std::set_union(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end(), std::back_inserter(out.items_));
  return out;
}

Sequent Sequent::with_left(const Formula& f) const {
  Sequent s = *this;
  s.ante.insert(f);
  return s;
}

Sequent Sequent::with_right(const Formula& f) const {
  Sequent s = *this;
  s.succ.insert(f);
  return s;
}

Sequent Sequent::without_left(const Formula& f) const {
  Sequent s = *this;
  if (!s.ante.erase(f)) throw Error(Errc::FormulaAbsent, to_string(f) + " is not on the left of " + to_string(*this));
  return s;
}

Sequent Sequent::without_right(const Formula& f) const {
  Sequent s = *this;
  if (!s.succ.erase(f)) throw Error(Errc::FormulaAbsent, to_string(f) + " is not on the right of " + to_string(*this));
  return s;
}

std::string to_string(const Multiset& m) {
  std::string out;
  for (const auto& f : m) {
    if (!out.empty()) out += ", ";
    out += to_string(f);
  }
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out = to_string(s.ante);
  out += out.empty() ? "|-" : " |-";
  if (!s.succ.empty()) out += " " + to_string(s.succ);
  return out;
}

namespace {

Multiset parse_side(std::string_view text) {
  std::vector<Formula> items;
  std::size_t start = 0;
  bool blank = text.find_first_not_of(" \t\r\n") == std::string_view::npos;
  if (blank) return {};
  for (;;) {
    std::size_t comma = text.find(',', start);
    items.push_back(parse_formula(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Multiset(std::move(items));
}

}  // namespace

Sequent parse_sequent(std::string_view text) {
  std::size_t turnstile = text.find("|-");
  if (turnstile == std::string_view::npos)
    throw Error(Errc::SyntaxError, "missing '|-' in sequent '" + std::string(text) + "'");
  if (text.find("|-", turnstile + 2) != std::string_view::npos)
    throw Error(Errc::SyntaxError, "two '|-' in sequent '" + std::string(text) + "'");
  return {parse_side(text.substr(0, turnstile)), parse_side(text.substr(turnstile + 2))};
}

}  // namespace cotrans::grz
