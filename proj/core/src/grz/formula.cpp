#include "cotrans/grz/formula.hpp"

#include <cctype>
#include <charconv>

#include "cotrans/error.hpp"

namespace cotrans::grz {

struct Formula::Node {
  Kind kind = Kind::Bot;
  std::uint32_t atom = 0;
  Formula a;
  Formula b;
  std::size_t size = 1;
  std::size_t rank = 0;
};

// A null node is false.
Formula::Formula() : n_(nullptr) {}

Formula Formula::bot() { return Formula(); }

Formula Formula::atom(std::uint32_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = index;
  return Formula(std::move(n));
}

Formula Formula::imp(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Imp;
  n->size = 1 + lhs.size() + rhs.size();
  n->rank = 1 + lhs.rank() + rhs.rank();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::box(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Box;
  n->size = 1 + body.size();
  n->rank = 1 + body.rank();
  n->a = std::move(body);
  return Formula(std::move(n));
}

Kind Formula::kind() const noexcept { return n_ ? n_->kind : Kind::Bot; }
std::uint32_t Formula::atom_index() const noexcept { return n_ ? n_->atom : 0; }
const Formula& Formula::lhs() const noexcept { return n_->a; }
const Formula& Formula::rhs() const noexcept { return n_->b; }
const Formula& Formula::body() const noexcept { return n_->a; }
std::size_t Formula::size() const noexcept { return n_ ? n_->size : 1; }
std::size_t Formula::rank() const noexcept { return n_ ? n_->rank : 0; }

bool operator==(const Formula& a, const Formula& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Kind::Bot:
      return std::strong_ordering::equal;
    case Kind::Atom:
      return a.atom_index() <=> b.atom_index();
    case Kind::Box:
      return a.body() <=> b.body();
    case Kind::Imp:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
  return std::strong_ordering::equal;
}

namespace {

void collect(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.is(Kind::Imp)) {
    collect(f.lhs(), out);
    collect(f.rhs(), out);
  } else if (f.is(Kind::Box)) {
    collect(f.body(), out);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = unary();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Formula::imp(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula unary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of formula");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = implication();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return f;
    }
    if (keyword("box")) return Formula::box(unary());
    if (keyword("false")) return Formula::bot();
    if (c == 'p') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::uint32_t index = 0;
      auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, index);
      if (start == pos_ || ec != std::errc{}) fail("bad atom");
      if (pos_ < text_.size() && ident_char(text_[pos_])) fail("bad atom");
      return Formula::atom(index);
    }
    fail("expected a formula");
  }

  bool keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t after = pos_ + word.size();
    if (after < text_.size() && ident_char(text_[after])) return false;
    pos_ = after;
    return true;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw Error(Errc::SyntaxError, std::string(what) + " at offset " + std::to_string(pos_) + " in '" +
                                       std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::Bot:
      out += "false";
      return;
    case Kind::Atom:
      out += 'p';
      out += std::to_string(f.atom_index());
      return;
    case Kind::Box:
      out += "box ";
      if (f.body().is(Kind::Imp)) {
        out += '(';
        print(f.body(), out);
        out += ')';
      } else {
        print(f.body(), out);
      }
      return;
    case Kind::Imp:
      if (f.lhs().is(Kind::Imp)) {
        out += '(';
        print(f.lhs(), out);
        out += ')';
      } else {
        print(f.lhs(), out);
      }
      out += " -> ";
      print(f.rhs(), out);
      return;
  }
}

}  // namespace

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect(f, out);
  return out;
}

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

}  // namespace cotrans::grz
