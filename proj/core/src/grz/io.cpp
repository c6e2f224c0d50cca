#include "cotrans/grz/io.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace cotrans::grz {

namespace {

struct Token {
  enum Kind { Word, Bracket, Open, Close, End } kind;
  std::string text;
  std::size_t line;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip();
    if (pos_ == text_.size()) return {Token::End, "", line_};
    char c = text_[pos_];
    if (c == '{') return single(Token::Open);
    if (c == '}') return single(Token::Close);
    if (c == '[') {
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated '['");
      std::string body(text_.substr(pos_ + 1, close - pos_ - 1));
      if (body.find('\n') != std::string::npos) fail("sequent spans lines");
      pos_ = close + 1;
      return {Token::Bracket, body, line_};
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '{' &&
           text_[pos_] != '}' && text_[pos_] != '[' && text_[pos_] != '#')
      ++pos_;
    return {Token::Word, std::string(text_.substr(start, pos_ - start)), line_};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, what + " on line " + std::to_string(line_));
  }

 private:
  Token single(Token::Kind k) {
    ++pos_;
    return {k, std::string(1, text_[pos_ - 1]), line_};
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

class FileParser {
 public:
  explicit FileParser(std::string_view text) : lex_(text) { advance(); }

  GraphFile parse() {
    expect_word("calculus");
    std::string calculus = take_word("calculus name");
    expect_word("root");
    std::string root = take_word("root state");

    struct Raw {
      std::map<Word, Fragment::Slot> nodes;
      std::map<Word, std::string> links;
      std::size_t line;
    };
    std::vector<std::pair<std::string, Raw>> states;
    std::map<std::string, StateId> ids;
    while (tok_.kind != Token::End) {
      expect_word("state");
      std::size_t line = tok_.line;
      std::string name = take_word("state name");
      if (ids.contains(name)) lex_.fail("state " + name + " defined twice");
      ids.emplace(name, static_cast<StateId>(states.size()));
      expect(Token::Open, "'{'");
      Raw raw{{}, {}, line};
      node(Word{}, raw.nodes, raw.links);
      expect(Token::Close, "'}'");
      states.emplace_back(name, std::move(raw));
    }
    if (!ids.contains(root)) throw Error(Errc::UnknownState, "root state " + root + " is not defined");

    GraphCoalgebra g;
    std::vector<std::string> names;
    for (auto& [name, raw] : states) {
      names.push_back(name);
      std::map<Word, StateId> links;
      for (const auto& [w, target] : raw.links) {
        auto it = ids.find(target);
        if (it == ids.end())
          throw Error(Errc::UnknownState, "state " + name + " links to undefined state " + target);
        links.emplace(w, it->second);
      }
      g.add(Fragment::validate(std::move(raw.nodes)), std::move(links));
    }
    return {calculus, make_graph(std::move(g), ids.at(root)), std::move(names)};
  }

 private:
  void node(const Word& at, std::map<Word, Fragment::Slot>& nodes, std::map<Word, std::string>& links) {
    if (tok_.kind != Token::Bracket) lex_.fail("expected '[sequent]'");
    Sequent seq = parse_sequent(tok_.text);
    advance();
    std::string rule = take_word("rule name");
    nodes.emplace(at, Label{std::move(seq), RuleId{rule}});
    if (tok_.kind != Token::Open) return;
    advance();
    Letter i = 0;
    while (tok_.kind != Token::Close) {
      Word child = at.child(i++);
      if (tok_.kind == Token::Word && tok_.text == "link") {
        advance();
        links.emplace(child, take_word("linked state"));
        nodes.emplace(child, std::nullopt);
      } else {
        node(child, nodes, links);
      }
    }
    advance();
  }

  void advance() { tok_ = lex_.next(); }

  void expect(Token::Kind k, const char* what) {
    if (tok_.kind != k) lex_.fail(std::string("expected ") + what);
    advance();
  }

  void expect_word(const char* word) {
    if (tok_.kind != Token::Word || tok_.text != word) lex_.fail(std::string("expected '") + word + "'");
    advance();
  }

  std::string take_word(const char* what) {
    if (tok_.kind != Token::Word) lex_.fail(std::string("expected ") + what);
    std::string s = tok_.text;
    advance();
    return s;
  }

  Lexer lex_;
  Token tok_{Token::End, "", 0};
};

std::string state_name(StateId s) { return "s" + std::to_string(s); }

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) { return FileParser(text).parse(); }

std::string print_graph_file(const Graph& g, std::string_view calculus, const std::vector<std::string>& comments) {
  GraphCoalgebra canon = restrict_to(g.graph(), g.root);
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "calculus " + std::string(calculus) + "\nroot s0\n";
  for (StateId s = 0; s < canon.size(); ++s) {
    const auto& [frag, links] = canon.destruct(s);
    out += "\nstate " + state_name(s) + " {\n";
    std::function<void(const Word&, std::size_t)> emit = [&](const Word& w, std::size_t depth) {
      std::string pad(2 * depth, ' ');
      if (frag.is_star(w)) {
        out += pad + "link " + state_name(links.at(w)) + "\n";
        return;
      }
      const Label& l = frag.label(w);
      out += pad + "[" + to_string(l.sequent) + "] " + l.rule.name;
      std::size_t k = frag.arity(w);
      if (k == 0) {
        out += "\n";
        return;
      }
      out += " {\n";
      for (std::size_t i = 0; i < k; ++i) emit(w.child(static_cast<Letter>(i)), depth + 1);
      out += pad + "}\n";
    };
    emit(Word{}, 1);
    out += "}\n";
  }
  return out;
}

std::string render_dot(const Graph& g) {
  GraphCoalgebra canon = restrict_to(g.graph(), g.root);
  auto id = [](StateId s, const Word& w) { return "\"" + state_name(s) + ":" + to_string(w) + "\""; };
  std::string out = "digraph proof {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  std::string edges;
  for (StateId s = 0; s < canon.size(); ++s) {
    const auto& [frag, links] = canon.destruct(s);
    out += "  subgraph cluster_" + state_name(s) + " {\n    label=\"" + state_name(s) + "\";\n";
    for (const auto& [w, slot] : frag.nodes()) {
      if (!slot) continue;
      out += "    " + id(s, w) + " [label=\"" + escape(to_string(slot->sequent)) + "\\n" + escape(slot->rule.name) + "\"];\n";
      if (w.empty()) continue;
      if (frag.is_star(w)) continue;
      edges += "  " + id(s, w) + " -> " + id(s, w.parent()) + ";\n";
    }
    out += "  }\n";
    for (const auto& [leaf, target] : links)
      edges += "  " + id(target, Word{}) + " -> " + id(s, leaf.parent()) + " [style=dashed];\n";
  }
  return out + edges + "}\n";
}

std::string print_unfolding(const FFTree<Label>& tree) {
  std::string out;
  for (const auto& [w, n] : tree.nodes()) {
    std::string pad(2 * w.size(), ' ');
    out += pad + to_string(w) + " ";
    if (n.truncated) {
      out += "... s" + std::to_string(*n.truncated) + " [" + to_string(n.label.sequent) + "]\n";
      continue;
    }
    out += "[" + to_string(n.label.sequent) + "] " + n.label.rule.name;
    if (tree.frag_root(w) == w) out += "  # fragment";
    out += "\n";
  }
  return out;
}

}  // namespace cotrans::grz
