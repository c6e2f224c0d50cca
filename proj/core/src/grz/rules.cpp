#include "cotrans/grz/rules.hpp"

#include <algorithm>
#include <string>

namespace cotrans::grz {

std::string_view rule_name(GrzRule r) {
  switch (r) {
    case GrzRule::Ax: return "ax";
    case GrzRule::BotL: return "botl";
    case GrzRule::ImpL: return "impl";
    case GrzRule::ImpR: return "impr";
    case GrzRule::Refl: return "refl";
    case GrzRule::Box: return "box";
    case GrzRule::Cut: return "cut";
  }
  return "?";
}

std::optional<GrzRule> rule_from_name(std::string_view name) {
  for (GrzRule r : kAllRules)
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

RuleId rule_id(GrzRule r) { return {std::string(rule_name(r))}; }

namespace {

std::optional<Formula> match_ax(const Sequent& c) {
  for (const auto& f : c.ante.distinct())
    if (f.is(Kind::Atom) && c.succ.contains(f)) return f;
  return std::nullopt;
}

std::optional<Formula> match_impl(const std::vector<Sequent>& p, const Sequent& c) {
  for (const auto& f : c.ante.distinct()) {
    if (!f.is(Kind::Imp)) continue;
    Sequent s = c.without_left(f);
    if (p[0] == s.with_right(f.lhs()) && p[1] == s.with_left(f.rhs())) return f;
  }
  return std::nullopt;
}

std::optional<Formula> match_impr(const std::vector<Sequent>& p, const Sequent& c) {
  for (const auto& f : c.succ.distinct()) {
    if (!f.is(Kind::Imp)) continue;
    if (p[0] == c.without_right(f).with_left(f.lhs()).with_right(f.rhs())) return f;
  }
  return std::nullopt;
}

std::optional<Formula> match_refl(const std::vector<Sequent>& p, const Sequent& c) {
  for (const auto& f : c.ante.distinct()) {
    if (!f.is(Kind::Box)) continue;
    if (p[0] == c.with_left(f.body())) return f;
  }
  return std::nullopt;
}

std::optional<Formula> match_box(const std::vector<Sequent>& p, const Sequent& c) {
  const Sequent& right = p[1];
  if (right.succ.size() != 1) return std::nullopt;
  Formula f = Formula::box(right.succ.items().front());
  if (!c.succ.contains(f)) return std::nullopt;
  for (const auto& g : right.ante)
    if (!g.is(Kind::Box)) return std::nullopt;
  if (!c.ante.includes(right.ante)) return std::nullopt;
  if (p[0] != c.without_right(f).with_right(f.body())) return std::nullopt;
  return f;
}

std::optional<Formula> match_cut(const std::vector<Sequent>& p, const Sequent& c) {
  if (p[0].ante != c.ante || p[1].succ != c.succ) return std::nullopt;
  if (p[0].succ.size() != c.succ.size() + 1 || p[1].ante.size() != c.ante.size() + 1) return std::nullopt;
  if (!p[0].succ.includes(c.succ) || !p[1].ante.includes(c.ante)) return std::nullopt;
  Multiset r = p[0].succ - c.succ;
  Multiset l = p[1].ante - c.ante;
  if (r != l) return std::nullopt;
  return r.items().front();
}

Rule<Sequent> make_rule(GrzRule r) {
  return {rule_id(r),
          [r](const std::vector<Sequent>& premises, const Sequent& conclusion) {
            return matches(r, premises, conclusion);
          },
          [r](const std::vector<Sequent>&, const Sequent&) { return progress(r); }};
}

}  // namespace

std::optional<Formula> principal(GrzRule r, const std::vector<Sequent>& p, const Sequent& c) {
  auto arity = [&](std::size_t k) { return p.size() == k; };
  switch (r) {
    case GrzRule::Ax:
      return arity(0) ? match_ax(c) : std::nullopt;
    case GrzRule::BotL:
      if (arity(0) && c.ante.contains(Formula::bot())) return Formula::bot();
      return std::nullopt;
    case GrzRule::ImpL:
      return arity(2) ? match_impl(p, c) : std::nullopt;
    case GrzRule::ImpR:
      return arity(1) ? match_impr(p, c) : std::nullopt;
    case GrzRule::Refl:
      return arity(1) ? match_refl(p, c) : std::nullopt;
    case GrzRule::Box:
      return arity(2) ? match_box(p, c) : std::nullopt;
    case GrzRule::Cut:
      return arity(2) ? match_cut(p, c) : std::nullopt;
  }
  return std::nullopt;
}

Sequent weakening_part(const std::vector<Sequent>& premises, const Sequent& conclusion) {
  const Sequent& right = premises.at(1);
  Formula f = Formula::box(right.succ.items().front());
  return Sequent{conclusion.ante - right.ante, conclusion.succ}.without_right(f);
}

std::optional<GrzRule> initial_rule(const Sequent& s) {
  if (match_ax(s)) return GrzRule::Ax;
  if (s.ante.contains(Formula::bot())) return GrzRule::BotL;
  return std::nullopt;
}

const Calculus<Sequent>& grz_calculus() {
  static const Calculus<Sequent> calc("grz", {make_rule(GrzRule::Ax), make_rule(GrzRule::BotL),
                                               make_rule(GrzRule::ImpL), make_rule(GrzRule::ImpR),
                                               make_rule(GrzRule::Refl), make_rule(GrzRule::Box)});
  return calc;
}

const Calculus<Sequent>& grz_cut_calculus() {
  static const Calculus<Sequent> calc("grz+cut", {make_rule(GrzRule::Ax), make_rule(GrzRule::BotL),
                                                   make_rule(GrzRule::ImpL), make_rule(GrzRule::ImpR),
                                                   make_rule(GrzRule::Refl), make_rule(GrzRule::Box),
                                                   make_rule(GrzRule::Cut)});
  return calc;
}

const Calculus<Sequent>* calculus_named(std::string_view name) {
  if (name == "grz") return &grz_calculus();
  if (name == "grz+cut") return &grz_cut_calculus();
  return nullptr;
}

}  // namespace cotrans::grz
