#include "aspnf/program.hpp"

#include <algorithm>

#include "aspnf/error.hpp"

namespace aspnf {

namespace {

bool valid_atom_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '(' || c == ')' || c == ',';
}

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw InvalidAtomError("empty atom name");
  for (char c : name_) {
    if (!valid_atom_char(c)) {
      throw InvalidAtomError("invalid character in atom name '" + name_ + "'");
    }
  }
}

Rule::Rule(Atom head, std::vector<Literal> body) : head_(std::move(head)) {
  std::set<Literal> seen;
  body_.reserve(body.size());
  for (auto& l : body) {
    if (seen.insert(l).second) body_.push_back(std::move(l));
  }
  sorted_.assign(seen.begin(), seen.end());
}

bool Rule::is_purely_negative() const noexcept {
  return !body_.empty() &&
         std::all_of(body_.begin(), body_.end(),
                     [](const Literal& l) { return l.negative(); });
}

bool Rule::contains(const Literal& l) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), l);
}

bool Rule::mentions(const Atom& a) const {
  return contains(Literal::pos(a)) || contains(Literal::neg(a));
}

std::strong_ordering operator<=>(const Rule& a, const Rule& b) {
  if (auto c = a.head_ <=> b.head_; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.sorted_.begin(), a.sorted_.end(), b.sorted_.begin(), b.sorted_.end());
}

Program::Program(std::vector<Rule> rules) {
  rules_.reserve(rules.size());
  for (auto& r : rules) {
    if (!index_.insert(r).second) continue;
    atoms_.insert(r.head());
    for (const auto& l : r.body()) atoms_.insert(l.atom);
    rules_.push_back(std::move(r));
  }
}

Program build_program(std::vector<Rule> rules) {
  for (const auto& r : rules) {
    if (r.head().is_reserved()) {
      throw ReservedAtomError("reserved atom '" + r.head().name() + "' in user rule");
    }
    for (const auto& l : r.body()) {
      if (l.atom.is_reserved()) {
        throw ReservedAtomError("reserved atom '" + l.atom.name() + "' in user rule");
      }
    }
  }
  return Program(std::move(rules));
}

DependencyGraph build_dependency_graph(const Program& p) {
  DependencyGraph g;
  g.vertices = p.atoms();
  for (const auto& r : p.rules()) {
    for (const auto& l : r.body()) g.edges.insert({r.head(), l.atom, l.polarity});
  }
  return g;
}

bool is_purely_negative(const Program& p) {
  return std::all_of(p.rules().begin(), p.rules().end(),
                     [](const Rule& r) { return r.is_purely_negative(); });
}

}  // namespace aspnf
