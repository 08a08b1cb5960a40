#pragma once

// Ground normal logic programs: atoms, literals, rules and their
// dependency structure. All types are immutable values once built.

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aspnf {

/// Prefix of atoms introduced by transformations. Never valid in user input.
inline constexpr std::string_view kReservedPrefix = "__";

/// A propositional atom, identified by its exact name.
///
/// Names may contain letters, digits, `_`, and the `(`, `)`, `,` characters
/// used by flattened predicate-style names such as `color(0,red)`.
class Atom {
 public:
  /// Throws InvalidAtomError on an empty name or a forbidden character.
  explicit Atom(std::string name);

  const std::string& name() const noexcept { return name_; }
  bool is_reserved() const noexcept { return name_.starts_with(kReservedPrefix); }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

using AtomSet = std::set<Atom>;

enum class Polarity { positive, negative };

struct Literal {
  Atom atom;
  Polarity polarity = Polarity::positive;

  static Literal pos(Atom a) { return {std::move(a), Polarity::positive}; }
  static Literal neg(Atom a) { return {std::move(a), Polarity::negative}; }

  bool positive() const noexcept { return polarity == Polarity::positive; }
  bool negative() const noexcept { return polarity == Polarity::negative; }

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    return a.polarity <=> b.polarity;
  }
};

/// `head :- body`. Duplicate body literals are dropped on construction, the
/// first occurrence keeping its position.
///
/// Equality and ordering treat the body as a set, so two rules differing
/// only in literal order compare equal.
class Rule {
 public:
  Rule(Atom head, std::vector<Literal> body = {});

  const Atom& head() const noexcept { return head_; }
  std::span<const Literal> body() const noexcept { return body_; }

  bool is_fact() const noexcept { return body_.empty(); }
  /// Non-empty body of negative literals only.
  bool is_purely_negative() const noexcept;
  bool contains(const Literal& l) const;
  /// True if some body literal (of either polarity) is on `a`.
  bool mentions(const Atom& a) const;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head_ == b.head_ && a.sorted_ == b.sorted_;
  }
  friend std::strong_ordering operator<=>(const Rule& a, const Rule& b);

 private:
  Atom head_;
  std::vector<Literal> body_;
  std::vector<Literal> sorted_;
};

/// An ordered, duplicate-free list of rules plus its atom universe.
///
/// Rule order is kept for printing only; equality compares rule sets.
class Program {
 public:
  Program() = default;
  /// Normalizes (drops repeated rules) without checking reserved atoms.
  /// Transformations use this; user input goes through build_program.
  explicit Program(std::vector<Rule> rules);

  std::span<const Rule> rules() const noexcept { return rules_; }
  const AtomSet& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  bool contains(const Rule& r) const { return index_.contains(r); }

  friend bool operator==(const Program& a, const Program& b) {
    return a.index_ == b.index_;
  }

 private:
  std::vector<Rule> rules_;
  std::set<Rule> index_;
  AtomSet atoms_;
};

/// Builds a program from user rules; throws ReservedAtomError if any atom
/// carries the reserved prefix.
Program build_program(std::vector<Rule> rules);

struct Edge {
  Atom from;
  Atom to;
  Polarity polarity = Polarity::positive;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.from <=> b.from; c != 0) return c;
    if (auto c = a.to <=> b.to; c != 0) return c;
    return a.polarity <=> b.polarity;
  }
};

/// Head-to-body dependencies: a -> b with polarity p iff some rule with head
/// a has a body literal on b of polarity p.
struct DependencyGraph {
  AtomSet vertices;
  std::set<Edge> edges;

  friend bool operator==(const DependencyGraph&, const DependencyGraph&) = default;
};

DependencyGraph build_dependency_graph(const Program& p);

/// Every rule has a non-empty body made of negative literals only.
bool is_purely_negative(const Program& p);

}  // namespace aspnf
