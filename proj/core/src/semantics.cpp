#include "aspnf/semantics.hpp"

#include <algorithm>

#include "aspnf/error.hpp"
#include "ground.hpp"

namespace aspnf {

using detail::Bits;
using detail::GroundProgram;

Program gl_reduct(const Program& p, const Interpretation& s) {
  std::vector<Rule> kept;
  for (const auto& r : p.rules()) {
    std::vector<Literal> body;
    bool blocked = false;
    for (const auto& l : r.body()) {
      if (l.positive()) {
        body.push_back(l);
      } else if (s.contains(l.atom)) {
        blocked = true;
        break;
      }
    }
    if (!blocked) kept.emplace_back(r.head(), std::move(body));
  }
  return Program(std::move(kept));
}

Interpretation least_model(const Program& p) {
  const GroundProgram g(p);
  if (g.has_negation()) throw PreconditionError("least_model: program contains negation");
  // Γ ignores its argument on a negation-free program.
  return g.to_set(g.gamma(Bits(g.atom_count())));
}

Interpretation gamma(const Program& p, const Interpretation& s) {
  const GroundProgram g(p);
  return g.to_set(g.gamma(g.to_bits(s)));
}

bool is_answer_set(const Program& p, const Interpretation& s) {
  if (!std::includes(p.atoms().begin(), p.atoms().end(), s.begin(), s.end())) return false;
  return gamma(p, s) == s;
}

namespace {

struct Bounds {
  Bits lower;  // atoms true in every answer set within the bounds
  Bits upper;  // atoms possibly true
};

// Tightens [lower, upper] using antimonotonicity of Γ: any answer set S with
// lower ⊆ S ⊆ upper satisfies Γ(upper) ⊆ S ⊆ Γ(lower). Returns false when
// the bounds become contradictory.
bool propagate(const GroundProgram& g, Bounds& b) {
  while (true) {
    Bits lower = b.lower;
    lower |= g.gamma(b.upper);
    Bits upper = b.upper;
    upper &= g.gamma(lower);
    if (!lower.subset_of(upper)) return false;
    if (lower == b.lower && upper == b.upper) return true;
    b.lower = std::move(lower);
    b.upper = std::move(upper);
  }
}

Bounds wfs_bounds(const GroundProgram& g) {
  Bounds b{Bits(g.atom_count()), Bits(g.atom_count())};
  b.upper.fill();
  // From (∅, atoms) propagation is exactly the alternating fixpoint and
  // cannot fail: Γ(U) ⊆ Γ(K) whenever K ⊆ U.
  propagate(g, b);
  return b;
}

void search(const GroundProgram& g, const std::vector<std::size_t>& order, Bounds b,
            AnswerSetCollection& out) {
  if (!propagate(g, b)) return;
  for (std::size_t i : order) {
    if (b.upper.test(i) && !b.lower.test(i)) {
      Bounds with = b;
      with.lower.set(i);
      search(g, order, std::move(with), out);
      b.upper.reset(i);
      search(g, order, std::move(b), out);
      return;
    }
  }
  if (g.gamma(b.lower) == b.lower) out.push_back(g.to_set(b.lower));
}

AnswerSetCollection enumerate_propagating(const GroundProgram& g) {
  // Decide user atoms before generated ones: generated atoms are usually
  // functions of the user atoms and fall out of propagation.
  std::vector<std::size_t> order;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < g.atom_count(); ++i) {
      if (g.atom(i).is_reserved() == (pass == 1)) order.push_back(i);
    }
  }
  AnswerSetCollection out;
  Bounds start{Bits(g.atom_count()), Bits(g.atom_count())};
  start.upper.fill();
  search(g, order, std::move(start), out);
  return out;
}

AnswerSetCollection enumerate_exhaustive(const GroundProgram& g) {
  const Bounds wfs = wfs_bounds(g);
  std::vector<std::size_t> free;
  std::uint64_t forced = 0;
  for (std::size_t i = 0; i < g.atom_count(); ++i) {
    if (wfs.lower.test(i)) forced |= std::uint64_t{1} << i;
    else if (wfs.upper.test(i)) free.push_back(i);
  }
  if (free.size() > 62) throw CapExceededError("exhaustive enumeration: more than 62 free atoms");

  AnswerSetCollection out;
  const std::uint64_t combos = std::uint64_t{1} << free.size();
  for (std::uint64_t pick = 0; pick < combos; ++pick) {
    std::uint64_t s = forced;
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((pick >> k) & 1U) s |= std::uint64_t{1} << free[k];
    }
    if (g.gamma_mask(s) != s) continue;
    Bits b(g.atom_count());
    for (std::size_t i = 0; i < g.atom_count(); ++i) {
      if ((s >> i) & 1U) b.set(i);
    }
    out.push_back(g.to_set(b));
  }
  return out;
}

}  // namespace

AnswerSetCollection enumerate_answer_sets(const Program& p, const EnumerationOptions& options) {
  if (p.atoms().size() > options.max_atoms) {
    throw CapExceededError("program has " + std::to_string(p.atoms().size()) +
                           " atoms, enumeration cap is " + std::to_string(options.max_atoms));
  }
  const GroundProgram g(p);
  AnswerSetCollection out;
  if (options.strategy == EnumerationStrategy::exhaustive) {
    if (g.atom_count() > 64) throw CapExceededError("exhaustive enumeration supports at most 64 atoms");
    out = enumerate_exhaustive(g);
  } else {
    out = enumerate_propagating(g);
  }
  canonicalize(out);
  return out;
}

WfsResult well_founded(const Program& p) {
  const GroundProgram g(p);
  Bits known(g.atom_count());
  Bits possible(g.atom_count());
  possible.fill();
  while (true) {
    Bits next_known = g.gamma(possible);
    Bits next_possible = g.gamma(next_known);
    if (next_known == known && next_possible == possible) break;
    known = std::move(next_known);
    possible = std::move(next_possible);
  }
  WfsResult r;
  for (std::size_t i = 0; i < g.atom_count(); ++i) {
    if (known.test(i)) r.true_atoms.insert(r.true_atoms.end(), g.atom(i));
    else if (!possible.test(i)) r.false_atoms.insert(r.false_atoms.end(), g.atom(i));
    else r.undefined_atoms.insert(r.undefined_atoms.end(), g.atom(i));
  }
  return r;
}

bool is_wfs_irreducible(const Program& p) {
  const auto r = well_founded(p);
  return r.true_atoms.empty() && r.false_atoms.empty();
}

void canonicalize(AnswerSetCollection& sets) {
  std::sort(sets.begin(), sets.end(), [](const Interpretation& a, const Interpretation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

bool is_antichain(const AnswerSetCollection& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace aspnf
