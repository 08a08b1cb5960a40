#pragma once

// Reference implementations of the Gelfond-Lifschitz operator, answer-set
// checking and enumeration, and the well-founded model.

#include <cstddef>
#include <vector>

#include "aspnf/program.hpp"

namespace aspnf {

using Interpretation = AtomSet;

/// Answer sets in canonical order: increasing cardinality, then
/// lexicographic over the sorted atom names.
using AnswerSetCollection = std::vector<Interpretation>;

/// Drops rules blocked by `s`, then strips the remaining negative literals.
Program gl_reduct(const Program& p, const Interpretation& s);

/// Least Herbrand model of a negation-free program. Throws
/// PreconditionError if `p` has a negative literal.
Interpretation least_model(const Program& p);

/// Γ(p, s) = least_model(gl_reduct(p, s)). Antimonotone in `s`.
Interpretation gamma(const Program& p, const Interpretation& s);

bool is_answer_set(const Program& p, const Interpretation& s);

enum class EnumerationStrategy {
  /// Every subset of the atoms left undefined by the well-founded model,
  /// with WFS-true atoms forced in. At most 62 free atoms.
  exhaustive,
  /// Branch on undefined atoms, tightening the bounds [T, U] after each
  /// decision by T := T ∪ Γ(U), U := U ∩ Γ(T) until stable.
  propagating,
};

struct EnumerationOptions {
  /// Refuse programs with more atoms than this.
  std::size_t max_atoms = 24;
  EnumerationStrategy strategy = EnumerationStrategy::propagating;
};

/// All S ⊆ atoms(p) with Γ(p, S) = S, in canonical order. Throws
/// CapExceededError when |atoms(p)| > options.max_atoms.
AnswerSetCollection enumerate_answer_sets(const Program& p,
                                          const EnumerationOptions& options = {});

struct WfsResult {
  AtomSet true_atoms;
  AtomSet false_atoms;
  AtomSet undefined_atoms;

  friend bool operator==(const WfsResult&, const WfsResult&) = default;
};

/// Alternating fixpoint: K' = Γ(p, U), U' = Γ(p, K') from U = atoms(p).
WfsResult well_founded(const Program& p);

/// Every atom is undefined in the well-founded model.
bool is_wfs_irreducible(const Program& p);

/// Sorts and deduplicates into canonical order.
void canonicalize(AnswerSetCollection& sets);

/// No member is a subset of another.
bool is_antichain(const AnswerSetCollection& sets);

}  // namespace aspnf
