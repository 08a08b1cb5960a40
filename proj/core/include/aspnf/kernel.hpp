#pragma once

// Kernel normal form: checking, construction from anti-chains, and
// equivalence modulo projection.

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aspnf/program.hpp"
#include "aspnf/semantics.hpp"

namespace aspnf {

/// The offending rule or atom behind a normal-form violation.
using Witness = std::variant<Rule, Atom>;

std::string describe(const Witness& w);

enum class KernelCondition {
  wfs_irreducible,
  negative_bodies_only,
  every_atom_in_some_body,
};

std::string_view to_string(KernelCondition c);

struct KernelViolation {
  KernelCondition condition;
  Witness witness;
};

struct KernelReport {
  bool is_kernel = true;
  std::vector<KernelViolation> violations;
};

/// Evaluates all three kernel conditions and reports every violation:
/// one per WFS-decided atom, per rule with a fact or positive body, and per
/// atom that occurs in no body.
KernelReport check_kernel(const Program& p);

/// A collection of subsets of `universe`, none contained in another.
///
/// Components are deduplicated and kept in canonical order. Throws
/// PreconditionError if a component leaves the universe or the anti-chain
/// property fails, and ReservedAtomError on reserved universe atoms.
class AntiChain {
 public:
  AntiChain(AtomSet universe, std::vector<AtomSet> components);

  const AtomSet& universe() const noexcept { return universe_; }
  const std::vector<AtomSet>& components() const noexcept { return components_; }

 private:
  AtomSet universe_;
  std::vector<AtomSet> components_;
};

/// Fresh atoms used by antichain_to_kernel.
Atom bar_atom(const Atom& a);
inline const Atom kWitnessAtom{"__m"};
inline const Atom kFalsumAtom{"__bot"};

/// Builds a kernel program whose answer sets, projected on the universe,
/// are exactly the components:
///   h :- not __bar_h.   __bar_h :- not h.          (each h in universe)
///   __m :- not __bar_a1, ..., not n1, ...          (each component)
///   __bot :- not __bot, not __m.
Program antichain_to_kernel(const AntiChain& a);

/// Intersects each set with `h`; result is deduplicated, canonical order.
std::vector<AtomSet> project(std::span<const AtomSet> sets, const AtomSet& h);

bool equivalent_mod_projection(const Program& p1, const Program& p2, const AtomSet& h,
                               const EnumerationOptions& options = {});

struct Kernelization {
  Program program;
  AtomSet universe;
};

/// Kernel equivalent of `p` built from its enumerated answer sets.
/// Exponential by construction.
Kernelization kernelize(const Program& p, const EnumerationOptions& options = {});

/// Anti-chain text format:
///
///   #universe a1, a2, a3.
///   a1, a2
///   a3
///   {}
///
/// One component per line after the header; `{}` denotes the empty
/// component, `%` starts a comment, blank lines are ignored.
AntiChain parse_antichain(std::string_view text);
std::string render_antichain(const AntiChain& a);

}  // namespace aspnf
