#include "aspnf/normalize.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "aspnf/error.hpp"
#include "aspnf/text_io.hpp"

namespace aspnf {

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::long_rule: return "long-rule";
    case StepKind::or_bridge_even: return "or-bridge-even";
    case StepKind::or_bridge_odd: return "or-bridge-odd";
    case StepKind::and_bridge_even: return "and-bridge-even";
    case StepKind::and_bridge_odd: return "and-bridge-odd";
  }
  return "?";
}

StepKind step_kind_from_string(std::string_view s) {
  for (auto k : {StepKind::long_rule, StepKind::or_bridge_even, StepKind::or_bridge_odd,
                 StepKind::and_bridge_even, StepKind::and_bridge_odd}) {
    if (to_string(k) == s) return k;
  }
  throw PreconditionError("unknown step kind '" + std::string(s) + "'");
}

std::string Reconstruction::to_string() const {
  return atom.name() + " := " + (negated ? "not " : "") + source.name();
}

namespace {

constexpr std::string_view kRerouteFlag = "reroutes-cycle";
constexpr std::string_view kGuardFlag = "guarded";

// Names for the atoms that replace one long rule. Chain atoms are
// __h<k>_1 .. __h<k>_<2j+1>; guard atoms are __g<k>_i, __n<k>_i and __k<k>.
struct LongRuleNames {
  std::vector<Atom> chain;
  std::vector<Atom> conj;
  std::vector<Atom> negs;
  std::optional<Atom> falsum;
};

LongRuleNames allocate_names(std::size_t& counter, std::size_t j, bool guard,
                             const AtomSet& taken) {
  while (true) {
    const std::string k = std::to_string(++counter);
    LongRuleNames n;
    for (std::size_t i = 1; i <= 2 * j + 1; ++i) n.chain.emplace_back("__h" + k + "_" + std::to_string(i));
    if (guard) {
      for (std::size_t i = 1; i <= j; ++i) {
        n.conj.emplace_back("__g" + k + "_" + std::to_string(i));
        n.negs.emplace_back("__n" + k + "_" + std::to_string(i));
      }
      n.falsum.emplace("__k" + k);
    }
    auto clash = [&](const std::vector<Atom>& v) {
      return std::any_of(v.begin(), v.end(), [&](const Atom& a) { return taken.contains(a); });
    };
    if (clash(n.chain) || clash(n.conj) || clash(n.negs) || (n.falsum && taken.contains(*n.falsum))) {
      continue;
    }
    return n;
  }
}

bool has_self_loop(const Program& p, const Atom& h) {
  return p.contains(Rule(h, {Literal::neg(h)}));
}

void require_kernel(const Program& p) {
  const auto report = check_kernel(p);
  if (!report.is_kernel) {
    const auto& v = report.violations.front();
    throw PreconditionError("input is not a kernel program: " + std::string(to_string(v.condition)) +
                            " violated by " + describe(v.witness));
  }
}

const Bridge* find_detected(const std::vector<Bridge>& bridges, const Bridge& b) {
  for (const auto& candidate : bridges) {
    if (candidate.kind == b.kind && candidate.anchor_rule == b.anchor_rule &&
        candidate.chain == b.chain && candidate.target_atom == b.target_atom) {
      return &candidate;
    }
  }
  return nullptr;
}

// Rewrites the anchor and drops the chain; `b` must be a detected bridge.
Transformed apply_bridge(const Program& p, const Bridge& b) {
  const Literal old_literal = Literal::neg(b.chain_atoms.front());
  const Literal new_literal =
      b.is_even() ? Literal::neg(b.target_atom) : Literal::pos(b.target_atom);

  std::vector<Literal> body;
  for (const auto& l : b.anchor_rule.body()) body.push_back(l == old_literal ? new_literal : l);
  const Rule rewritten(b.anchor_rule.head(), std::move(body));

  std::vector<Rule> rules;
  for (const auto& r : p.rules()) {
    if (std::find(b.chain.begin(), b.chain.end(), r) != b.chain.end()) continue;
    rules.push_back(r == b.anchor_rule ? rewritten : r);
  }

  TransformStep step;
  const bool is_or = b.kind == BridgeKind::or_bridge;
  step.kind = is_or ? (b.is_even() ? StepKind::or_bridge_even : StepKind::or_bridge_odd)
                    : (b.is_even() ? StepKind::and_bridge_even : StepKind::and_bridge_odd);
  step.removed = b.chain;
  step.removed.push_back(b.anchor_rule);
  step.added.push_back(rewritten);
  for (std::size_t i = b.chain_atoms.size(); i-- > 0;) {
    const Atom& source = i + 1 < b.chain_atoms.size() ? b.chain_atoms[i + 1] : b.target_atom;
    step.dropped.push_back({b.chain_atoms[i], source, true});
  }

  Transformed out{Program(std::move(rules)), {}};
  out.trace.final_atoms = out.program.atoms();
  out.trace.steps.push_back(std::move(step));
  return out;
}

Transformed simplify_bridge(const Program& p, const Bridge& b, BridgeKind expected) {
  if (b.kind != expected) {
    throw PreconditionError("expected an " + std::string(to_string(expected)) + " bridge, got " +
                            std::string(to_string(b.kind)));
  }
  const auto detected = find_bridges(p);
  const Bridge* match = find_detected(detected, b);
  if (!match) throw PreconditionError("bridge not found in program");
  return apply_bridge(p, *match);
}

}  // namespace

Transformed long_rule_simplify(const Program& p, const LongRuleOptions& options) {
  require_kernel(p);
  const CycleAnalysis analysis(p);

  AtomSet taken = p.atoms();
  std::size_t counter = 0;
  std::vector<Rule> rules;
  Transformed out;

  for (const auto& r : p.rules()) {
    const std::size_t j = r.body().size();
    const bool cyclic = analysis.in_cycle(r);
    const bool long_aux = analysis.is_auxiliary(r) && j > 1;
    const bool long_cyclic = cyclic && j > 2;
    if (!long_aux && !long_cyclic) {
      rules.push_back(r);
      continue;
    }

    const Atom& h = r.head();
    const bool guard = options.guard_unforced_heads && !has_self_loop(p, h);
    const auto names = allocate_names(counter, j, guard, taken);

    TransformStep step;
    step.kind = StepKind::long_rule;
    step.removed.push_back(r);
    auto& added = step.added;
    const auto& c = names.chain;
    added.emplace_back(h, std::vector{Literal::neg(c[0])});
    for (std::size_t i = 1; i <= j; ++i) {
      const Literal& b = r.body()[i - 1];
      added.emplace_back(c[2 * i - 2], std::vector{Literal::neg(c[2 * i - 1])});
      added.emplace_back(c[2 * i - 1], std::vector{Literal::neg(c[2 * i]), Literal::neg(b.atom)});
    }
    added.emplace_back(c[2 * j], std::vector{Literal::neg(h)});
    step.fresh_atoms = c;

    if (guard) {
      // __g_i holds iff h and b1..bi are all false; __n_i is its negation.
      // __k :- not __k, not __n_j rules out h false with every bi false.
      for (std::size_t i = 1; i <= j; ++i) {
        const Atom& b = r.body()[i - 1].atom;
        if (i == 1) {
          added.emplace_back(names.conj[0], std::vector{Literal::neg(h), Literal::neg(b)});
        } else {
          added.emplace_back(names.conj[i - 1],
                             std::vector{Literal::neg(names.negs[i - 2]), Literal::neg(b)});
        }
        added.emplace_back(names.negs[i - 1], std::vector{Literal::neg(names.conj[i - 1])});
      }
      added.emplace_back(*names.falsum,
                         std::vector{Literal::neg(*names.falsum), Literal::neg(names.negs[j - 1])});
      step.fresh_atoms.insert(step.fresh_atoms.end(), names.conj.begin(), names.conj.end());
      step.fresh_atoms.insert(step.fresh_atoms.end(), names.negs.begin(), names.negs.end());
      step.fresh_atoms.push_back(*names.falsum);
      step.flags.emplace_back(kGuardFlag);
    }
    if (cyclic) step.flags.emplace_back(kRerouteFlag);

    taken.insert(step.fresh_atoms.begin(), step.fresh_atoms.end());
    rules.insert(rules.end(), added.begin(), added.end());
    out.trace.steps.push_back(std::move(step));
  }

  out.program = Program(std::move(rules));
  out.trace.final_atoms = out.program.atoms();
  return out;
}

Transformed simplify_or_bridge(const Program& p, const Bridge& b) {
  return simplify_bridge(p, b, BridgeKind::or_bridge);
}

Transformed simplify_and_bridge(const Program& p, const Bridge& b) {
  return simplify_bridge(p, b, BridgeKind::and_bridge);
}

Transformed three_kernelize(const Program& p, const NormalizeOptions& options) {
  Transformed out = long_rule_simplify(p, options.long_rules);
  // Each bridge step removes at least one rule.
  const std::size_t max_steps = out.program.size() + 1;
  for (std::size_t i = 0; i < max_steps; ++i) {
    const auto bridges = CycleAnalysis(out.program, options.cycles).bridges();
    if (bridges.empty()) break;
    auto next = apply_bridge(out.program, bridges.front());
    out.program = std::move(next.program);
    for (auto& s : next.trace.steps) out.trace.steps.push_back(std::move(s));
  }
  out.trace.final_atoms = out.program.atoms();
  return out;
}

std::string_view describe_3kernel_condition(int condition) {
  switch (condition) {
    case 1: return "WFS-irreducible";
    case 2: return "every atom is involved in some cycle";
    case 3: return "every rule is in a cycle or auxiliary";
    case 4: return "cycle rules have one or two body literals";
    case 5: return "AND-handle atoms are not involved in their own cycle";
    case 6: return "auxiliary rules have exactly one body literal";
    default: return "?";
  }
}

ThreeKernelReport check_3kernel(const Program& p, const CycleOptions& options) {
  ThreeKernelReport report;
  auto add = [&](int c, Witness w) { report.violations.push_back({c, std::move(w)}); };

  const auto wfs = well_founded(p);
  for (const auto& a : wfs.true_atoms) add(1, a);
  for (const auto& a : wfs.false_atoms) add(1, a);

  const CycleAnalysis analysis(p, options);
  for (const auto& a : p.atoms()) {
    if (!analysis.involved(a)) add(2, a);
  }
  for (const auto& r : p.rules()) {
    if (!analysis.in_cycle(r) && !analysis.is_auxiliary(r)) add(3, r);
  }
  for (const auto& r : p.rules()) {
    if (analysis.in_cycle(r) && (r.body().empty() || r.body().size() > 2)) add(4, r);
  }
  std::set<Rule> handle_clash;
  for (const auto& c : analysis.cycles()) {
    for (const auto& h : c.and_handles) {
      for (const auto& l : h.literals) {
        if (c.involves(l.atom)) handle_clash.insert(c.rules[h.position]);
      }
    }
  }
  for (const auto& r : p.rules()) {
    if (handle_clash.contains(r)) add(5, r);
  }
  for (const auto& r : p.rules()) {
    if (analysis.is_auxiliary(r) && r.body().size() != 1) add(6, r);
  }
  report.is_3kernel = report.violations.empty();
  return report;
}

Interpretation reconstruct(const Interpretation& s, const TransformTrace& t) {
  Interpretation out;
  for (const auto& a : s) {
    if (!a.is_reserved()) out.insert(a);
  }
  AtomSet known = t.final_atoms;
  known.insert(s.begin(), s.end());
  std::map<Atom, bool> value;
  auto lookup = [&](const Atom& a) {
    if (auto it = value.find(a); it != value.end()) return it->second;
    if (!known.contains(a)) {
      throw PreconditionError("reconstruction refers to unknown atom '" + a.name() + "'");
    }
    return s.contains(a);
  };
  for (auto step = t.steps.rbegin(); step != t.steps.rend(); ++step) {
    for (const auto& f : step->dropped) {
      const bool v = lookup(f.source) != f.negated;
      value[f.atom] = v;
      if (v && !f.atom.is_reserved()) out.insert(f.atom);
    }
  }
  return out;
}

}  // namespace aspnf
