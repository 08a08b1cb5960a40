#include "aspnf/cycles.hpp"

#include <algorithm>
#include <deque>

#include "aspnf/error.hpp"

namespace aspnf {

bool Cycle::involves(const Atom& a) const {
  return std::find(atoms.begin(), atoms.end(), a) != atoms.end();
}

bool Cycle::contains(const Rule& r) const {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

std::string_view to_string(BridgeKind k) {
  return k == BridgeKind::or_bridge ? "OR" : "AND";
}

std::string_view to_string(RuleTag t) {
  switch (t) {
    case RuleTag::in_cycle: return "in-cycle";
    case RuleTag::auxiliary: return "auxiliary";
    case RuleTag::bridge_step: return "bridge-step";
    case RuleTag::unclassified: return "unclassified";
  }
  return "?";
}

namespace {

class CycleFinder {
 public:
  CycleFinder(const Program& p, std::size_t cap)
      : program_(p), atoms_(p.atoms().begin(), p.atoms().end()), cap_(cap) {
    const std::size_t n = atoms_.size();
    succ_.resize(n);
    pred_.resize(n);
    for (std::size_t r = 0; r < p.size(); ++r) {
      const Rule& rule = p.rules()[r];
      const std::size_t from = index_of(rule.head());
      for (const auto& l : rule.body()) {
        if (!l.negative()) continue;
        // The step literal is `not to`; no other literal may mention the head.
        bool valid = true;
        for (const auto& other : rule.body()) {
          if (other != l && other.atom == rule.head()) valid = false;
        }
        if (!valid) continue;
        const std::size_t to = index_of(l.atom);
        auto& w = witnesses_[{from, to}];
        if (w.empty()) {
          succ_[from].push_back(to);
          pred_[to].push_back(from);
        }
        w.push_back(r);
      }
    }
    for (auto& s : succ_) std::sort(s.begin(), s.end());
  }

  std::vector<Cycle> run() {
    const std::size_t n = atoms_.size();
    on_path_.assign(n, false);
    for (start_ = 0; start_ < n; ++start_) {
      mark_reaching();
      path_.assign(1, start_);
      on_path_[start_] = true;
      extend(start_);
      on_path_[start_] = false;
    }
    return std::move(found_);
  }

 private:
  std::size_t index_of(const Atom& a) const {
    return static_cast<std::size_t>(std::lower_bound(atoms_.begin(), atoms_.end(), a) -
                                    atoms_.begin());
  }

  // Vertices >= start_ that can reach start_ through vertices >= start_.
  void mark_reaching() {
    reaches_.assign(atoms_.size(), false);
    std::deque<std::size_t> todo{start_};
    reaches_[start_] = true;
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop_front();
      for (std::size_t u : pred_[v]) {
        if (u > start_ && !reaches_[u]) {
          reaches_[u] = true;
          todo.push_back(u);
        }
      }
    }
  }

  void extend(std::size_t v) {
    for (std::size_t w : succ_[v]) {
      if (w == start_) {
        emit();
      } else if (w > start_ && !on_path_[w] && reaches_[w]) {
        on_path_[w] = true;
        path_.push_back(w);
        extend(w);
        path_.pop_back();
        on_path_[w] = false;
      }
    }
  }

  // One cycle per combination of witnessing rules along the current path.
  void emit() {
    const std::size_t n = path_.size();
    std::vector<const std::vector<std::size_t>*> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
      choices[i] = &witnesses_.at({path_[i], path_[(i + 1) % n]});
    }
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      if (found_.size() >= cap_) {
        throw CycleCapError("more than " + std::to_string(cap_) + " cycles");
      }
      Cycle c;
      for (std::size_t i = 0; i < n; ++i) {
        const Rule& rule = program_.rules()[(*choices[i])[pick[i]]];
        const Literal step = Literal::neg(atoms_[path_[(i + 1) % n]]);
        c.atoms.push_back(atoms_[path_[i]]);
        c.rules.push_back(rule);
        AndHandle h{i, {}};
        for (const auto& l : rule.body()) {
          if (l != step) h.literals.push_back(l);
        }
        if (!h.literals.empty()) c.and_handles.push_back(std::move(h));
      }
      found_.push_back(std::move(c));

      std::size_t k = n;
      while (k > 0) {
        --k;
        if (++pick[k] < choices[k]->size()) break;
        pick[k] = 0;
        if (k == 0) return;
      }
    }
  }

  const Program& program_;
  std::vector<Atom> atoms_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> witnesses_;

  std::size_t start_ = 0;
  std::vector<bool> reaches_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::vector<Cycle> found_;
};

// Atoms reachable from `from` along positive dependency edges.
bool positively_reaches(const Program& p, const Atom& from, const Atom& to) {
  std::map<Atom, std::vector<Atom>> pos;
  for (const auto& r : p.rules()) {
    for (const auto& l : r.body()) {
      if (l.positive()) pos[r.head()].push_back(l.atom);
    }
  }
  AtomSet seen{from};
  std::vector<Atom> todo{from};
  while (!todo.empty()) {
    Atom a = todo.back();
    todo.pop_back();
    if (a == to) return true;
    if (auto it = pos.find(a); it != pos.end()) {
      for (const auto& b : it->second) {
        if (seen.insert(b).second) todo.push_back(b);
      }
    }
  }
  return false;
}

}  // namespace

CycleAnalysis::CycleAnalysis(Program p, const CycleOptions& options) : program_(std::move(p)) {
  cycles_ = CycleFinder(program_, options.max_cycles).run();
  for (const auto& c : cycles_) {
    in_cycle_.insert(c.rules.begin(), c.rules.end());
    involved_.insert(c.atoms.begin(), c.atoms.end());
  }
}

bool CycleAnalysis::is_auxiliary(const Rule& r) const {
  return involved(r.head()) && !in_cycle(r) && !r.is_fact() && !r.mentions(r.head());
}

std::vector<OrHandle> CycleAnalysis::or_handles(const Cycle& c) const {
  std::vector<OrHandle> out;
  for (const auto& r : program_.rules()) {
    if (c.involves(r.head()) && is_auxiliary(r)) {
      out.push_back({r.head(), r, {r.body().begin(), r.body().end()}});
    }
  }
  return out;
}

std::vector<Bridge> CycleAnalysis::bridges() const {
  std::map<Atom, std::vector<const Rule*>> definitions;
  std::map<Atom, std::size_t> body_occurrences;
  for (const auto& r : program_.rules()) {
    definitions[r.head()].push_back(&r);
    for (const auto& l : r.body()) ++body_occurrences[l.atom];
  }
  // The single rule `l :- not m` of a chain atom l, if l qualifies.
  auto chain_rule = [&](const Atom& a) -> const Rule* {
    if (involved(a)) return nullptr;
    auto d = definitions.find(a);
    if (d == definitions.end() || d->second.size() != 1) return nullptr;
    if (body_occurrences[a] != 1) return nullptr;
    const Rule* r = d->second.front();
    if (r->body().size() != 1 || !r->body()[0].negative() || r->body()[0].atom == a) {
      return nullptr;
    }
    return r;
  };

  std::vector<Bridge> out;
  for (const auto& anchor : program_.rules()) {
    const bool cyclic = in_cycle(anchor);
    if (!cyclic && !is_auxiliary(anchor)) continue;
    for (const auto& l : anchor.body()) {
      if (!l.negative()) continue;
      const Rule* step = chain_rule(l.atom);
      if (!step) continue;

      std::vector<Atom> chain_atoms{l.atom};
      std::vector<Rule> chain{*step};
      Atom next = step->body()[0].atom;
      while (const Rule* more = chain_rule(next)) {
        if (std::find(chain_atoms.begin(), chain_atoms.end(), next) != chain_atoms.end()) break;
        chain_atoms.push_back(next);
        chain.push_back(*more);
        next = more->body()[0].atom;
      }
      if (!involved(next)) continue;
      if (chain_atoms.size() % 2 == 1 && positively_reaches(program_, next, anchor.head())) {
        continue;
      }

      const auto owner = std::find_if(cycles_.begin(), cycles_.end(), [&](const Cycle& c) {
        return cyclic ? c.contains(anchor) : c.involves(anchor.head());
      });
      out.push_back(Bridge{cyclic ? BridgeKind::and_bridge : BridgeKind::or_bridge, *owner,
                           anchor.head(), anchor, std::move(chain_atoms), std::move(chain),
                           next});
    }
  }
  std::sort(out.begin(), out.end(), [](const Bridge& a, const Bridge& b) {
    if (a.anchor_atom != b.anchor_atom) return a.anchor_atom < b.anchor_atom;
    if (a.target_atom != b.target_atom) return a.target_atom < b.target_atom;
    return a.chain_atoms < b.chain_atoms;
  });
  return out;
}

RuleClassification CycleAnalysis::classify() const {
  RuleClassification out;
  for (const auto& r : program_.rules()) {
    auto& tags = out[r];
    if (in_cycle(r)) tags.insert(RuleTag::in_cycle);
    if (is_auxiliary(r)) tags.insert(RuleTag::auxiliary);
  }
  for (const auto& b : bridges()) {
    for (const auto& r : b.chain) out[r].insert(RuleTag::bridge_step);
  }
  for (auto& [rule, tags] : out) {
    if (tags.empty()) tags.insert(RuleTag::unclassified);
  }
  return out;
}

std::vector<Cycle> find_cycles(const Program& p, const CycleOptions& options) {
  return CycleFinder(p, options.max_cycles).run();
}

std::vector<OrHandle> find_or_handles(const Program& p, const Cycle& c) {
  return CycleAnalysis(p).or_handles(c);
}

RuleClassification classify_rules(const Program& p) { return CycleAnalysis(p).classify(); }

std::vector<Bridge> find_bridges(const Program& p) { return CycleAnalysis(p).bridges(); }

}  // namespace aspnf
