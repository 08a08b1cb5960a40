#include "ground.hpp"

#include <algorithm>
#include <bit>

namespace aspnf::detail {

void Bits::fill() noexcept {
  std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
  if (n_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
}

bool Bits::subset_of(const Bits& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

std::size_t Bits::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Bits& Bits::operator|=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

GroundProgram::GroundProgram(const Program& p)
    : atoms_(p.atoms().begin(), p.atoms().end()), watches_(atoms_.size()) {
  auto index_of = [&](const Atom& a) {
    return static_cast<std::size_t>(std::lower_bound(atoms_.begin(), atoms_.end(), a) -
                                    atoms_.begin());
  };
  const bool small = atoms_.size() <= 64;
  rules_.reserve(p.size());
  for (const auto& r : p.rules()) {
    IndexedRule ir;
    ir.head = index_of(r.head());
    for (const auto& l : r.body()) {
      const std::size_t i = index_of(l.atom);
      if (l.positive()) {
        ir.pos.push_back(i);
        if (small) ir.pos_mask |= std::uint64_t{1} << i;
      } else {
        ir.neg.push_back(i);
        if (small) ir.neg_mask |= std::uint64_t{1} << i;
        has_negation_ = true;
      }
    }
    for (std::size_t i : ir.pos) watches_[i].push_back(rules_.size());
    rules_.push_back(std::move(ir));
  }
}

Bits GroundProgram::to_bits(const AtomSet& s) const {
  Bits b(atoms_.size());
  for (const auto& a : s) {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    if (it != atoms_.end() && *it == a) b.set(static_cast<std::size_t>(it - atoms_.begin()));
  }
  return b;
}

AtomSet GroundProgram::to_set(const Bits& b) const {
  AtomSet out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (b.test(i)) out.insert(out.end(), atoms_[i]);
  }
  return out;
}

Bits GroundProgram::gamma(const Bits& s) const {
  Bits model(atoms_.size());
  std::vector<std::size_t> missing(rules_.size(), 0);
  std::vector<std::size_t> queue;
  auto derive = [&](std::size_t atom) {
    if (!model.test(atom)) {
      model.set(atom);
      queue.push_back(atom);
    }
  };
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& rule = rules_[r];
    const bool blocked =
        std::any_of(rule.neg.begin(), rule.neg.end(), [&](std::size_t i) { return s.test(i); });
    if (blocked) {
      // Never fires; a count above any reachable value keeps it dormant.
      missing[r] = rule.pos.size() + 1;
      continue;
    }
    missing[r] = rule.pos.size();
    if (missing[r] == 0) derive(rule.head);
  }
  while (!queue.empty()) {
    const std::size_t a = queue.back();
    queue.pop_back();
    for (std::size_t r : watches_[a]) {
      if (--missing[r] == 0) derive(rules_[r].head);
    }
  }
  return model;
}

std::uint64_t GroundProgram::gamma_mask(std::uint64_t s) const {
  std::uint64_t model = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : rules_) {
      const std::uint64_t head = std::uint64_t{1} << rule.head;
      if ((model & head) || (rule.neg_mask & s) || (rule.pos_mask & ~model)) continue;
      model |= head;
      changed = true;
    }
  }
  return model;
}

}  // namespace aspnf::detail
