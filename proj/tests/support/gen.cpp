#include "gen.hpp"

#include <algorithm>

#include "aspnf/error.hpp"
#include "aspnf/generators.hpp"

namespace gen {

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::vector<aspnf::Atom> atom_pool(std::size_t n, const char* prefix) {
  std::vector<aspnf::Atom> out;
  for (std::size_t i = 1; i <= n; ++i) out.emplace_back(prefix + std::to_string(i));
  return out;
}

aspnf::Program program(Rng& rng, std::size_t n_atoms, std::size_t n_rules, std::size_t max_body,
                       unsigned pos_percent) {
  const auto pool = atom_pool(n_atoms);
  std::vector<aspnf::Rule> rules;
  for (std::size_t r = 0; r < n_rules; ++r) {
    std::vector<aspnf::Literal> body;
    const std::size_t len = below(rng, max_body + 1);
    for (std::size_t k = 0; k < len; ++k) {
      const auto& a = pool[below(rng, n_atoms)];
      body.push_back(below(rng, 100) < pos_percent ? aspnf::Literal::pos(a) : aspnf::Literal::neg(a));
    }
    rules.emplace_back(pool[below(rng, n_atoms)], std::move(body));
  }
  return aspnf::Program(std::move(rules));
}

aspnf::AtomSet subset(Rng& rng, const aspnf::AtomSet& of) {
  aspnf::AtomSet out;
  for (const auto& a : of) {
    if (rng() & 1) out.insert(a);
  }
  return out;
}

std::vector<aspnf::AntiChain> all_antichains(std::size_t n) {
  const auto pool = atom_pool(n);
  const aspnf::AtomSet universe(pool.begin(), pool.end());
  const std::size_t n_sets = std::size_t{1} << n;
  std::vector<aspnf::AntiChain> out;
  std::vector<std::size_t> chosen;

  auto emit = [&] {
    std::vector<aspnf::AtomSet> comps;
    for (std::size_t mask : chosen) {
      aspnf::AtomSet c;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) c.insert(pool[i]);
      }
      comps.push_back(std::move(c));
    }
    out.emplace_back(universe, std::move(comps));
  };
  // Masks are added in increasing order; a set and a mask are comparable
  // when one is contained in the other.
  auto extend = [&](auto& self, std::size_t from) -> void {
    emit();
    for (std::size_t m = from; m < n_sets; ++m) {
      const bool free = std::none_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return (c & m) == c || (c & m) == m;
      });
      if (!free) continue;
      chosen.push_back(m);
      self(self, m + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<KernelCase> kernel_corpus(std::size_t count) {
  std::vector<KernelCase> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    Rng rng(seed * 7919);
    const std::size_t n_atoms = 2 + below(rng, 7);
    const std::size_t n_rules = n_atoms + below(rng, 11 - n_atoms);
    try {
      out.push_back({seed, aspnf::random_kernel_program(n_atoms, n_rules, 3, seed)});
    } catch (const aspnf::GenerationError&) {
    }
  }
  return out;
}

}  // namespace gen
