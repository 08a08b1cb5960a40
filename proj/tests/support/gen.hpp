#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "aspnf/kernel.hpp"
#include "aspnf/program.hpp"

namespace gen {

using Rng = std::mt19937_64;

std::size_t below(Rng& rng, std::size_t n);

std::vector<aspnf::Atom> atom_pool(std::size_t n, const char* prefix = "x");

/// Arbitrary normal program over x1..x<n_atoms>: facts, positive and negative
/// literals. `pos_percent` of body literals are positive.
aspnf::Program program(Rng& rng, std::size_t n_atoms, std::size_t n_rules, std::size_t max_body,
                       unsigned pos_percent = 30);

aspnf::AtomSet subset(Rng& rng, const aspnf::AtomSet& of);

/// Every anti-chain over x1..x<n>, including {} and {{}}.
std::vector<aspnf::AntiChain> all_antichains(std::size_t n);

struct KernelCase {
  std::uint64_t seed;
  aspnf::Program program;
};

/// The fixed random kernel corpus: `count` programs with 2..8 atoms and at
/// most 10 rules of body length at most 3.
std::vector<KernelCase> kernel_corpus(std::size_t count);

}  // namespace gen
