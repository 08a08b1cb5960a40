#pragma once

// Index-based view of a Program used by the semantic operators. Atoms are
// numbered in name order, so bit i corresponds to the i-th atom of
// Program::atoms().

#include <cstdint>
#include <vector>

#include "aspnf/program.hpp"

namespace aspnf::detail {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) noexcept { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  void fill() noexcept;

  bool subset_of(const Bits& o) const noexcept;
  std::size_t count() const noexcept;
  Bits& operator|=(const Bits& o) noexcept;
  Bits& operator&=(const Bits& o) noexcept;

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class GroundProgram {
 public:
  explicit GroundProgram(const Program& p);

  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  bool has_negation() const noexcept { return has_negation_; }

  Bits to_bits(const AtomSet& s) const;
  AtomSet to_set(const Bits& b) const;

  /// Least model of the reduct of the program w.r.t. `s`.
  Bits gamma(const Bits& s) const;

  /// Same operator on a 64-bit mask; requires atom_count() <= 64.
  std::uint64_t gamma_mask(std::uint64_t s) const;

 private:
  struct IndexedRule {
    std::size_t head;
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    std::uint64_t pos_mask = 0;
    std::uint64_t neg_mask = 0;
  };

  std::vector<Atom> atoms_;
  std::vector<IndexedRule> rules_;
  // For each atom, the rules having it as a positive body literal.
  std::vector<std::vector<std::size_t>> watches_;
  bool has_negation_ = false;
};

}  // namespace aspnf::detail
