#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ja/formula.hpp"
#include "ja/limits.hpp"

namespace ja {

// A sorted atom universe; valuations are bitmasks indexed by position.
class AtomUniverse {
public:
    AtomUniverse() = default;
    explicit AtomUniverse(const std::set<std::string>& names)
        : names_(names.begin(), names.end()) {}

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const; // -1 when absent
    std::uint64_t valuation_count() const { return std::uint64_t{1} << names_.size(); }

private:
    std::vector<std::string> names_; // sorted, unique
};

// Formula flattened to postfix over universe indices for tight eval loops.
class CompiledFormula {
public:
    CompiledFormula() = default;
    CompiledFormula(const Formula& f, const AtomUniverse& u); // throws input_error on unbound atom

    // mask bit i = truth value of universe atom i.
    bool eval(std::uint64_t mask) const;

private:
    enum class Op : std::uint8_t { PushAtom, PushTrue, PushFalse, Not, And, Or, Implies, Iff, Xor };
    struct Instr {
        Op op;
        std::uint8_t atom = 0;
    };
    std::vector<Instr> code_;
};

std::vector<CompiledFormula> compile_all(std::span<const Formula> fs, const AtomUniverse& u);

// Exhaustive-valuation satisfiability of a conjunction of formulas.
// Decides by scanning all 2^|universe| valuations; the universe must cover
// every atom in the set and stay within limits.max_atoms.
bool is_consistent_set(std::span<const Formula> formulas, const AtomUniverse& universe,
                       const Limits& limits);

// Convenience: universe taken from the formulas themselves.
bool is_consistent_set(std::span<const Formula> formulas, const Limits& limits);

// premises |= conclusion over the given universe; dual of consistency:
// entails(S, f) == !is_consistent_set(S + {!f}).
bool entails(std::span<const Formula> premises, const Formula& conclusion,
             const AtomUniverse& universe, const Limits& limits);

std::uint64_t count_models(std::span<const Formula> formulas, const AtomUniverse& universe,
                           const Limits& limits);

} // namespace ja
