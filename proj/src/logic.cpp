#include "ja/logic.hpp"

#include <algorithm>

#include "ja/errors.hpp"
#include "ja/parallel.hpp"

namespace ja {

int AtomUniverse::index_of(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
}

CompiledFormula::CompiledFormula(const Formula& f, const AtomUniverse& u) {
    // Post-order walk without recursion depth concerns at desk scale.
    struct Frame {
        const Formula* f;
        int stage;
    };
    std::vector<Frame> stack{{&f, 0}};
    while (!stack.empty()) {
        auto [node, stage] = stack.back();
        stack.pop_back();
        switch (node->kind()) {
        case Formula::Kind::Atom: {
            int idx = u.index_of(node->atom_name());
            if (idx < 0) throw input_error("unbound atom: " + node->atom_name());
            code_.push_back({Op::PushAtom, static_cast<std::uint8_t>(idx)});
            break;
        }
        case Formula::Kind::Constant:
            code_.push_back({node->constant_value() ? Op::PushTrue : Op::PushFalse});
            break;
        case Formula::Kind::Not:
            if (stage == 0) {
                stack.push_back({node, 1});
                stack.push_back({&node->child(), 0});
            } else {
                code_.push_back({Op::Not});
            }
            break;
        default:
            if (stage == 0) {
                stack.push_back({node, 1});
                stack.push_back({&node->right(), 0});
                stack.push_back({&node->left(), 0});
            } else {
                Op op = Op::And;
                switch (node->kind()) {
                case Formula::Kind::And: op = Op::And; break;
                case Formula::Kind::Or: op = Op::Or; break;
                case Formula::Kind::Implies: op = Op::Implies; break;
                case Formula::Kind::Iff: op = Op::Iff; break;
                case Formula::Kind::Xor: op = Op::Xor; break;
                default: throw error("corrupt formula node");
                }
                code_.push_back({op});
            }
            break;
        }
    }
}

bool CompiledFormula::eval(std::uint64_t mask) const {
    // Stack machine over bools; formulas are desk-sized so a fixed buffer is
    // plenty, with a guard for pathological nesting.
    bool stack[256];
    int sp = 0;
    for (const Instr& in : code_) {
        switch (in.op) {
        case Op::PushAtom:
            if (sp >= 256) throw error("formula nesting too deep");
            stack[sp++] = (mask >> in.atom) & 1u;
            break;
        case Op::PushTrue:
            if (sp >= 256) throw error("formula nesting too deep");
            stack[sp++] = true;
            break;
        case Op::PushFalse:
            if (sp >= 256) throw error("formula nesting too deep");
            stack[sp++] = false;
            break;
        case Op::Not: stack[sp - 1] = !stack[sp - 1]; break;
        case Op::And: --sp; stack[sp - 1] = stack[sp - 1] && stack[sp]; break;
        case Op::Or: --sp; stack[sp - 1] = stack[sp - 1] || stack[sp]; break;
        case Op::Implies: --sp; stack[sp - 1] = !stack[sp - 1] || stack[sp]; break;
        case Op::Iff: --sp; stack[sp - 1] = stack[sp - 1] == stack[sp]; break;
        case Op::Xor: --sp; stack[sp - 1] = stack[sp - 1] != stack[sp]; break;
        }
    }
    return sp == 1 && stack[0];
}

std::vector<CompiledFormula> compile_all(std::span<const Formula> fs, const AtomUniverse& u) {
    std::vector<CompiledFormula> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.emplace_back(f, u);
    return out;
}

namespace {

void check_universe(std::span<const Formula> formulas, const AtomUniverse& universe,
                    const Limits& limits) {
    if (static_cast<int>(universe.size()) > limits.max_atoms)
        throw cap_exceeded("atom universe of " + std::to_string(universe.size()) +
                           " exceeds cap of " + std::to_string(limits.max_atoms));
    for (const auto& name : atoms(formulas))
        if (universe.index_of(name) < 0)
            throw input_error("atom outside declared universe: " + name);
}

} // namespace

bool is_consistent_set(std::span<const Formula> formulas, const AtomUniverse& universe,
                       const Limits& limits) {
    check_universe(formulas, universe, limits);
    auto compiled = compile_all(formulas, universe);
    auto satisfies_all = [&](std::uint64_t mask) {
        for (const auto& c : compiled)
            if (!c.eval(mask)) return false;
        return true;
    };
    return par::any_of(universe.valuation_count(), satisfies_all);
}

bool is_consistent_set(std::span<const Formula> formulas, const Limits& limits) {
    AtomUniverse u(atoms(formulas));
    return is_consistent_set(formulas, u, limits);
}

bool entails(std::span<const Formula> premises, const Formula& conclusion,
             const AtomUniverse& universe, const Limits& limits) {
    std::vector<Formula> augmented(premises.begin(), premises.end());
    augmented.push_back(Formula::negation(conclusion));
    return !is_consistent_set(augmented, universe, limits);
}

std::uint64_t count_models(std::span<const Formula> formulas, const AtomUniverse& universe,
                           const Limits& limits) {
    check_universe(formulas, universe, limits);
    auto compiled = compile_all(formulas, universe);
    auto satisfies_all = [&](std::uint64_t mask) {
        for (const auto& c : compiled)
            if (!c.eval(mask)) return false;
        return true;
    };
    return par::filter_indices(universe.valuation_count(), satisfies_all).size();
}

} // namespace ja
