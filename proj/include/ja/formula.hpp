#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ja {

// Propositional formulas. Immutable, value-semantic handles over a shared
// syntax tree; safe to copy across threads.
//
// Grammar (text form, bit-exact):
//   atom  ::= [a-z][a-zA-Z0-9_]*
//   unary "!" or "~" for negation; binary "&", "|", "xor", "->", "<->";
//   constants "true", "false"; parentheses for grouping.
// Precedence: ! > & > xor > | > -> > <->, with "->" right-associative.
class Formula {
public:
    enum class Kind { Atom, Constant, Not, And, Or, Implies, Iff, Xor };

    Formula() = default; // empty handle; only assignable

    static Formula atom(std::string name);
    static Formula constant(bool value);
    static Formula negation(Formula child);
    static Formula binary(Kind op, Formula left, Formula right);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const;
    const std::string& atom_name() const;  // Kind::Atom only
    bool constant_value() const;           // Kind::Constant only
    const Formula& child() const;          // Kind::Not only
    const Formula& left() const;           // binary kinds only
    const Formula& right() const;          // binary kinds only

    // Structural equality; used for set membership of formulas.
    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Total valuation over a declared atom universe.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::map<std::string, bool> assignment);

    bool lookup(const std::string& atom) const; // throws input_error when unbound
    const std::map<std::string, bool>& assignment() const { return assignment_; }

private:
    std::map<std::string, bool> assignment_;
};

Formula parse_formula(std::string_view src); // throws parse_error

// Round-trips through parse_formula up to redundant parentheses.
std::string to_string(const Formula& f);

void collect_atoms(const Formula& f, std::set<std::string>& out);
std::set<std::string> atoms(std::span<const Formula> formulas);

// Classical semantics; xor is true iff exactly one operand is true.
bool evaluate(const Formula& f, const Valuation& v);

bool is_negation_of(const Formula& a, const Formula& b); // a == !b or b == !a

std::ostream& operator<<(std::ostream& os, const Formula& f);

} // namespace ja
