#include "ja/formula.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "ja/errors.hpp"

namespace ja {

struct Formula::Node {
    Kind kind;
    std::string name;   // Atom
    bool value = false; // Constant
    Formula lhs;        // Not: child; binary: left
    Formula rhs;        // binary: right
};

Formula Formula::atom(std::string name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->name = std::move(name);
    return Formula(std::move(node));
}

Formula Formula::constant(bool value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Constant;
    node->value = value;
    return Formula(std::move(node));
}

Formula Formula::negation(Formula child) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Not;
    node->lhs = std::move(child);
    return Formula(std::move(node));
}

Formula Formula::binary(Kind op, Formula left, Formula right) {
    auto node = std::make_shared<Node>();
    node->kind = op;
    node->lhs = std::move(left);
    node->rhs = std::move(right);
    return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->name; }
bool Formula::constant_value() const { return node_->value; }
const Formula& Formula::child() const { return node_->lhs; }
const Formula& Formula::left() const { return node_->lhs; }
const Formula& Formula::right() const { return node_->rhs; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::Atom: return a.atom_name() == b.atom_name();
    case Formula::Kind::Constant: return a.constant_value() == b.constant_value();
    case Formula::Kind::Not: return a.child() == b.child();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

bool is_negation_of(const Formula& a, const Formula& b) {
    if (a.kind() == Formula::Kind::Not && a.child() == b) return true;
    if (b.kind() == Formula::Kind::Not && b.child() == a) return true;
    return false;
}

Valuation::Valuation(std::map<std::string, bool> assignment)
    : assignment_(std::move(assignment)) {}

bool Valuation::lookup(const std::string& atom) const {
    auto it = assignment_.find(atom);
    if (it == assignment_.end()) throw input_error("unbound atom: " + atom);
    return it->second;
}

// ============================================================================
// Parser
// ============================================================================

namespace {

struct Token {
    enum class Type { Atom, True, False, Not, And, Or, Xor, Implies, Iff, LParen, RParen, End };
    Type type;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::size_t start = pos_;
        if (pos_ >= src_.size()) {
            current_ = {Token::Type::End, "", start};
            return;
        }
        char c = src_[pos_];
        if (c == '(') { ++pos_; current_ = {Token::Type::LParen, "(", start}; return; }
        if (c == ')') { ++pos_; current_ = {Token::Type::RParen, ")", start}; return; }
        if (c == '!' || c == '~') { ++pos_; current_ = {Token::Type::Not, std::string(1, c), start}; return; }
        if (c == '&') { ++pos_; current_ = {Token::Type::And, "&", start}; return; }
        if (c == '|') { ++pos_; current_ = {Token::Type::Or, "|", start}; return; }
        if (c == '-') {
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                pos_ += 2;
                current_ = {Token::Type::Implies, "->", start};
                return;
            }
            throw parse_error("unknown operator token '-'", start);
        }
        if (c == '<') {
            if (pos_ + 2 < src_.size() && src_[pos_ + 1] == '-' && src_[pos_ + 2] == '>') {
                pos_ += 3;
                current_ = {Token::Type::Iff, "<->", start};
                return;
            }
            throw parse_error("unknown operator token '<'", start);
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t end = pos_ + 1;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
                ++end;
            std::string word(src_.substr(pos_, end - pos_));
            pos_ = end;
            if (word == "true") { current_ = {Token::Type::True, word, start}; return; }
            if (word == "false") { current_ = {Token::Type::False, word, start}; return; }
            if (word == "xor") { current_ = {Token::Type::Xor, word, start}; return; }
            current_ = {Token::Type::Atom, word, start};
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token current_{Token::Type::End, "", 0};
};

// Recursive descent, one level per precedence tier.
class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    Formula parse() {
        Formula f = parse_iff();
        if (lex_.peek().type != Token::Type::End)
            throw parse_error("unexpected trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
        return f;
    }

private:
    Formula parse_iff() {
        Formula lhs = parse_implies();
        while (lex_.peek().type == Token::Type::Iff) {
            lex_.take();
            lhs = Formula::binary(Formula::Kind::Iff, lhs, parse_implies());
        }
        return lhs;
    }

    Formula parse_implies() { // right-associative
        Formula lhs = parse_or();
        if (lex_.peek().type == Token::Type::Implies) {
            lex_.take();
            return Formula::binary(Formula::Kind::Implies, lhs, parse_implies());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_xor();
        while (lex_.peek().type == Token::Type::Or) {
            lex_.take();
            lhs = Formula::binary(Formula::Kind::Or, lhs, parse_xor());
        }
        return lhs;
    }

    Formula parse_xor() {
        Formula lhs = parse_and();
        while (lex_.peek().type == Token::Type::Xor) {
            lex_.take();
            lhs = Formula::binary(Formula::Kind::Xor, lhs, parse_and());
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (lex_.peek().type == Token::Type::And) {
            lex_.take();
            lhs = Formula::binary(Formula::Kind::And, lhs, parse_unary());
        }
        return lhs;
    }

    Formula parse_unary() {
        const Token& t = lex_.peek();
        switch (t.type) {
        case Token::Type::Not:
            lex_.take();
            return Formula::negation(parse_unary());
        case Token::Type::LParen: {
            lex_.take();
            Formula inner = parse_iff();
            if (lex_.peek().type != Token::Type::RParen)
                throw parse_error("expected ')'", lex_.peek().pos);
            lex_.take();
            return inner;
        }
        case Token::Type::Atom: {
            Token a = lex_.take();
            return Formula::atom(a.text);
        }
        case Token::Type::True:
            lex_.take();
            return Formula::constant(true);
        case Token::Type::False:
            lex_.take();
            return Formula::constant(false);
        case Token::Type::End:
            throw parse_error("unexpected end of input", t.pos);
        default:
            throw parse_error("unexpected token '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
};

int precedence(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::Atom:
    case Formula::Kind::Constant: return 7;
    case Formula::Kind::Not: return 6;
    case Formula::Kind::And: return 5;
    case Formula::Kind::Xor: return 4;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Iff: return 1;
    }
    return 0;
}

const char* op_text(Formula::Kind k) {
    switch (k) {
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Xor: return " xor ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Iff: return " <-> ";
    default: return "?";
    }
}

void print(const Formula& f, std::ostream& os, int parent_prec, bool right_side) {
    int prec = precedence(f.kind());
    switch (f.kind()) {
    case Formula::Kind::Atom:
        os << f.atom_name();
        return;
    case Formula::Kind::Constant:
        os << (f.constant_value() ? "true" : "false");
        return;
    case Formula::Kind::Not:
        os << '!';
        print(f.child(), os, prec, false);
        return;
    default: {
        // Parenthesize when binding looser than the context, or at equal
        // precedence on the non-associative side.
        bool rassoc = f.kind() == Formula::Kind::Implies;
        bool need_parens = prec < parent_prec ||
                           (prec == parent_prec && right_side != rassoc);
        if (need_parens) os << '(';
        print(f.left(), os, prec, false);
        os << op_text(f.kind());
        print(f.right(), os, prec, true);
        if (need_parens) os << ')';
        return;
    }
    }
}

} // namespace

Formula parse_formula(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const Formula& f) {
    std::ostringstream os;
    print(f, os, 0, false);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
    print(f, os, 0, false);
    return os;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
    switch (f.kind()) {
    case Formula::Kind::Atom: out.insert(f.atom_name()); return;
    case Formula::Kind::Constant: return;
    case Formula::Kind::Not: collect_atoms(f.child(), out); return;
    default:
        collect_atoms(f.left(), out);
        collect_atoms(f.right(), out);
        return;
    }
}

std::set<std::string> atoms(std::span<const Formula> formulas) {
    std::set<std::string> out;
    for (const auto& f : formulas) collect_atoms(f, out);
    return out;
}

bool evaluate(const Formula& f, const Valuation& v) {
    switch (f.kind()) {
    case Formula::Kind::Atom: return v.lookup(f.atom_name());
    case Formula::Kind::Constant: return f.constant_value();
    case Formula::Kind::Not: return !evaluate(f.child(), v);
    case Formula::Kind::And: return evaluate(f.left(), v) && evaluate(f.right(), v);
    case Formula::Kind::Or: return evaluate(f.left(), v) || evaluate(f.right(), v);
    case Formula::Kind::Implies: return !evaluate(f.left(), v) || evaluate(f.right(), v);
    case Formula::Kind::Iff: return evaluate(f.left(), v) == evaluate(f.right(), v);
    case Formula::Kind::Xor: return evaluate(f.left(), v) != evaluate(f.right(), v);
    }
    throw error("corrupt formula node");
}

} // namespace ja
