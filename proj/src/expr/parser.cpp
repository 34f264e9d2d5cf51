#include "smae/expr/parser.hpp"

#include "smae/error.hpp"

#include <cctype>

namespace smae::expr {

namespace {

bool is_differential(std::string_view name)
{
    return name == "dx" || name == "dp" || name == "dy" || name == "dq";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::unique_ptr<Node> run()
    {
        auto n = parse_sum();
        skip_space();
        if (pos_ < text_.size())
            throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
        return n;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (pos_ >= text_.size())
                throw ParseError(pos_, std::string("expected '") + c + "' but input ended");
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
    }

    static std::unique_ptr<Node> make(Node::Kind k, std::size_t pos)
    {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->position = pos;
        return n;
    }

    static std::unique_ptr<Node> binary(Node::Kind k, std::size_t pos, std::unique_ptr<Node> a, std::unique_ptr<Node> b)
    {
        auto n = make(k, pos);
        n->children.push_back(std::move(a));
        n->children.push_back(std::move(b));
        return n;
    }

    std::unique_ptr<Node> parse_sum()
    {
        auto left = parse_product();
        for (;;) {
            skip_space();
            std::size_t at = pos_;
            if (accept('+'))
                left = binary(Node::Kind::Add, at, std::move(left), parse_product());
            else if (accept('-'))
                left = binary(Node::Kind::Sub, at, std::move(left), parse_product());
            else
                return left;
        }
    }

    std::unique_ptr<Node> parse_product()
    {
        auto left = parse_unary();
        for (;;) {
            skip_space();
            std::size_t at = pos_;
            if (accept('*'))
                left = binary(Node::Kind::Mul, at, std::move(left), parse_unary());
            else if (accept('/'))
                left = binary(Node::Kind::Div, at, std::move(left), parse_unary());
            else
                return left;
        }
    }

    std::unique_ptr<Node> parse_unary()
    {
        skip_space();
        std::size_t at = pos_;
        if (accept('-')) {
            auto n = make(Node::Kind::Neg, at);
            n->children.push_back(parse_unary());
            return n;
        }
        if (accept('+'))
            return parse_unary();
        return parse_power();
    }

    std::unique_ptr<Node> parse_power()
    {
        auto base = parse_atom();
        for (;;) {
            skip_space();
            std::size_t at = pos_;
            if (!accept('^'))
                return base;
            skip_space();
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                std::string digits(text_.substr(start, pos_ - start));
                if (digits.size() > 6)
                    throw ParseError(start, "exponent too large");
                auto n = make(Node::Kind::Pow, at);
                n->exponent = static_cast<unsigned>(std::stoul(digits));
                n->children.push_back(std::move(base));
                base = std::move(n);
                continue;
            }
            std::size_t save = pos_;
            std::string ident = read_identifier();
            if (is_differential(ident)) {
                auto rhs = make(Node::Kind::Ident, save);
                rhs->name = ident;
                base = binary(Node::Kind::Wedge, at, std::move(base), std::move(rhs));
                continue;
            }
            throw ParseError(save, "expected a nonnegative integer exponent");
        }
    }

    std::string read_identifier()
    {
        std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::unique_ptr<Node> parse_atom()
    {
        skip_space();
        std::size_t at = pos_;
        if (pos_ >= text_.size())
            throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident = read_identifier();
            if (ident == "sqrt") {
                expect('(');
                auto n = make(Node::Kind::Sqrt, at);
                n->children.push_back(parse_sum());
                expect(')');
                return n;
            }
            auto n = make(Node::Kind::Ident, at);
            n->name = std::move(ident);
            return n;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::unique_ptr<Node> parse_number()
    {
        std::size_t start = pos_;
        std::string whole, frac;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            whole += text_[pos_++];
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                frac += text_[pos_++];
        }
        if (whole.empty() && frac.empty())
            throw ParseError(start, "malformed number");
        auto n = make(Node::Kind::Number, start);
        mpz_class num(whole.empty() ? "0" : whole + frac);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        n->number = mpq_class(num, den);
        n->number.canonicalize();
        return n;
    }
};

} // namespace

std::unique_ptr<Node> parse_tree(std::string_view text)
{
    return Parser(text).run();
}

Scalar evaluate(const Node& node, const VariableContext& ctx)
{
    switch (node.kind) {
    case Node::Kind::Number:
        return Scalar(node.number);
    case Node::Kind::Ident: {
        if (is_differential(node.name))
            throw ParseError(node.position, "differential '" + node.name + "' in a scalar expression");
        auto v = ctx.lookup(node.name);
        if (!v)
            throw ParseError(node.position, "unknown identifier '" + node.name + "'");
        return Scalar::variable(*v);
    }
    case Node::Kind::Neg:
        return -evaluate(*node.children[0], ctx);
    case Node::Kind::Add:
        return evaluate(*node.children[0], ctx) + evaluate(*node.children[1], ctx);
    case Node::Kind::Sub:
        return evaluate(*node.children[0], ctx) - evaluate(*node.children[1], ctx);
    case Node::Kind::Mul:
        return evaluate(*node.children[0], ctx) * evaluate(*node.children[1], ctx);
    case Node::Kind::Div: {
        Scalar num = evaluate(*node.children[0], ctx);
        Scalar den = evaluate(*node.children[1], ctx);
        if (den.is_zero())
            throw ParseError(node.children[1]->position, "division by zero");
        try {
            return num / den;
        } catch (const DomainError& e) {
            throw ParseError(node.children[1]->position, e.what());
        }
    }
    case Node::Kind::Pow:
        return evaluate(*node.children[0], ctx).pow(static_cast<int>(node.exponent));
    case Node::Kind::Sqrt: {
        Scalar arg = evaluate(*node.children[0], ctx);
        if (!ctx.radicand())
            throw ParseError(node.position, "sqrt of an unregistered radicand");
        if (arg.has_radical() || arg.rational_part() != *ctx.radicand())
            throw ParseError(node.position, "sqrt argument differs from the registered radicand");
        return ctx.sqrt();
    }
    case Node::Kind::Wedge:
        throw ParseError(node.position, "wedge product in a scalar expression");
    }
    throw ParseError(node.position, "unsupported syntax");
}

Scalar parse(std::string_view text, const VariableContext& ctx)
{
    auto tree = parse_tree(text);
    return evaluate(*tree, ctx);
}

std::vector<std::string> split_top_level(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace smae::expr
