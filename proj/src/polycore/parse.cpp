#include "srpb/polycore/parse.hpp"

#include <cctype>

namespace srpb {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : InputError("syntax error at offset " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

namespace {

constexpr unsigned long long max_exponent = 1ull << 31;

class Parser {
public:
    Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

    Polynomial run()
    {
        auto f = expr();
        skip();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip();
        auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail(pos_ == text_.size() ? "unexpected end of input" : "expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial expr()
    {
        auto f = term();
        for (;;) {
            if (accept('+'))
                f += term();
            else if (accept('-'))
                f -= term();
            else
                return f;
        }
    }

    Polynomial term()
    {
        auto f = unary();
        while (accept('*'))
            f = f * unary();
        return f;
    }

    Polynomial unary()
    {
        if (accept('-'))
            return -unary();
        return power();
    }

    Polynomial power()
    {
        auto f = atom();
        if (!accept('^'))
            return f;
        skip();
        auto at = pos_;
        auto e = digits();
        if (e.size() > 10 || std::stoull(e) > max_exponent) {
            pos_ = at;
            fail("exponent " + e + " exceeds 2^31");
        }
        return f.pow(static_cast<std::uint32_t>(std::stoull(e)));
    }

    Polynomial atom()
    {
        skip();
        if (pos_ == text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto f = expr();
            if (!accept(')'))
                fail("expected ')'");
            return f;
        }
        if (c == 'x') {
            auto at = pos_++;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a variable index");
            auto idx = digits();
            if (idx.size() > 3 || std::stoul(idx) >= ctx_->nvars) {
                pos_ = at;
                fail("variable x" + idx + " outside x0..x" + std::to_string(ctx_->nvars - 1));
            }
            return Polynomial::variable(ctx_, std::stoul(idx));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto at = pos_;
            mpq_class value{mpz_class{digits()}};
            if (accept('/')) {
                mpz_class den{digits()};
                if (den == 0) {
                    pos_ = at;
                    fail("zero denominator");
                }
                value /= den;
            }
            try {
                return Polynomial::constant(ctx_, Scalar(ctx_->field, value));
            } catch (const InputError& e) {
                pos_ = at;
                fail(e.what());
            }
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const ContextPtr& ctx_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_expression(const ContextPtr& ctx, std::string_view text)
{
    return Parser(ctx, text).run();
}

} // namespace srpb
