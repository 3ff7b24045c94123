#include "cherednik/serialize.hpp"

#include <cctype>
#include <sstream>

namespace cherednik {

namespace {

void append_expvec(std::ostringstream& os, const char* head, const ExpVec& e) {
    bool any = false;
    for (int k : e) any = any || k != 0;
    if (!any) return;
    os << " * " << head << "^(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
}

void append_monomial(std::ostringstream& os, const Scalar& c, const ExpVec& e) {
    os << c.str();
    append_expvec(os, "x", e);
}

void append_den(std::ostringstream& os, const std::vector<int>& den) {
    bool any = false;
    for (int k : den) any = any || k > 0;
    if (!any) return;
    os << " / delta^(";
    for (std::size_t i = 0; i < den.size(); ++i) os << (i ? "," : "") << den[i];
    os << ")";
}

} // namespace

std::string poly_str(const MultiPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        append_monomial(os, c, e);
    }
    return os.str();
}

std::string localized_str(const LocalizedCoeff& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, s] : c.num().terms()) {
        if (!first) os << " + ";
        first = false;
        append_monomial(os, s, e);
        append_den(os, c.den());
    }
    return os.str();
}

std::string skew_str(const SkewOp& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : a.terms()) {
        for (const auto& [e, s] : c.num().terms()) {
            if (!first) os << " + ";
            first = false;
            append_monomial(os, s, e);
            append_den(os, c.den());
            append_expvec(os, "L", k.second);
            if (k.first != 0) os << " * g" << k.first;
        }
    }
    return os.str();
}

std::string cher_str(const CherednikElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, f] : x.terms()) {
        for (const auto& [e, s] : f.terms()) {
            if (!first) os << " + ";
            first = false;
            append_monomial(os, s, e);
            if (k.first != 0) os << " * g" << k.first;
            append_expvec(os, "D", k.second);
        }
    }
    return os.str();
}

namespace {

struct Token {
    enum Kind { Num, Ident, Sym, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_ = Token{Token::End, "", i_};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = Token{Token::Num, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = Token{Token::Ident, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        tok_ = Token{Token::Sym, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, const Algebra& H)
        : lex_(text), H_(H), arr_(H.setting().arr), G_(H.setting().group) {}

    SkewOp parse() {
        SkewOp out = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("unexpected trailing input", lex_.peek().pos);
        return out;
    }

private:
    SkewOp expr() {
        bool neg = accept_sym("-");
        SkewOp out = term();
        if (neg) out = skew_scale(out, Scalar(-1));
        for (;;) {
            if (accept_sym("+")) {
                out = skew_add(arr_, out, term());
            } else if (accept_sym("-")) {
                out = skew_sub(arr_, out, term());
            } else {
                break;
            }
        }
        return out;
    }

    SkewOp term() {
        SkewOp out = factor();
        for (;;) {
            if (accept_sym("*")) {
                out = multiply_skew(G_, arr_, H_.params().twist, out, factor());
            } else if (accept_sym("/")) {
                std::size_t pos = lex_.peek().pos;
                out = divide(out, factor(), pos);
            } else {
                break;
            }
        }
        return out;
    }

    SkewOp divide(const SkewOp& a, const SkewOp& b, std::size_t pos) {
        if (b.terms().size() != 1)
            throw ParseError("divisor must be a single coefficient term", pos);
        const auto& [key, c] = *b.terms().begin();
        bool pure = key.first == 0;
        for (int e : key.second) pure = pure && e == 0;
        if (!pure) throw ParseError("cannot divide by an operator", pos);
        // Invert c when its numerator is a scalar times hyperplane forms.
        MultiPoly num = c.num();
        std::vector<int> extra(arr_.count(), 0);
        for (std::size_t y = 0; y < arr_.count(); ++y) {
            for (;;) {
                auto q = divide_exact(num, arr_.alphas[y]);
                if (!q) break;
                num = *q;
                ++extra[y];
            }
        }
        if (!num.is_constant() || num.is_zero())
            throw ParseError("divisor is not invertible in the localized ring", pos);
        MultiPoly lifted = MultiPoly::constant(arr_.nvars, num.constant_value().inverse());
        for (std::size_t y = 0; y < arr_.count(); ++y)
            for (int k = 0; k < c.den()[y]; ++k) lifted = lifted * arr_.alphas[y];
        LocalizedCoeff inv = LocalizedCoeff(lifted, extra).reduced(arr_);
        SkewOp out;
        for (const auto& [k2, c2] : a.terms()) out.add(arr_, k2, c2.mul(arr_, inv));
        return out;
    }

    SkewOp factor() {
        Token t = lex_.peek();
        if (t.kind == Token::Sym && t.text == "-") {
            lex_.take();
            return skew_scale(factor(), Scalar(-1));
        }
        if (t.kind == Token::Num) {
            lex_.take();
            return SkewOp::from_coeff(arr_, LocalizedCoeff::from_scalar(arr_, scalar_from(t)));
        }
        if (t.kind == Token::Sym && t.text == "(") {
            lex_.take();
            SkewOp out = expr();
            expect_sym(")");
            return out;
        }
        if (t.kind == Token::Ident) {
            lex_.take();
            if (t.text == "zeta") {
                Scalar z = Scalar::zeta(field());
                if (accept_sym("^")) {
                    long e = int_token();
                    Scalar out(1);
                    for (long k = 0; k < e; ++k) out *= z;
                    z = out;
                }
                return SkewOp::from_coeff(arr_, LocalizedCoeff::from_scalar(arr_, z));
            }
            if (t.text == "x") return indexed_poly(t.pos);
            if (t.text == "delta") return delta_factor(t.pos);
            if (t.text == "L") return exp_op(t.pos, false);
            if (t.text == "D") return exp_op(t.pos, true);
            if (t.text == "g") {
                long label = int_token();
                if (label < 0 || std::size_t(label) >= G_.size())
                    throw ParseError("group label out of range", t.pos);
                return SkewOp::group_elem(arr_, int(label));
            }
            throw ParseError("unknown symbol '" + t.text + "'", t.pos);
        }
        throw ParseError("expected a factor", t.pos);
    }

    SkewOp indexed_poly(std::size_t pos) {
        if (accept_sym("_")) {
            long i = int_token();
            check_index(i, pos);
            return SkewOp::from_poly(arr_, MultiPoly::variable(arr_.nvars, unsigned(i - 1)));
        }
        ExpVec e = exp_vector(pos);
        return SkewOp::from_poly(arr_, MultiPoly::monomial(arr_.nvars, e, Scalar(1)));
    }

    SkewOp delta_factor(std::size_t pos) {
        expect_sym("^");
        Token t = lex_.peek();
        std::vector<long> ks;
        expect_sym("(");
        ks.push_back(int_token());
        while (accept_sym(",")) ks.push_back(int_token());
        expect_sym(")");
        if (ks.size() != arr_.count())
            throw ParseError("delta exponent count does not match the arrangement", t.pos);
        MultiPoly f = MultiPoly::constant(arr_.nvars, Scalar(1));
        for (std::size_t y = 0; y < ks.size(); ++y) {
            if (ks[y] < 0) throw ParseError("negative delta exponent", t.pos);
            for (long k = 0; k < ks[y]; ++k) f = f * arr_.alphas[y];
        }
        (void)pos;
        return SkewOp::from_poly(arr_, f);
    }

    SkewOp exp_op(std::size_t pos, bool dunkl) {
        ExpVec e(arr_.nvars, 0);
        if (accept_sym("_")) {
            long i = int_token();
            check_index(i, pos);
            e[i - 1] = 1;
        } else {
            e = exp_vector(pos);
        }
        if (dunkl) return H_.dpow(e);
        return SkewOp::term(arr_, LocalizedCoeff::from_scalar(arr_, Scalar(1)), e, 0);
    }

    ExpVec exp_vector(std::size_t pos) {
        expect_sym("^");
        expect_sym("(");
        std::vector<long> ks;
        ks.push_back(int_token());
        while (accept_sym(",")) ks.push_back(int_token());
        expect_sym(")");
        if (ks.size() != arr_.nvars)
            throw ParseError("exponent count does not match the rank", pos);
        ExpVec e(arr_.nvars, 0);
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] < 0) throw ParseError("negative exponent", pos);
            e[i] = int(ks[i]);
        }
        return e;
    }

    Scalar scalar_from(const Token& t) {
        return Scalar(Rational(Integer(t.text)));
    }

    long int_token() {
        bool neg = accept_sym("-");
        Token t = lex_.take();
        if (t.kind != Token::Num) throw ParseError("expected an integer", t.pos);
        long v = std::stol(t.text);
        return neg ? -v : v;
    }

    void check_index(long i, std::size_t pos) {
        if (i < 1 || std::size_t(i) > arr_.nvars)
            throw ParseError("index out of range (1.." + std::to_string(arr_.nvars) + ")", pos);
    }

    bool accept_sym(const char* s) {
        if (lex_.peek().kind == Token::Sym && lex_.peek().text == s) {
            lex_.take();
            return true;
        }
        return false;
    }

    void expect_sym(const char* s) {
        if (!accept_sym(s))
            throw ParseError(std::string("expected '") + s + "'", lex_.peek().pos);
    }

    const Field* field() const {
        for (const auto& d : H_.setting().reflections)
            return d.lambda.field();
        return Field::rationals();
    }

    Lexer lex_;
    const Algebra& H_;
    const Arrangement& arr_;
    const Group& G_;
};

} // namespace

SkewOp parse_skew(const std::string& text, const Algebra& H) {
    return Parser(text, H).parse();
}

MultiPoly parse_poly(const std::string& text, const Algebra& H) {
    SkewOp a = parse_skew(text, H);
    MultiPoly out(H.setting().rank());
    ExpVec zero(H.setting().rank(), 0);
    for (const auto& [k, c] : a.terms()) {
        if (k.first != 0 || k.second != zero || !c.is_polynomial())
            throw ParseError("expression is not a polynomial", 0);
        out += c.num();
    }
    return out;
}

} // namespace cherednik
