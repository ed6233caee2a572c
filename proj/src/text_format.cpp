#include "text_format.hpp"

#include <cctype>

#include "superconf/errors.hpp"

namespace superconf::text {

std::string Symbol::to_string() const {
    switch (kind) {
        case Kind::Zeta: return "z[" + std::to_string(value) + "]";
        case Kind::Even: return value == 1 ? std::string("z") : "z^" + std::to_string(value);
        case Kind::ThetaPlus: return "thp";
        case Kind::ThetaMinus: return "thm";
        case Kind::Theta: return "th";
    }
    return "?";
}

std::string format_sum(const std::vector<Term>& terms) {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        std::string syms;
        for (const auto& s : t.symbols) {
            if (s.kind == Symbol::Kind::Even && s.value == 0) continue;
            syms += s.to_string();
        }
        bool negative = t.coeff.is_real() && sgn(t.coeff.re()) < 0;
        GaussianRational mag = negative ? -t.coeff : t.coeff;
        std::string body;
        if (syms.empty())
            body = mag.to_string();
        else if (mag.is_one())
            body = syms;
        else
            body = mag.to_string() + "*" + syms;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += negative ? " - " + body : " + " + body;
        first = false;
    }
    return first ? "0" : out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) {
        for (char c : src)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    std::vector<Term> sum() {
        std::vector<Term> out;
        if (s_.empty()) throw ParseError("empty expression");
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = get() == '-';
        for (;;) {
            Term t = term();
            if (negate) t.coeff = -t.coeff;
            out.push_back(std::move(t));
            if (done()) break;
            char c = get();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            negate = c == '-';
        }
        return out;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    char get() { return done() ? '\0' : s_[pos_++]; }
    bool starts(const char* lit) const { return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0; }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    int integer() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    GaussianRational number() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
        return GaussianRational::parse(s_.substr(start, pos_ - start));
    }

    GaussianRational complex() {
        std::size_t close = s_.find(')', pos_);
        if (close == std::string::npos) fail("unterminated '('");
        GaussianRational z = GaussianRational::parse(s_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
        return z;
    }

    Term term() {
        Term t;
        bool any = false;
        for (;;) {
            if (peek() == '*' && any) {
                ++pos_;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coeff *= number();
            } else if (peek() == '(') {
                t.coeff *= complex();
            } else if (starts("z[")) {
                pos_ += 2;
                int label = integer();
                if (get() != ']') fail("expected ']'");
                t.symbols.push_back(Symbol::zeta(label));
            } else if (starts("z^")) {
                pos_ += 2;
                t.symbols.push_back(Symbol::even(integer()));
            } else if (peek() == 'z') {
                ++pos_;
                t.symbols.push_back(Symbol::even(1));
            } else if (starts("thp")) {
                pos_ += 3;
                t.symbols.push_back({Symbol::Kind::ThetaPlus});
            } else if (starts("thm")) {
                pos_ += 3;
                t.symbols.push_back({Symbol::Kind::ThetaMinus});
            } else if (starts("th")) {
                pos_ += 2;
                t.symbols.push_back({Symbol::Kind::Theta});
            } else {
                break;
            }
            any = true;
        }
        if (!any) fail("expected a term");
        return t;
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Term> parse_sum(const std::string& text) { return Parser(text).sum(); }

}  // namespace superconf::text
