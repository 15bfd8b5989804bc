#include "qmp/quaternion.hpp"

#include <cctype>
#include <utility>

namespace qmp {

Quaternion q_add(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion q_sub(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion q_neg(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

Quaternion q_mul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion q_conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

Rational q_norm_sq(const Quaternion& a) {
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

Quaternion q_inv(const Quaternion& a) {
    const Rational n = q_norm_sq(a);
    if (n == 0) throw DivisionByZero("inverse of zero quaternion");
    return {a.w / n, -a.x / n, -a.y / n, -a.z / n};
}

Quaternion q_scale(const Rational& s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}

bool is_real(const Quaternion& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

bool is_zero(const Quaternion& a) { return a.w == 0 && is_real(a); }

namespace {

// Single-pass recursive-descent scanner over the literal grammar.
// Columns are 1-based offsets into the literal.
class LiteralScanner {
  public:
    explicit LiteralScanner(std::string_view text) : text_(text) {}

    Quaternion parse() {
        if (text_.empty()) fail("empty quaternion literal", 1);
        Quaternion acc;
        bool negative = consume_sign();
        parse_term(acc, negative);
        while (pos_ < text_.size()) {
            const char sep = text_[pos_];
            if (sep != '+' && sep != '-')
                fail(std::string("expected '+' or '-' before next term, got '") + sep + "'",
                     pos_ + 1);
            ++pos_;
            parse_term(acc, sep == '-');
        }
        return acc;
    }

  private:
    [[noreturn]] void fail(const std::string& msg, std::size_t column) const {
        throw ParseError(msg, 0, column);
    }

    bool consume_sign() {
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool at_unit() const {
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == 'i' || c == 'j' || c == 'k';
    }

    Integer parse_digits() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        if (pos_ == start) fail("expected a digit", pos_ + 1);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    // term := rat unit? | unit, with the sign already consumed by the caller.
    void parse_term(Quaternion& acc, bool negative) {
        Rational coeff(0);
        bool have_coeff = false;
        if (at_digit()) {
            Integer num = parse_digits();
            Integer den(1);
            if (pos_ < text_.size() && text_[pos_] == '/') {
                const std::size_t slash_col = pos_ + 1;
                ++pos_;
                den = parse_digits();
                if (den == 0) fail("denominator must be positive", slash_col + 1);
            }
            coeff = make_rational(num, den);
            have_coeff = true;
        } else if (!at_unit()) {
            fail(pos_ < text_.size()
                     ? std::string("unexpected character '") + text_[pos_] + "' in quaternion literal"
                     : std::string("unexpected end of quaternion literal"),
                 pos_ + 1);
        }
        if (!have_coeff) coeff = Rational(1);
        if (negative) coeff = -coeff;

        if (at_unit()) {
            const char u = text_[pos_];
            ++pos_;
            if (u == 'i')
                acc.x += coeff;
            else if (u == 'j')
                acc.y += coeff;
            else
                acc.z += coeff;
        } else {
            acc.w += coeff;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Appends one formatted term, eliding unit coefficients of magnitude 1.
void append_term(std::string& out, const Rational& coeff, char unit) {
    const bool leading = out.empty();
    const bool negative = coeff < 0;
    if (!leading && !negative) out += '+';
    if (unit != '\0' && (coeff == 1 || coeff == -1)) {
        if (negative) out += '-';
    } else {
        out += to_string(coeff);
    }
    if (unit != '\0') out += unit;
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) { return LiteralScanner(text).parse(); }

std::string format_quaternion(const Quaternion& q) {
    std::string out;
    if (q.w != 0) append_term(out, q.w, '\0');
    if (q.x != 0) append_term(out, q.x, 'i');
    if (q.y != 0) append_term(out, q.y, 'j');
    if (q.z != 0) append_term(out, q.z, 'k');
    if (out.empty()) out = "0";
    return out;
}

}  // namespace qmp
