#include "unfair/rational.hpp"

#include <cctype>

namespace unfair {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("malformed rational literal: " + text);
        Rational r(num + "/" + den);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string head = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("malformed decimal literal: " + text);
        bool neg = !head.empty() && head[0] == '-';
        if (neg || (!head.empty() && head[0] == '+')) head = head.substr(1);
        if (head.empty()) head = "0";
        Int units(head);
        Int scale = int_pow(10, frac.size());
        Int num = units * scale + (frac.empty() ? Int(0) : Int(frac));
        Rational r = rat(num, scale);
        return neg ? Rational(-r) : r;
    }
    Rational r(text);
    r.canonicalize();
    return r;
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    Int scale = int_pow(10, digits);
    // round(r * scale) with ties away from zero
    Rational scaled = r * Rational(scale);
    Int num = scaled.get_num(), den = scaled.get_den();
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int twice = 2 * abs(rem);
    if (twice >= den) q += (sgn(num) < 0 ? -1 : 1);
    bool neg = q < 0;
    Int aq = abs(q);
    std::string s = aq.get_str();
    if (digits == 0) return (neg ? "-" : "") + s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

}  // namespace unfair
