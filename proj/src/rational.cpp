#include "kstab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace kstab {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty())
        throw std::invalid_argument("bad rational literal: \"" + std::string(whole) + "\"");
    mpz_class z;
    if (mpz_set_str(z.get_mpz_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: \"" + std::string(whole) + "\"");
    return z;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow10(int k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p, 1) : Rational(1, p);
}

Rational Rational::from_string(std::string_view s) {
    std::string_view whole = s;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), whole);
        mpz_class den = parse_integer(s.substr(slash + 1), whole);
        if (den == 0)
            throw std::invalid_argument("zero denominator in \"" + std::string(whole) + "\"");
        return Rational(num, den);
    }

    // Decimal / scientific form: sign, digits, optional fraction, optional exponent.
    auto epos = s.find_first_of("eE");
    int exp10 = 0;
    if (epos != std::string_view::npos) {
        mpz_class e = parse_integer(s.substr(epos + 1), whole);
        if (::abs(e) > 4096)
            throw std::invalid_argument("exponent out of range in \"" + std::string(whole) + "\"");
        exp10 = static_cast<int>(e.get_si());
        s = s.substr(0, epos);
    }
    std::string digits;
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    int frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot)
                throw std::invalid_argument("bad rational literal: \"" + std::string(whole) + "\"");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else {
            throw std::invalid_argument("bad rational literal: \"" + std::string(whole) + "\"");
        }
    }
    if (!seen_digit)
        throw std::invalid_argument("bad rational literal: \"" + std::string(whole) + "\"");
    mpz_class mant(digits, 10);
    if (neg) mant = -mant;
    Rational r(mant, 1);
    return r * pow10(exp10 - frac_len);
}

std::string Rational::decimal(int digits) const {
    if (digits < 0)
        throw std::invalid_argument("negative digit count");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class n = ::abs(num()) * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), den().get_mpz_t());
    if (2 * r >= den()) ++q;  // round half away from zero
    std::string body = q.get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    std::string out;
    if (sign() < 0 && q != 0) out.push_back('-');
    if (digits == 0) {
        out += body;
    } else {
        out += body.substr(0, body.size() - static_cast<size_t>(digits));
        out.push_back('.');
        out += body.substr(body.size() - static_cast<size_t>(digits));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace kstab
