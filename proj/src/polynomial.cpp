#include "kstab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kstab {

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeff_(std::move(ascending_coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coeff_.empty() && coeff_.back().is_zero())
        coeff_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial({c});
}

Polynomial Polynomial::affine(const Rational& c0, const Rational& c1) {
    return Polynomial({c0, c1});
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
    if (degree < 0)
        throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeff_.size()))
        return Rational(0);
    return coeff_[static_cast<size_t>(k)];
}

const Rational& Polynomial::leading() const {
    if (coeff_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeff_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeff_.size() > coeff_.size())
        coeff_.resize(o.coeff_.size());
    for (size_t i = 0; i < o.coeff_.size(); ++i)
        coeff_[i] += o.coeff_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeff_.size() > coeff_.size())
        coeff_.resize(o.coeff_.size());
    for (size_t i = 0; i < o.coeff_.size(); ++i)
        coeff_[i] -= o.coeff_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> out(a.coeff_.size() + b.coeff_.size() - 1);
    for (size_t i = 0; i < a.coeff_.size(); ++i)
        for (size_t j = 0; j < b.coeff_.size(); ++j)
            out[i + j] += a.coeff_[i] * b.coeff_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p);
    for (auto& x : r.coeff_) x *= c;
    r.trim();
    return r;
}

Polynomial Polynomial::derivative() const {
    if (coeff_.size() <= 1)
        return Polynomial();
    std::vector<Rational> out(coeff_.size() - 1);
    for (size_t k = 1; k < coeff_.size(); ++k)
        out[k - 1] = Rational(static_cast<long>(k)) * coeff_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
    if (is_zero())
        return Polynomial();
    std::vector<Rational> out(coeff_.size() + 1);
    for (size_t k = 0; k < coeff_.size(); ++k)
        out[k + 1] = coeff_[k] / Rational(static_cast<long>(k + 1));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::times_x() const {
    if (is_zero())
        return Polynomial();
    std::vector<Rational> out;
    out.reserve(coeff_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), coeff_.begin(), coeff_.end());
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    Polynomial r(a);
    if (a.degree() < b.degree())
        return {Polynomial(), r};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rational inv_lead = b.leading().reciprocal();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.leading() * inv_lead;
        q[static_cast<size_t>(shift)] = factor;
        // r -= factor * x^shift * b
        for (size_t i = 0; i < b.coeff_.size(); ++i)
            r.coeff_[i + static_cast<size_t>(shift)] -= factor * b.coeff_[i];
        r.trim();
    }
    return {Polynomial(std::move(q)), r};
}

Rational Polynomial::content() const {
    if (is_zero())
        return Rational(0);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeff_) {
        num_gcd = ::gcd(num_gcd, c.num());
        den_lcm = ::lcm(den_lcm, c.den());
    }
    return Rational(::abs(num_gcd), den_lcm);
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial f = a, g = b;
    while (!g.is_zero()) {
        Polynomial r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero())
        return f;
    return f.leading().reciprocal() * f;  // monic, hence positive leading
}

Polynomial Polynomial::square_free_part() const {
    if (is_zero())
        throw std::domain_error("square-free part of the zero polynomial");
    if (degree() == 0)
        return *this;
    Polynomial g = gcd(*this, derivative());
    if (g.degree() == 0)
        return *this;
    auto [q, r] = divmod(*this, g);
    if (!r.is_zero())
        throw std::logic_error("square-free decomposition left a remainder");
    return q;
}

std::string Polynomial::str(char var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff_[static_cast<size_t>(k)];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool need_coeff = (k == 0) || !(mag == Rational(1));
        if (need_coeff) {
            if (mag.is_integer())
                os << mag.str();
            else
                os << "(" << mag.str() << ")";
        }
        if (k > 0) {
            if (need_coeff) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Rational definite_integral(const Polynomial& p, const Rational& a, const Rational& b) {
    if (a > b)
        throw std::invalid_argument("integration bounds out of order");
    Polynomial F = p.antiderivative();
    return F(b) - F(a);
}

} // namespace kstab
