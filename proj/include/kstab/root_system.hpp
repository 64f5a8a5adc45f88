#ifndef KSTAB_ROOT_SYSTEM_HPP
#define KSTAB_ROOT_SYSTEM_HPP

#include "kstab/rational.hpp"

#include <string>
#include <vector>

namespace kstab {

/// Weight vector in simple-root coordinates of the ambient (product)
/// root system.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Rational> coords) : c_(std::move(coords)) {}
    static Weight zero(size_t rank) { return Weight(std::vector<Rational>(rank)); }

    size_t size() const { return c_.size(); }
    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational& operator[](size_t i) { return c_[i]; }
    const std::vector<Rational>& coordinates() const { return c_; }

    bool is_zero() const;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    friend Weight operator*(const Rational& c, const Weight& w);
    friend bool operator==(const Weight& a, const Weight& b) = default;

    std::string str() const;

private:
    std::vector<Rational> c_;
};

enum class CartanType { A, B, C, D, G2, F4, Torus };

std::string to_string(CartanType t);
/// Accepts "A".."D", "G2", "F4" and "T"/"torus"; anything else (in
/// particular the E series) raises an unsupported-type error.
CartanType cartan_type_from_string(const std::string& s);

struct CartanFactor {
    CartanType type;
    int rank;
    Rational scale;  // positive multiplier of the component's invariant form

    friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

/// Root system of a product of simple factors (plus optional torus
/// factors contributing coordinates but no roots).
///
/// The invariant form on each simple component is the symmetrized Cartan
/// matrix with the smallest positive integer symmetrizers, so short
/// simple roots have squared length 2; the factor's `scale` multiplies
/// this form. Torus factors use `scale` times the identity. Simple roots
/// follow Bourbaki's numbering.
class RootSystem {
public:
    static RootSystem build(const std::vector<CartanFactor>& factors);

    size_t rank() const { return rank_; }
    const std::vector<CartanFactor>& factors() const { return factors_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }

    /// Weyl-invariant bilinear form via the gram matrix.
    Rational pairing(const Weight& u, const Weight& v) const;

    /// Half-sum of the positive roots.
    const Weight& half_sum_positive_roots() const { return half_sum_; }

    /// Same factors with every scale multiplied by c > 0.
    RootSystem scaled(const Rational& c) const;

private:
    RootSystem() = default;
    size_t rank_ = 0;
    std::vector<CartanFactor> factors_;
    std::vector<Weight> positive_roots_;
    std::vector<std::vector<Rational>> gram_;
    Weight half_sum_;
};

} // namespace kstab

#endif
