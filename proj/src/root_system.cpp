#include "kstab/root_system.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace kstab {

bool Weight::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero())
            return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const {
    if (o.size() != size())
        throw std::invalid_argument("weight dimension mismatch");
    Weight r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] += o.c_[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    if (o.size() != size())
        throw std::invalid_argument("weight dimension mismatch");
    Weight r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] -= o.c_[i];
    return r;
}

Weight operator*(const Rational& c, const Weight& w) {
    Weight r(w);
    for (auto& x : r.c_)
        x *= c;
    return r;
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].str();
    }
    os << ")";
    return os.str();
}

std::string to_string(CartanType t) {
    switch (t) {
        case CartanType::A: return "A";
        case CartanType::B: return "B";
        case CartanType::C: return "C";
        case CartanType::D: return "D";
        case CartanType::G2: return "G2";
        case CartanType::F4: return "F4";
        case CartanType::Torus: return "T";
    }
    return "?";
}

CartanType cartan_type_from_string(const std::string& s) {
    if (s == "A") return CartanType::A;
    if (s == "B") return CartanType::B;
    if (s == "C") return CartanType::C;
    if (s == "D") return CartanType::D;
    if (s == "G2" || s == "G") return CartanType::G2;
    if (s == "F4" || s == "F") return CartanType::F4;
    if (s == "T" || s == "torus") return CartanType::Torus;
    throw std::invalid_argument("unsupported Cartan type \"" + s +
                                "\" (supported: A, B, C, D, G2, F4, T)");
}

namespace {

using IntMatrix = std::vector<std::vector<int>>;

// Cartan matrix A[i][j] = 2 (a_i, a_j) / (a_j, a_j), Bourbaki numbering.
IntMatrix cartan_matrix(CartanType type, int n) {
    IntMatrix A(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    auto chain = [&](int upto) {
        for (int i = 0; i < upto; ++i) {
            A[i][i] = 2;
            if (i + 1 < upto) {
                A[i][i + 1] = -1;
                A[i + 1][i] = -1;
            }
        }
    };
    switch (type) {
        case CartanType::A:
            chain(n);
            break;
        case CartanType::B:  // a_n short
            chain(n);
            A[n - 2][n - 1] = -2;
            break;
        case CartanType::C:  // a_n long
            chain(n);
            A[n - 1][n - 2] = -2;
            break;
        case CartanType::D:  // a_{n-1} and a_n both attached to a_{n-2}
            chain(n - 1);
            A[n - 1][n - 1] = 2;
            A[n - 3][n - 1] = -1;
            A[n - 1][n - 3] = -1;
            break;
        case CartanType::G2:  // a_1 short
            A = {{2, -1}, {-3, 2}};
            break;
        case CartanType::F4:  // a_1, a_2 long; a_3, a_4 short
            A = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
            break;
        case CartanType::Torus:
            throw std::logic_error("torus factor has no Cartan matrix");
    }
    return A;
}

void check_rank(CartanType type, int n) {
    bool ok = false;
    switch (type) {
        case CartanType::A: ok = n >= 1; break;
        case CartanType::B: ok = n >= 2; break;
        case CartanType::C: ok = n >= 2; break;
        case CartanType::D: ok = n >= 3; break;
        case CartanType::G2: ok = n == 2; break;
        case CartanType::F4: ok = n == 4; break;
        case CartanType::Torus: ok = n >= 1; break;
    }
    if (!ok)
        throw std::invalid_argument("invalid rank " + std::to_string(n) + " for Cartan type " +
                                    to_string(type));
}

size_t expected_positive_root_count(CartanType type, int n) {
    size_t un = static_cast<size_t>(n);
    switch (type) {
        case CartanType::A: return un * (un + 1) / 2;
        case CartanType::B:
        case CartanType::C: return un * un;
        case CartanType::D: return un * (un - 1);
        case CartanType::G2: return 6;
        case CartanType::F4: return 24;
        case CartanType::Torus: return 0;
    }
    return 0;
}

// Positive roots by breadth-first closure over root strings: beta + a_i is a
// root iff p - <beta, a_i^vee> > 0, where p is the length of the descending
// a_i-string through beta.
std::vector<std::vector<int>> positive_roots_from_cartan(const IntMatrix& A) {
    int n = static_cast<int>(A.size());
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> current;
    for (int i = 0; i < n; ++i) {
        std::vector<int> simple(static_cast<size_t>(n), 0);
        simple[static_cast<size_t>(i)] = 1;
        known.insert(simple);
        current.push_back(simple);
    }
    std::vector<std::vector<int>> all(current);
    while (!current.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : current) {
            for (int i = 0; i < n; ++i) {
                int cartan_pairing = 0;
                for (int j = 0; j < n; ++j)
                    cartan_pairing += beta[static_cast<size_t>(j)] * A[static_cast<size_t>(j)][static_cast<size_t>(i)];
                int p = 0;
                std::vector<int> down = beta;
                while (true) {
                    down[static_cast<size_t>(i)] -= 1;
                    bool nonneg = true;
                    for (int v : down) nonneg = nonneg && v >= 0;
                    if (!nonneg || !known.count(down))
                        break;
                    ++p;
                }
                if (p - cartan_pairing > 0) {
                    std::vector<int> up = beta;
                    up[static_cast<size_t>(i)] += 1;
                    if (known.insert(up).second) {
                        next.push_back(up);
                        all.push_back(up);
                    }
                }
            }
        }
        current = std::move(next);
    }
    return all;
}

// Smallest positive integer symmetrizers d with d_j A[i][j] == d_i A[j][i];
// the component's diagram is connected, so propagation determines them.
std::vector<Rational> symmetrizers(const IntMatrix& A) {
    size_t n = A.size();
    std::vector<Rational> d(n, Rational(0));
    d[0] = Rational(1);
    std::vector<size_t> frontier{0};
    while (!frontier.empty()) {
        size_t i = frontier.back();
        frontier.pop_back();
        for (size_t j = 0; j < n; ++j) {
            if (A[i][j] != 0 && i != j && d[j].is_zero()) {
                // d_j A[i][j] = d_i A[j][i]
                d[j] = d[i] * Rational(A[j][i]) / Rational(A[i][j]);
                frontier.push_back(j);
            }
        }
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& x : d) {
        if (x.is_zero())
            throw std::logic_error("disconnected Cartan diagram in a single factor");
        den_lcm = ::lcm(den_lcm, x.den());
    }
    for (auto& x : d)
        x *= Rational(den_lcm, 1);
    for (const auto& x : d)
        num_gcd = ::gcd(num_gcd, x.num());
    for (auto& x : d)
        x /= Rational(num_gcd, 1);
    return d;
}

} // namespace

RootSystem RootSystem::build(const std::vector<CartanFactor>& factors) {
    RootSystem rs;
    rs.factors_ = factors;
    size_t total = 0;
    for (const auto& f : factors) {
        check_rank(f.type, f.rank);
        if (!(f.scale > Rational(0)))
            throw std::invalid_argument("factor scale must be positive");
        total += static_cast<size_t>(f.rank);
    }
    rs.rank_ = total;
    rs.gram_.assign(total, std::vector<Rational>(total, Rational(0)));

    size_t offset = 0;
    for (const auto& f : factors) {
        size_t n = static_cast<size_t>(f.rank);
        if (f.type == CartanType::Torus) {
            for (size_t i = 0; i < n; ++i)
                rs.gram_[offset + i][offset + i] = f.scale;
            offset += n;
            continue;
        }
        IntMatrix A = cartan_matrix(f.type, f.rank);
        std::vector<Rational> d = symmetrizers(A);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                rs.gram_[offset + i][offset + j] = f.scale * d[j] * Rational(A[i][j]);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < i; ++j)
                if (!(rs.gram_[offset + i][offset + j] == rs.gram_[offset + j][offset + i]))
                    throw std::logic_error("gram matrix failed to symmetrize");

        auto roots = positive_roots_from_cartan(A);
        if (roots.size() != expected_positive_root_count(f.type, f.rank))
            throw std::logic_error("positive root closure produced a wrong count for " +
                                   to_string(f.type) + std::to_string(f.rank));
        for (const auto& r : roots) {
            Weight w = Weight::zero(total);
            for (size_t i = 0; i < n; ++i)
                w[offset + i] = Rational(r[i]);
            rs.positive_roots_.push_back(std::move(w));
        }
        offset += n;
    }

    Weight sum = Weight::zero(total);
    for (const auto& r : rs.positive_roots_)
        sum = sum + r;
    rs.half_sum_ = Rational(1, 2) * sum;
    return rs;
}

Rational RootSystem::pairing(const Weight& u, const Weight& v) const {
    if (u.size() != rank_ || v.size() != rank_)
        throw std::invalid_argument("weight dimension does not match the root system rank");
    Rational total(0);
    for (size_t i = 0; i < rank_; ++i) {
        if (u[i].is_zero())
            continue;
        Rational row(0);
        for (size_t j = 0; j < rank_; ++j)
            if (!v[j].is_zero())
                row += gram_[i][j] * v[j];
        total += u[i] * row;
    }
    return total;
}

RootSystem RootSystem::scaled(const Rational& c) const {
    if (!(c > Rational(0)))
        throw std::invalid_argument("gram scale factor must be positive");
    std::vector<CartanFactor> fs = factors_;
    for (auto& f : fs)
        f.scale *= c;
    return build(fs);
}

} // namespace kstab
