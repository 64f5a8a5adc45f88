#include "kstab/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab {

namespace {

Polynomial content_normalized(const Polynomial& p) {
    if (p.is_zero())
        return p;
    Rational c = p.content();
    if (c == Rational(1))
        return p;
    return c.reciprocal() * p;
}

// Removes the factor (x - r); r must be a root.
Polynomial deflate(const Polynomial& p, const Rational& r) {
    auto [q, rem] = Polynomial::divmod(p, Polynomial::affine(-r, Rational(1)));
    if (!rem.is_zero())
        throw std::logic_error("deflation at a non-root");
    return q;
}

} // namespace

SturmChain::SturmChain(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    seq_.push_back(content_normalized(p));
    Polynomial d = p.derivative();
    if (d.is_zero())
        return;
    seq_.push_back(content_normalized(d));
    while (true) {
        const Polynomial& a = seq_[seq_.size() - 2];
        const Polynomial& b = seq_.back();
        Polynomial r = Polynomial::divmod(a, b).second;
        if (r.is_zero())
            break;
        seq_.push_back(content_normalized(-r));
    }
}

int SturmChain::variations(const Rational& x) const {
    int count = 0, prev = 0;
    for (const auto& q : seq_) {
        int s = q(x).sign();
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++count;
        prev = s;
    }
    return count;
}

int sturm_count(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero())
        throw std::invalid_argument("root count of the zero polynomial");
    if (!(a < b))
        throw std::invalid_argument("root-counting interval out of order");
    Polynomial q = p.square_free_part();
    int count = 0;
    if (q(a).is_zero())
        q = deflate(q, a);  // a root at the left endpoint is excluded from (a, b]
    if (!q.is_zero() && q(b).is_zero()) {
        ++count;
        q = deflate(q, b);
    }
    if (q.is_zero() || q.degree() <= 0)
        return count;
    SturmChain chain(q);
    count += chain.variations(a) - chain.variations(b);
    return count;
}

bool is_positive_on(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero())
        throw std::invalid_argument("positivity of the zero polynomial");
    if (!(a < b))
        throw std::invalid_argument("positivity interval out of order");
    int interior = sturm_count(p, a, b);
    if (p(b).is_zero())
        --interior;  // (a, b] counted the endpoint; the open interval must not
    if (interior > 0)
        return false;
    return p((a + b) / Rational(2)).sign() > 0;
}

std::vector<RootBracket> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b) {
    if (p.is_zero())
        throw std::invalid_argument("root isolation of the zero polynomial");
    if (!(a < b))
        throw std::invalid_argument("isolation interval out of order");

    Polynomial q = p.square_free_part();
    if (q(a).is_zero())
        q = deflate(q, a);
    if (!q.is_zero() && q(b).is_zero())
        q = deflate(q, b);

    // Midpoints that land exactly on a root are recorded and deflated away,
    // so the subdivision below never splits at a zero of q.
    std::vector<Rational> hits;
    bool deflated = true;
    while (deflated && q.degree() > 0) {
        deflated = false;
        SturmChain chain(q);
        std::vector<std::pair<Rational, Rational>> stack{{a, b}};
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            int n = chain.variations(lo) - chain.variations(hi);
            if (n <= 0)
                continue;
            Rational mid = (lo + hi) / Rational(2);
            if (q(mid).is_zero()) {
                hits.push_back(mid);
                q = deflate(q, mid);
                deflated = true;
                break;
            }
            if (n == 1)
                continue;  // isolated; emitted in the pass below
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
    }

    std::vector<RootBracket> out;
    if (q.degree() > 0) {
        SturmChain chain(q);
        struct Frame { Rational lo, hi; int vlo, vhi; };
        std::vector<Frame> frames{{a, b, chain.variations(a), chain.variations(b)}};
        while (!frames.empty()) {
            Frame f = frames.back();
            frames.pop_back();
            int n = f.vlo - f.vhi;
            if (n <= 0)
                continue;
            if (n == 1) {
                out.push_back({f.lo, f.hi, false});
                continue;
            }
            Rational mid = (f.lo + f.hi) / Rational(2);
            int vmid = chain.variations(mid);
            frames.push_back({f.lo, mid, f.vlo, vmid});
            frames.push_back({mid, f.hi, vmid, f.vhi});
        }

        // A bracket may still straddle a deflated exact root; shrink it to
        // the side holding the remaining sign-change root so every returned
        // interval isolates exactly one root of the input polynomial.
        for (auto& br : out) {
            for (const auto& e : hits) {
                if (br.low < e && e < br.high) {
                    if (chain.variations(br.low) - chain.variations(e) == 1)
                        br.high = e;
                    else
                        br.low = e;
                }
            }
        }
    }

    for (const auto& e : hits)
        out.push_back({e, e, true});
    std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) {
        return x.approx() < y.approx();
    });
    return out;
}

std::vector<RootBracket> isolate_and_refine(const Polynomial& p, const Rational& a,
                                            const Rational& b, const Rational& precision) {
    if (!(precision > Rational(0)))
        throw std::invalid_argument("precision must be positive");
    auto brackets = isolate_roots(p, a, b);

    // square-free part with endpoint roots and exact hits divided out: it
    // changes sign across every remaining bracket
    Polynomial q = p.square_free_part();
    if (q(a).is_zero())
        q = deflate(q, a);
    if (q.degree() > 0 && q(b).is_zero())
        q = deflate(q, b);
    for (const auto& br : brackets)
        if (br.exact)
            q = deflate(q, br.low);

    auto refine_one = [&q](RootBracket& br, const Rational& prec) {
        if (!br.exact)
            br = refine_bracket(q, br.low, br.high, prec);
    };
    for (auto& br : brackets)
        refine_one(br, precision);

    // pull bracket edges off the interval ends; the enclosed root is
    // strictly inside (a, b), so enough bisection steps always succeed
    for (auto& br : brackets) {
        Rational prec = precision;
        while (!br.exact && (br.low == a || br.high == b)) {
            prec = prec / Rational(4);
            refine_one(br, prec);
        }
    }
    // open a strict gap between adjacent brackets (an edge may coincide
    // with a formerly deflated exact root)
    for (size_t i = 0; i + 1 < brackets.size(); ++i) {
        Rational prec = precision;
        while (!(brackets[i].high < brackets[i + 1].low)) {
            prec = prec / Rational(4);
            refine_one(brackets[i], prec);
            refine_one(brackets[i + 1], prec);
        }
    }
    return brackets;
}

RootBracket refine_bracket(const Polynomial& p, const Rational& low, const Rational& high,
                           const Rational& precision) {
    if (!(precision > Rational(0)))
        throw std::invalid_argument("precision must be positive");
    if (!(low < high))
        throw std::invalid_argument("bracket out of order");
    int sa = p(low).sign();
    int sb = p(high).sign();
    if (sa == 0 || sb == 0 || sa == sb)
        throw std::invalid_argument("bracket exhibits no sign change");
    Rational lo = low, hi = high;
    while (hi - lo >= precision) {
        Rational mid = (lo + hi) / Rational(2);
        int sm = p(mid).sign();
        if (sm == 0)
            return {mid, mid, true};
        if (sm == sa)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi, false};
}

Rational refine_root(const Polynomial& p, const IsolatingInterval& bracket,
                     const Rational& precision) {
    return refine_bracket(p, bracket.low, bracket.high, precision).approx();
}

} // namespace kstab
