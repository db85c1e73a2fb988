#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "gpaley/errors.hpp"
#include "gpaley/numbers.hpp"

namespace gpaley {

/// A field element of GF(p^R), encoded as its rank in the canonical element
/// order (coefficient vectors compared low-degree-first). Ranks double as
/// vertex indices everywhere, so 0 is the zero element.
using Fe = std::uint32_t;

namespace poly {

// Dense polynomials over F_p: coefficient vectors, ascending degree, trimmed.

inline void trim(std::vector<int64_t>& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline std::vector<int64_t> mod(std::vector<int64_t> a, const std::vector<int64_t>& m, int64_t p)
{
    // m is monic
    while (a.size() >= m.size()) {
        int64_t c = a.back();
        std::size_t shift = a.size() - m.size();
        if (c != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        a.pop_back();
    }
    trim(a);
    return a;
}

inline std::vector<int64_t> mulmod(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                                   const std::vector<int64_t>& m, int64_t p)
{
    if (a.empty() || b.empty())
        return {};
    std::vector<int64_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return mod(std::move(r), m, p);
}

inline std::vector<int64_t> powmod(std::vector<int64_t> base, int64_t e,
                                   const std::vector<int64_t>& m, int64_t p)
{
    std::vector<int64_t> r{1};
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<int64_t> sub(std::vector<int64_t> a, const std::vector<int64_t>& b, int64_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

inline std::vector<int64_t> gcd(std::vector<int64_t> a, std::vector<int64_t> b, int64_t p)
{
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        int64_t lc_inv = mod_pow(b.back(), p - 2, p);
        std::vector<int64_t> bm = b;
        for (auto& c : bm)
            c = c * lc_inv % p;
        a = mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

/// Irreducibility of a monic degree-R polynomial over F_p:
/// gcd(x^{p^i} - x, m) = 1 for 0 < i < R, and x^{p^R} = x mod m.
inline bool irreducible(const std::vector<int64_t>& m, int64_t p)
{
    int R = static_cast<int>(m.size()) - 1;
    std::vector<int64_t> x{0, 1};
    std::vector<int64_t> t = mod(x, m, p); // x mod m
    std::vector<int64_t> xr = t;
    for (int i = 1; i <= R; ++i) {
        t = powmod(t, p, m, p); // x^{p^i} mod m
        if (i < R) {
            auto g = gcd(sub(t, xr, p), m, p);
            if (g.size() > 1)
                return false;
        }
    }
    return t == xr;
}

} // namespace poly

/// Exact arithmetic in GF(p^R) = F_p[x]/(m(x)) with a fixed primitive element
/// and a full discrete-log table. The modulus is the lexicographically
/// smallest monic irreducible of degree R and omega the lexicographically
/// smallest generator of the multiplicative group (coefficients compared
/// low-degree-first), so two builds of the same (p, R) agree exactly.
class Field {
public:
    static constexpr int64_t default_max_q = int64_t{1} << 20;

    static Field build(int64_t p, int R, int64_t max_q = default_max_q)
    {
        if (!is_prime(p))
            throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
        if (R < 1)
            throw InvalidParamsError("extension degree R must be >= 1");
        int64_t q = 1;
        for (int i = 0; i < R; ++i) {
            q *= p;
            if (q > max_q)
                throw BoundExceededError("p^R = " + std::to_string(p) + "^" + std::to_string(R) +
                                         " exceeds bound " + std::to_string(max_q));
        }
        return Field(p, R, q);
    }

    int64_t p() const { return p_; }
    int R() const { return R_; }
    int64_t q() const { return q_; }
    Fe zero() const { return 0; }
    Fe one() const { return one_; }
    Fe omega() const { return omega_; }
    /// Modulus coefficients c0..cR (monic, cR = 1).
    const std::vector<int64_t>& modulus() const { return modulus_; }

    /// Coefficients c0..c_{R-1} of the element.
    std::vector<int64_t> coeffs(Fe a) const
    {
        std::vector<int64_t> c(R_);
        for (int i = 0; i < R_; ++i)
            c[i] = (a / place_[i]) % p_;
        return c;
    }

    Fe from_coeffs(const std::vector<int64_t>& c) const
    {
        if (static_cast<int>(c.size()) > R_)
            throw InvalidParamsError("coefficient vector longer than R");
        int64_t v = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int64_t r = ((c[i] % p_) + p_) % p_;
            v += r * place_[i];
        }
        return static_cast<Fe>(v);
    }

    Fe add(Fe a, Fe b) const
    {
        int64_t v = 0;
        for (int i = 0; i < R_; ++i) {
            int64_t ca = (a / place_[i]) % p_;
            int64_t cb = (b / place_[i]) % p_;
            v += ((ca + cb) % p_) * place_[i];
        }
        return static_cast<Fe>(v);
    }

    Fe neg(Fe a) const
    {
        int64_t v = 0;
        for (int i = 0; i < R_; ++i) {
            int64_t ca = (a / place_[i]) % p_;
            v += ((p_ - ca) % p_) * place_[i];
        }
        return static_cast<Fe>(v);
    }

    Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }

    Fe mul(Fe a, Fe b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[(static_cast<int64_t>(dlog_[a]) + dlog_[b]) % (q_ - 1)];
    }

    Fe inv(Fe a) const
    {
        if (a == 0)
            throw DivisionByZeroError("inverse of zero");
        return exp_[(q_ - 1 - dlog_[a]) % (q_ - 1)];
    }

    /// a^n for any integer n (negative n via the inverse).
    Fe pow(Fe a, int64_t n) const
    {
        if (a == 0) {
            if (n > 0)
                return 0;
            if (n == 0)
                return one_;
            throw DivisionByZeroError("negative power of zero");
        }
        int64_t m = q_ - 1;
        int64_t e = ((n % m) + m) % m;
        return exp_[dlog_[a] * e % m];
    }

    /// omega^e for any integer e.
    Fe exp(int64_t e) const
    {
        int64_t m = q_ - 1;
        return exp_[((e % m) + m) % m];
    }

    int64_t discrete_log(Fe a) const
    {
        if (a == 0)
            throw ZeroArgumentError("discrete log of zero");
        return dlog_[a];
    }

    /// Frobenius map a -> a^p; iterated R times it is the identity.
    Fe frobenius(Fe a) const
    {
        if (a == 0)
            return 0;
        return exp_[dlog_[a] * p_ % (q_ - 1)];
    }

    /// The subfield GF(p^a) inside GF(p^R) for a | R:
    /// {0} together with the order-(p^a - 1) subgroup of the multiplicative
    /// group; returned sorted in canonical element order.
    std::vector<Fe> subfield_elements(int a) const
    {
        if (a < 1 || R_ % a != 0)
            throw NotADivisorError("a = " + std::to_string(a) + " does not divide R = " +
                                   std::to_string(R_));
        int64_t sub_q = 1;
        for (int i = 0; i < a; ++i)
            sub_q *= p_;
        std::vector<Fe> out;
        out.reserve(sub_q);
        out.push_back(0);
        int64_t step = (q_ - 1) / (sub_q - 1);
        for (int64_t i = 0; i < sub_q - 1; ++i)
            out.push_back(exp_[i * step]);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const Field& o) const
    {
        return p_ == o.p_ && R_ == o.R_ && modulus_ == o.modulus_ && omega_ == o.omega_;
    }

private:
    Field(int64_t p, int R, int64_t q) : p_(p), R_(R), q_(q)
    {
        place_.resize(R_);
        place_[R_ - 1] = 1;
        for (int i = R_ - 2; i >= 0; --i)
            place_[i] = place_[i + 1] * p_;
        one_ = static_cast<Fe>(place_[0]);

        choose_modulus();
        choose_omega_and_tables();
    }

    // Smallest monic irreducible of degree R, coefficient vectors compared
    // low-degree-first. Element ranks use the same comparison, so scanning
    // ranks ascending scans candidates in order.
    void choose_modulus()
    {
        for (int64_t idx = 0;; ++idx) {
            std::vector<int64_t> m(R_ + 1);
            for (int i = 0; i < R_; ++i)
                m[i] = (idx / place_[i]) % p_;
            m[R_] = 1;
            if (poly::irreducible(m, p_)) {
                modulus_ = std::move(m);
                return;
            }
        }
    }

    std::vector<int64_t> elem_poly(Fe a) const
    {
        auto c = coeffs(a);
        poly::trim(c);
        return c;
    }

    Fe encode_poly(const std::vector<int64_t>& c) const
    {
        int64_t v = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            v += c[i] * place_[i];
        return static_cast<Fe>(v);
    }

    void choose_omega_and_tables()
    {
        auto prim = prime_factors(q_ - 1);
        std::vector<int64_t> one_poly{1};
        Fe omega = 0;
        for (int64_t idx = 1; idx < q_; ++idx) {
            auto e = elem_poly(static_cast<Fe>(idx));
            bool ok = true;
            for (int64_t t : prim) {
                if (poly::powmod(e, (q_ - 1) / t, modulus_, p_) == one_poly) {
                    ok = false;
                    break;
                }
            }
            if (ok && poly::powmod(e, q_ - 1, modulus_, p_) == one_poly) {
                omega = static_cast<Fe>(idx);
                break;
            }
        }
        if (omega == 0)
            throw Error("internal: no primitive element found"); // unreachable for prime p
        omega_ = omega;

        exp_.assign(q_ - 1, 0);
        dlog_.assign(q_, -1);
        auto w = elem_poly(omega_);
        std::vector<int64_t> cur{1};
        for (int64_t i = 0; i < q_ - 1; ++i) {
            Fe v = encode_poly(cur);
            exp_[i] = v;
            dlog_[v] = i;
            cur = poly::mulmod(cur, w, modulus_, p_);
        }
        if (encode_poly(cur) != one_)
            throw Error("internal: omega order defect"); // unreachable
    }

    int64_t p_;
    int R_;
    int64_t q_;
    std::vector<int64_t> place_; // place_[i] = p^(R-1-i); c0 is the most significant digit
    Fe one_ = 0;
    Fe omega_ = 0;
    std::vector<int64_t> modulus_;
    std::vector<Fe> exp_;       // exp_[i] = omega^i
    std::vector<int64_t> dlog_; // dlog_[exp_[i]] = i, dlog_[0] = -1
};

} // namespace gpaley
