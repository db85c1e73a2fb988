#pragma once

#include <vector>

#include "gpaley/finite_field.hpp"
#include "gpaley/perm_group.hpp"

// Concrete permutation groups on the field, acting on vertices in canonical
// element order: the translation group T, the one-dimensional affine
// semilinear group AGammaL(1,q) = T x| <w^, alpha>, the arc-transitive
// subgroup T x| <w^k, alpha> of a generalised Paley graph, and S_a wr S_b in
// product action.

namespace gpaley {

inline Perm translation_map(const Field& f, Fe t)
{
    Perm p;
    p.img.resize(f.q());
    for (int64_t v = 0; v < f.q(); ++v)
        p.img[v] = static_cast<std::int32_t>(f.add(static_cast<Fe>(v), t));
    return p;
}

inline Perm scalar_map(const Field& f, Fe s)
{
    if (s == 0)
        throw ZeroArgumentError("scalar map by zero is not a permutation");
    Perm p;
    p.img.resize(f.q());
    for (int64_t v = 0; v < f.q(); ++v)
        p.img[v] = static_cast<std::int32_t>(f.mul(static_cast<Fe>(v), s));
    return p;
}

inline Perm frobenius_map(const Field& f)
{
    Perm p;
    p.img.resize(f.q());
    for (int64_t v = 0; v < f.q(); ++v)
        p.img[v] = static_cast<std::int32_t>(f.frobenius(static_cast<Fe>(v)));
    return p;
}

/// One translation per F_p-basis element x^j; regular of order q.
inline PermutationGroup translations(const Field& f)
{
    std::vector<Perm> gens;
    for (int j = 0; j < f.R(); ++j) {
        std::vector<int64_t> c(j + 1, 0);
        c[j] = 1;
        gens.push_back(translation_map(f, f.from_coeffs(c)));
    }
    return PermutationGroup(static_cast<int>(f.q()), std::move(gens));
}

/// AGammaL(1,q) = T x| <w^, alpha>, order q(q-1)R.
inline PermutationGroup agl_one(const Field& f)
{
    PermutationGroup t = translations(f);
    std::vector<Perm> gens = t.generators();
    if (f.q() > 2)
        gens.push_back(scalar_map(f, f.omega()));
    if (f.R() > 1)
        gens.push_back(frobenius_map(f));
    return PermutationGroup(static_cast<int>(f.q()), std::move(gens));
}

/// T x| <w^k, alpha>: the arc-transitive automorphism subgroup of
/// GPaley(q,(q-1)/k). Its order q * (q-1)/k * R is asserted.
inline PermutationGroup affine_generators(const Field& f, int64_t k)
{
    if (k < 1 || (f.q() - 1) % k != 0)
        throw InvalidParamsError("k must divide q-1");
    std::vector<Perm> gens = translations(f).generators();
    if (f.exp(k) != f.one())
        gens.push_back(scalar_map(f, f.exp(k)));
    if (f.R() > 1)
        gens.push_back(frobenius_map(f));
    PermutationGroup g(static_cast<int>(f.q()), std::move(gens));
    BigInt expect = BigInt(f.q()) * ((f.q() - 1) / k) * f.R();
    if (g.order() != expect)
        throw CheckFailedError("affine subgroup order differs from q*(q-1)/k*R");
    return g;
}

/// S_a wr S_b in product action on b-tuples over {0..a-1}, tuples indexed in
/// lexicographic order (matching Graph::hamming). Order (a!)^b * b!.
inline PermutationGroup wreath_product_action(int a, int b, int64_t max_degree = int64_t{1} << 20)
{
    if (a < 2 || b < 1)
        throw InvalidParamsError("wreath product needs a >= 2, b >= 1");
    int64_t n = 1;
    std::vector<int64_t> place(b);
    for (int j = b - 1; j >= 0; --j) {
        place[j] = n;
        n *= a;
        if (n > max_degree)
            throw BoundExceededError("a^b exceeds degree bound");
    }
    auto digit = [&](int64_t v, int j) { return (v / place[j]) % a; };

    std::vector<Perm> gens;
    // S_a on coordinate 0: transposition (0 1) and the full a-cycle
    {
        Perm swap01, cyc;
        swap01.img.resize(n);
        cyc.img.resize(n);
        for (int64_t v = 0; v < n; ++v) {
            int64_t d = digit(v, 0);
            int64_t sd = d == 0 ? 1 : d == 1 ? 0 : d;
            int64_t cd = (d + 1) % a;
            swap01.img[v] = static_cast<std::int32_t>(v + (sd - d) * place[0]);
            cyc.img[v] = static_cast<std::int32_t>(v + (cd - d) * place[0]);
        }
        gens.push_back(std::move(cyc));
        if (a > 2)
            gens.push_back(std::move(swap01));
    }
    // S_b on coordinates: swap of coordinates 0,1 and the full b-cycle
    if (b > 1) {
        Perm swapc, cycc;
        swapc.img.resize(n);
        cycc.img.resize(n);
        for (int64_t v = 0; v < n; ++v) {
            int64_t sw = 0, cy = 0;
            for (int j = 0; j < b; ++j) {
                int64_t d = digit(v, j);
                int js = j == 0 ? 1 : j == 1 ? 0 : j;
                int jc = (j + 1) % b;
                sw += d * place[js];
                cy += d * place[jc];
            }
            swapc.img[v] = static_cast<std::int32_t>(sw);
            cycc.img[v] = static_cast<std::int32_t>(cy);
        }
        gens.push_back(std::move(cycc));
        if (b > 2)
            gens.push_back(std::move(swapc));
    }
    return PermutationGroup(static_cast<int>(n), std::move(gens));
}

inline BigInt factorial_big(int64_t n)
{
    BigInt f = 1;
    for (int64_t i = 2; i <= n; ++i)
        f *= static_cast<long>(i);
    return f;
}

/// (a!)^b * b!, the order of S_a wr S_b.
inline BigInt wreath_order(int64_t a, int64_t b)
{
    BigInt fa = factorial_big(a);
    BigInt r = 1;
    for (int64_t i = 0; i < b; ++i)
        r *= fa;
    return r * factorial_big(b);
}

} // namespace gpaley
