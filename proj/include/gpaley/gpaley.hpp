#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpaley/finite_field.hpp"
#include "gpaley/graph.hpp"
#include "gpaley/isomorphism.hpp"
#include "gpaley/numbers.hpp"

// Generalised Paley graphs GPaley(q, (q-1)/k): parameter validation, the
// connection subgroup S = <omega^k>, the connectivity criterion, subfield
// decomposition of the disconnected case, Hamming recognition with the
// explicit tuple isomorphism, and the resulting trichotomy classification.

namespace gpaley {

struct GPaleyParams {
    Field field;
    int64_t k;

    /// Validates: k >= 2, k | q-1, and (q-1)/k even when q is odd. The thrown
    /// diagnostic names the violated condition.
    static GPaleyParams make(Field f, int64_t k)
    {
        if (k < 2)
            throw InvalidParamsError("k must be at least 2 (k = " + std::to_string(k) + ")");
        if ((f.q() - 1) % k != 0)
            throw InvalidParamsError("k must divide q-1 (k = " + std::to_string(k) +
                                     ", q-1 = " + std::to_string(f.q() - 1) + ")");
        if (f.q() % 2 == 1 && ((f.q() - 1) / k) % 2 != 0)
            throw InvalidParamsError("parity: (q-1)/k must be even when q is odd ((q-1)/k = " +
                                     std::to_string((f.q() - 1) / k) + ")");
        return GPaleyParams{std::move(f), k};
    }

    int64_t p() const { return field.p(); }
    int R() const { return field.R(); }
    int64_t q() const { return field.q(); }
    int64_t valency() const { return (field.q() - 1) / k; }
};

/// Divisors k of q-1 that satisfy the parity condition, ascending.
inline std::vector<int64_t> valid_k_values(int64_t q)
{
    std::vector<int64_t> out;
    for (int64_t k : divisors(q - 1))
        if (k >= 2 && (q % 2 == 0 || ((q - 1) / k) % 2 == 0))
            out.push_back(k);
    return out;
}

/// S = <omega^k>, the multiplicative subgroup of order (q-1)/k.
inline std::vector<Fe> connecting_set(const GPaleyParams& params)
{
    const Field& f = params.field;
    std::vector<Fe> s;
    s.reserve(params.valency());
    for (int64_t i = 0; i < params.valency(); ++i)
        s.push_back(f.exp(i * params.k));
    return s;
}

inline Graph build_graph(const GPaleyParams& params)
{
    return Graph::cayley(params.field, connecting_set(params));
}

/// Connectivity by pure arithmetic: connected iff k is not a multiple of
/// (q-1)/(p^a - 1) for any proper divisor a of R.
inline bool is_connected_by_criterion(const GPaleyParams& params)
{
    int64_t q = params.q();
    for (int64_t a : proper_divisors(params.R())) {
        int64_t subgroup_index = (q - 1) / (ipow(params.p(), a) - 1);
        if (params.k % subgroup_index == 0)
            return false;
    }
    return true;
}

namespace detail {

/// Row-echelon basis over F_p for incremental span computation on coefficient
/// vectors.
class FpSpan {
public:
    FpSpan(int64_t p, int dim) : p_(p), dim_(dim) {}

    /// Reduces v against the basis; returns the residual.
    std::vector<int64_t> reduce(std::vector<int64_t> v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int piv = pivot_[r];
            if (v[piv] != 0) {
                int64_t c = v[piv];
                for (int i = 0; i < dim_; ++i)
                    v[i] = ((v[i] - c * rows_[r][i]) % p_ + p_) % p_;
            }
        }
        return v;
    }

    bool contains(const std::vector<int64_t>& v) const
    {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](int64_t c) { return c == 0; });
    }

    /// Returns true if v extended the span.
    bool insert(std::vector<int64_t> v)
    {
        v = reduce(std::move(v));
        int piv = -1;
        for (int i = 0; i < dim_; ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return false;
        int64_t inv = mod_pow(v[piv], p_ - 2, p_);
        for (auto& c : v)
            c = c * inv % p_;
        rows_.push_back(std::move(v));
        pivot_.push_back(piv);
        return true;
    }

    int dimension() const { return static_cast<int>(rows_.size()); }

private:
    int64_t p_;
    int dim_;
    std::vector<std::vector<int64_t>> rows_;
    std::vector<int> pivot_;
};

} // namespace detail

/// Degree a of the subfield generated (as F_p-span) by the connecting set:
/// computes the span by Gaussian elimination, verifies it is multiplicatively
/// closed, and cross-checks against the arithmetic shortcut
/// a = min{a' | R : (q-1)/k divides p^a' - 1}. Disagreement would mean a
/// field-arithmetic bug.
inline int span_field_degree(const GPaleyParams& params)
{
    const Field& f = params.field;
    auto s = connecting_set(params);

    detail::FpSpan span(f.p(), f.R());
    std::vector<Fe> basis_elems;
    for (Fe e : s)
        if (span.insert(f.coeffs(e)))
            basis_elems.push_back(e);
    int a = span.dimension();

    for (Fe x : basis_elems)
        for (Fe y : basis_elems)
            if (!span.contains(f.coeffs(f.mul(x, y))))
                throw SpanNotSubfieldError("span of the connecting set is not closed under "
                                           "multiplication");

    int64_t valency = params.valency();
    int a_shortcut = -1;
    for (int64_t d : divisors(f.R()))
        if ((ipow(f.p(), d) - 1) % valency == 0) {
            a_shortcut = static_cast<int>(d);
            break;
        }
    if (a != a_shortcut)
        throw SpanNotSubfieldError("span dimension " + std::to_string(a) +
                                   " disagrees with arithmetic shortcut " +
                                   std::to_string(a_shortcut));
    return a;
}

struct Decomposition {
    int a;
    int64_t k_prime;
    int64_t component_count;
    Graph component;                        // Gamma_0, induced on the subfield
    std::vector<std::vector<int>> components;
    std::optional<std::vector<int>> component_isomorphism; // onto the reference GPaley(p^a, ...)
};

/// Theorem structure of the disconnected case: p^{R-a} components, the one
/// through 0 living on the subfield GF(p^a) and isomorphic to
/// GPaley(p^a, (p^a-1)/k') with k' = (p^a-1)k/(q-1); k' = 1 gives K_{p^a}.
inline Decomposition decompose(const GPaleyParams& params)
{
    if (is_connected_by_criterion(params))
        throw IsConnectedError("graph is connected; nothing to decompose");
    const Field& f = params.field;
    int a = span_field_degree(params);
    int64_t sub_q = ipow(f.p(), a);
    int64_t k_prime = (sub_q - 1) * params.k / (f.q() - 1);
    int64_t count = ipow(f.p(), f.R() - a);

    Graph g = build_graph(params);
    auto comps = g.connected_components();
    if (static_cast<int64_t>(comps.size()) != count)
        throw CheckFailedError("component count " + std::to_string(comps.size()) +
                               " differs from predicted " + std::to_string(count));
    auto subfield = f.subfield_elements(a);
    std::vector<int> subfield_vertices(subfield.begin(), subfield.end());
    if (std::vector<int>(comps[0].begin(), comps[0].end()) != subfield_vertices)
        throw CheckFailedError("component of 0 is not the subfield GF(p^a)");
    for (const auto& c : comps)
        if (static_cast<int64_t>(c.size()) != sub_q)
            throw CheckFailedError("component sizes are not all p^a");

    Graph gamma0 = g.induced_subgraph(subfield_vertices);

    Decomposition d{a, k_prime, count, std::move(gamma0), std::move(comps), std::nullopt};

    // reference component built over a freshly constructed GF(p^a)
    Field sub = Field::build(f.p(), a);
    Graph reference = k_prime == 1
                          ? Graph::complete(static_cast<int>(sub_q))
                          : build_graph(GPaleyParams::make(std::move(sub), k_prime));
    if (sub_q <= 256) {
        d.component_isomorphism = is_isomorphic(d.component, reference);
        if (!d.component_isomorphism)
            throw CheckFailedError("component is not isomorphic to GPaley(p^a,(p^a-1)/k')");
    } else if (d.component.n() != reference.n() ||
               d.component.edge_count() != reference.edge_count()) {
        throw CheckFailedError("component size/edge count differ from the subfield GPaley");
    }
    return d;
}

/// The unique proper divisor a of R with k = a(q-1)/(R(p^a-1)), plus b = R/a,
/// when it exists.
inline std::optional<std::pair<int, int>> hamming_parameters(const GPaleyParams& params)
{
    std::optional<std::pair<int, int>> found;
    for (int64_t a : proper_divisors(params.R())) {
        if (params.k * params.R() * (ipow(params.p(), a) - 1) == a * (params.q() - 1)) {
            if (found)
                throw CheckFailedError("two divisors satisfy the Hamming parameter equation");
            found = {static_cast<int>(a), static_cast<int>(params.R() / a)};
        }
    }
    return found;
}

/// The explicit isomorphism Theta onto H(p^a, b): coordinates of each vertex
/// with respect to the GF(p^a)-basis {1, omega^k, ..., omega^{(b-1)k}},
/// computed by a linear solve over F_p. theta[v] is the Hamming vertex index
/// (tuple read most-significant-first); symbol i of a coordinate is the i-th
/// subfield element in canonical order.
struct HammingIso {
    int a, b;
    int64_t alphabet;            // p^a
    std::vector<Fe> basis;       // omega^{jk}
    std::vector<Fe> subfield;    // sorted; tuple symbols index into this
    std::vector<int64_t> theta;  // vertex -> Hamming vertex

    std::vector<int> tuple(int64_t hamming_vertex) const
    {
        std::vector<int> t(b);
        for (int j = b - 1; j >= 0; --j) {
            t[j] = static_cast<int>(hamming_vertex % alphabet);
            hamming_vertex /= alphabet;
        }
        return t;
    }

    int tuple_weight(int64_t hamming_vertex) const
    {
        int w = 0;
        for (int v : tuple(hamming_vertex))
            if (v != 0)
                ++w;
        return w;
    }
};

inline HammingIso hamming_isomorphism(const GPaleyParams& params)
{
    auto hp = hamming_parameters(params);
    if (!hp)
        throw NotHammingError("parameters do not satisfy the Hamming equation");
    auto [a, b] = *hp;
    const Field& f = params.field;
    int R = f.R();
    int64_t p = f.p();
    int64_t sub_q = ipow(p, a);

    HammingIso iso;
    iso.a = a;
    iso.b = b;
    iso.alphabet = sub_q;
    iso.subfield = f.subfield_elements(a);
    Fe sub_gen = f.exp((f.q() - 1) / (sub_q - 1));
    for (int j = 0; j < b; ++j)
        iso.basis.push_back(f.exp(static_cast<int64_t>(j) * params.k));

    // columns of M: F_p-coordinates of sub_gen^t * omega^{jk}
    std::vector<std::vector<int64_t>> m(R, std::vector<int64_t>(R));
    std::vector<Fe> sub_powers(a);
    for (int t = 0; t < a; ++t)
        sub_powers[t] = f.pow(sub_gen, t);
    for (int j = 0; j < b; ++j)
        for (int t = 0; t < a; ++t) {
            auto col = f.coeffs(f.mul(iso.basis[j], sub_powers[t]));
            for (int r = 0; r < R; ++r)
                m[r][j * a + t] = col[r];
        }

    // invert M over F_p (Gauss-Jordan)
    std::vector<std::vector<int64_t>> inv(R, std::vector<int64_t>(R, 0));
    for (int i = 0; i < R; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < R; ++col) {
        int piv = -1;
        for (int r = col; r < R; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            throw SingularBasisError("basis matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        int64_t c = mod_pow(m[col][col], p - 2, p);
        for (int i = 0; i < R; ++i) {
            m[col][i] = m[col][i] * c % p;
            inv[col][i] = inv[col][i] * c % p;
        }
        for (int r = 0; r < R; ++r)
            if (r != col && m[r][col] != 0) {
                int64_t factor = m[r][col];
                for (int i = 0; i < R; ++i) {
                    m[r][i] = ((m[r][i] - factor * m[col][i]) % p + p) % p;
                    inv[r][i] = ((inv[r][i] - factor * inv[col][i]) % p + p) % p;
                }
            }
    }

    // symbol index of each subfield element
    std::vector<int> symbol_of(f.q(), -1);
    for (std::size_t i = 0; i < iso.subfield.size(); ++i)
        symbol_of[iso.subfield[i]] = static_cast<int>(i);

    std::vector<int64_t> hamming_place(b);
    hamming_place[b - 1] = 1;
    for (int j = b - 2; j >= 0; --j)
        hamming_place[j] = hamming_place[j + 1] * sub_q;

    iso.theta.resize(f.q());
    std::vector<char> hit(f.q(), 0);
    for (int64_t v = 0; v < f.q(); ++v) {
        auto d = f.coeffs(static_cast<Fe>(v));
        int64_t hv = 0;
        for (int j = 0; j < b; ++j) {
            // mu_j = sum_t coeff[(j,t)] * sub_gen^t
            Fe mu = 0;
            for (int t = 0; t < a; ++t) {
                int64_t c = 0;
                for (int r = 0; r < R; ++r)
                    c = (c + inv[j * a + t][r] * d[r]) % p;
                if (c != 0)
                    mu = f.add(mu, f.mul(f.from_coeffs({c}), sub_powers[t]));
            }
            int sym = symbol_of[mu];
            if (sym < 0)
                throw SingularBasisError("solved coordinate is not in the subfield");
            hv += sym * hamming_place[j];
        }
        iso.theta[v] = hv;
        if (hit[hv])
            throw SingularBasisError("theta is not injective");
        hit[hv] = 1;
    }

    // Theta(S) must be exactly the weight-one tuples
    auto s = connecting_set(params);
    for (Fe e : s)
        if (iso.tuple_weight(iso.theta[e]) != 1)
            throw CheckFailedError("theta image of a connecting-set element has weight != 1");
    if (static_cast<int64_t>(s.size()) != static_cast<int64_t>(b) * (sub_q - 1))
        throw CheckFailedError("connecting set size differs from b(p^a - 1)");

    // edges map onto Hamming edges: endpoints differ in exactly one coordinate
    Graph g = build_graph(params);
    for (int v = 0; v < g.n(); ++v) {
        bool ok = true;
        g.for_each_neighbor(v, [&](int u) {
            if (u > v) {
                auto tu = iso.tuple(iso.theta[u]);
                auto tv = iso.tuple(iso.theta[v]);
                int diff = 0;
                for (int j = 0; j < b; ++j)
                    if (tu[j] != tv[j])
                        ++diff;
                if (diff != 1)
                    ok = false;
            }
        });
        if (!ok)
            throw CheckFailedError("theta does not carry an edge to a Hamming edge");
    }
    return iso;
}

enum class Variant { Disconnected, Hamming, ConnectedNonHamming };

inline const char* variant_name(Variant v)
{
    switch (v) {
    case Variant::Disconnected:
        return "Disconnected";
    case Variant::Hamming:
        return "Hamming";
    default:
        return "ConnectedNonHamming";
    }
}

struct Classification {
    Variant variant;
    std::optional<int> a, b;                // Hamming / Disconnected subfield degree
    std::optional<int64_t> k_prime;         // Disconnected only
    std::optional<int64_t> component_count; // Disconnected only
    bool one_dim_affine_case = false;       // k | p-1
};

/// The Theorem trichotomy, by pure arithmetic (no graph is built, so this
/// scales past graph-buildable q). Certificate verification is done
/// separately by decompose / hamming_isomorphism / the theorem harness.
inline Classification classify(const GPaleyParams& params)
{
    Classification c;
    c.one_dim_affine_case = (params.p() - 1) % params.k == 0;
    bool connected = is_connected_by_criterion(params);
    auto hp = hamming_parameters(params);
    if (!connected) {
        if (hp)
            throw CheckFailedError("Hamming parameters coexist with disconnectedness");
        int64_t q = params.q();
        int found = -1;
        for (int64_t a : proper_divisors(params.R()))
            if (params.k % ((q - 1) / (ipow(params.p(), a) - 1)) == 0) {
                found = static_cast<int>(a);
                break; // smallest divisor = the span subfield degree
            }
        c.variant = Variant::Disconnected;
        c.a = found;
        c.k_prime = (ipow(params.p(), found) - 1) * params.k / (q - 1);
        c.component_count = ipow(params.p(), params.R() - found);
    } else if (hp) {
        c.variant = Variant::Hamming;
        c.a = hp->first;
        c.b = hp->second;
    } else {
        c.variant = Variant::ConnectedNonHamming;
    }
    return c;
}

} // namespace gpaley
