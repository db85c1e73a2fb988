#pragma once

#include <cstdint>
#include <vector>

#include "gpaley/errors.hpp"

namespace gpaley {

/// A permutation of [0, n) stored as its image array. Composition is
/// left-to-right: a.then(b) applies a first.
struct Perm {
    std::vector<std::int32_t> img;

    Perm() = default;
    explicit Perm(std::vector<std::int32_t> images) : img(std::move(images)) {}

    static Perm identity(int n)
    {
        Perm p;
        p.img.resize(n);
        for (int i = 0; i < n; ++i)
            p.img[i] = i;
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int v) const { return img[v]; }

    bool is_identity() const
    {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i)
                return false;
        return true;
    }

    Perm then(const Perm& b) const
    {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i)
            r.img[i] = b.img[img[i]];
        return r;
    }

    Perm inverse() const
    {
        Perm r;
        r.img.resize(img.size());
        for (std::size_t i = 0; i < img.size(); ++i)
            r.img[img[i]] = static_cast<std::int32_t>(i);
        return r;
    }

    /// Smallest moved point, or -1 for the identity.
    int first_moved() const
    {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i)
                return i;
        return -1;
    }

    bool is_valid() const
    {
        std::vector<char> seen(img.size(), 0);
        for (std::int32_t v : img) {
            if (v < 0 || v >= degree() || seen[v])
                return false;
            seen[v] = 1;
        }
        return true;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator!=(const Perm& o) const { return img != o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

} // namespace gpaley
