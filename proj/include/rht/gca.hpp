#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rht/rational.hpp"

namespace rht {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Generator {
    std::string name;
    int degree = 0;  // >= 1
    bool odd() const { return degree % 2 != 0; }
};

// A factor is (generator id, exponent); ids are positions in the algebra's
// canonical (degree, declaration) order. Factors are kept sorted by id.
struct Monomial {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> f;

    bool is_unit() const { return f.empty(); }
    std::size_t length() const {
        std::size_t n = 0;
        for (auto& [g, e] : f) n += e;
        return n;
    }
    auto operator<=>(const Monomial& o) const = default;
};

using Poly = std::map<Monomial, Rat>;

inline Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (auto& [m, c] : b) {
        auto it = r.find(m);
        if (it == r.end()) {
            r.emplace(m, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) r.erase(it);
        }
    }
    return r;
}

inline Poly operator*(const Rat& s, const Poly& p) {
    if (is_zero(s)) return {};
    Poly r;
    for (auto& [m, c] : p) r.emplace(m, s * c);
    return r;
}

inline Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

inline bool is_zero(const Poly& p) { return p.empty(); }

inline Poly mono_poly(Monomial m, Rat c = 1) {
    Poly p;
    if (!is_zero(c)) p.emplace(std::move(m), std::move(c));
    return p;
}

inline Poly unit_poly(Rat c = 1) { return mono_poly(Monomial{}, std::move(c)); }

// Free graded-commutative algebra on finitely many generators of degree >= 1.
// Generator order is (degree, declaration order); all normal forms, bases and
// downstream matrix orderings derive from it.
class FreeGCA {
  public:
    FreeGCA() = default;

    explicit FreeGCA(std::vector<Generator> gens_in_decl_order) {
        std::vector<std::size_t> perm(gens_in_decl_order.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
            return gens_in_decl_order[a].degree < gens_in_decl_order[b].degree;
        });
        gens_.reserve(perm.size());
        decl_of_id_.resize(perm.size());
        for (std::size_t id = 0; id < perm.size(); ++id) {
            const auto& g = gens_in_decl_order[perm[id]];
            if (g.degree < 1) throw input_error("generator '" + g.name + "' must have degree >= 1");
            if (name_to_id_.count(g.name))
                throw input_error("duplicate generator name '" + g.name + "'");
            name_to_id_[g.name] = static_cast<std::uint32_t>(id);
            decl_of_id_[id] = perm[id];
            gens_.push_back(g);
        }
    }

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::uint32_t id) const { return gens_[id]; }
    const std::vector<Generator>& gens() const { return gens_; }
    std::size_t decl_index(std::uint32_t id) const { return decl_of_id_[id]; }

    std::optional<std::uint32_t> find(const std::string& name) const {
        auto it = name_to_id_.find(name);
        if (it == name_to_id_.end()) return std::nullopt;
        return it->second;
    }
    std::uint32_t id_of(const std::string& name) const {
        auto id = find(name);
        if (!id) throw input_error("unknown generator '" + name + "'");
        return *id;
    }

    Monomial gen_mono(std::uint32_t id, std::uint32_t e = 1) const {
        Monomial m;
        if (e > 0) m.f.push_back({id, e});
        return m;
    }
    Poly gen_poly(std::uint32_t id) const { return mono_poly(gen_mono(id)); }

    int degree(const Monomial& m) const {
        int d = 0;
        for (auto& [g, e] : m.f) d += gens_[g].degree * static_cast<int>(e);
        return d;
    }

    // Homogeneous degree of p, or nullopt for 0 / inhomogeneous input.
    std::optional<int> degree(const Poly& p) const {
        std::optional<int> d;
        for (auto& [m, c] : p) {
            int dm = degree(m);
            if (!d)
                d = dm;
            else if (*d != dm)
                return std::nullopt;
        }
        return d;
    }

    bool is_homogeneous(const Poly& p, int d) const {
        for (auto& [m, c] : p)
            if (degree(m) != d) return false;
        return true;
    }

    Poly slice(const Poly& p, int d) const {
        Poly r;
        for (auto& [m, c] : p)
            if (degree(m) == d) r.emplace(m, c);
        return r;
    }

    // Sorts a word into normal form, accumulating the Koszul sign.
    // Returns nullopt when an odd generator acquires exponent >= 2.
    std::optional<std::pair<int, Monomial>> normalize(
        std::vector<std::pair<std::uint32_t, std::uint32_t>> w) const {
        for (auto& [g, e] : w)
            if (g >= gens_.size()) throw input_error("generator id out of range");
        int sign = 1;
        // insertion sort; crossing (g,e) over (h,f) costs (-1)^{e f |g||h|}
        for (std::size_t i = 1; i < w.size(); ++i) {
            std::size_t j = i;
            while (j > 0 && w[j - 1].first > w[j].first) {
                if (gens_[w[j].first].odd() && gens_[w[j - 1].first].odd() &&
                    (w[j].second & 1) && (w[j - 1].second & 1))
                    sign = -sign;
                std::swap(w[j - 1], w[j]);
                --j;
            }
        }
        Monomial m;
        for (auto& [g, e] : w) {
            if (e == 0) continue;
            if (!m.f.empty() && m.f.back().first == g)
                m.f.back().second += e;
            else
                m.f.push_back({g, e});
        }
        for (auto& [g, e] : m.f)
            if (gens_[g].odd() && e >= 2) return std::nullopt;
        return std::make_pair(sign, std::move(m));
    }

    // Product of normal-form monomials.
    std::optional<std::pair<int, Monomial>> mul(const Monomial& a, const Monomial& b) const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> w = a.f;
        w.insert(w.end(), b.f.begin(), b.f.end());
        return normalize(std::move(w));
    }

    Poly mul(const Poly& p, const Poly& q) const {
        Poly r;
        for (auto& [ma, ca] : p)
            for (auto& [mb, cb] : q) {
                auto nm = mul(ma, mb);
                if (!nm) continue;
                Rat c = ca * cb * nm->first;
                auto it = r.find(nm->second);
                if (it == r.end()) {
                    r.emplace(std::move(nm->second), std::move(c));
                } else {
                    it->second += c;
                    if (is_zero(it->second)) r.erase(it);
                }
            }
        return r;
    }

    Poly pow(const Poly& p, unsigned k) const {
        Poly r = unit_poly();
        for (unsigned i = 0; i < k; ++i) r = mul(r, p);
        return r;
    }

    // All degree-n monomials on generators accepted by `keep`, sorted.
    template <typename F>
    std::vector<Monomial> basis(int n, F&& keep) const {
        std::vector<Monomial> out;
        Monomial cur;
        rec_basis(0, n, cur, out, keep);
        std::sort(out.begin(), out.end());
        return out;
    }

    const std::vector<Monomial>& basis(int n) const {
        auto it = basis_cache_.find(n);
        if (it != basis_cache_.end()) return it->second;
        auto b = basis(n, [](std::uint32_t) { return true; });
        return basis_cache_.emplace(n, std::move(b)).first->second;
    }

    std::size_t dim(int n) const { return n < 0 ? 0 : basis(n).size(); }

    // Coordinates of a homogeneous polynomial in basis(n).
    std::vector<Rat> coords(const Poly& p, int n) const {
        const auto& b = basis(n);
        std::vector<Rat> v(b.size());
        for (auto& [m, c] : p) {
            if (degree(m) != n) throw invariant_violation("coords: polynomial not homogeneous");
            auto it = std::lower_bound(b.begin(), b.end(), m);
            if (it == b.end() || *it != m) throw invariant_violation("coords: monomial outside basis");
            v[static_cast<std::size_t>(it - b.begin())] = c;
        }
        return v;
    }

    Poly from_coords(const std::vector<Rat>& v, int n) const {
        const auto& b = basis(n);
        if (v.size() != b.size()) throw invariant_violation("from_coords: wrong length");
        Poly p;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!is_zero(v[i])) p.emplace(b[i], v[i]);
        return p;
    }

    std::string to_string(const Monomial& m) const {
        if (m.is_unit()) return "1";
        std::string s;
        for (auto& [g, e] : m.f) {
            if (!s.empty()) s += " ";
            s += gens_[g].name;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    std::string to_string(const Poly& p) const {
        if (p.empty()) return "0";
        std::string s;
        for (auto& [m, c] : p) {
            Rat a = abs(c);
            if (s.empty())
                s += (sgn(c) < 0) ? "- " : "";
            else
                s += (sgn(c) < 0) ? " - " : " + ";
            if (a != 1 || m.is_unit()) {
                s += rat_str(a);
                if (!m.is_unit()) s += " ";
            }
            if (!m.is_unit()) s += to_string(m);
        }
        return s;
    }

  private:
    template <typename F>
    void rec_basis(std::uint32_t id, int remaining, Monomial& cur, std::vector<Monomial>& out,
                   F&& keep) const {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (id >= gens_.size()) return;
        rec_basis(id + 1, remaining, cur, out, keep);
        if (!keep(id)) return;
        const int d = gens_[id].degree;
        const unsigned max_e = gens_[id].odd() ? 1u : static_cast<unsigned>(remaining / d);
        for (unsigned e = 1; e <= max_e && static_cast<int>(e) * d <= remaining; ++e) {
            cur.f.push_back({id, e});
            rec_basis(id + 1, remaining - static_cast<int>(e) * d, cur, out, keep);
            cur.f.pop_back();
        }
    }

    std::vector<Generator> gens_;            // canonical order
    std::vector<std::size_t> decl_of_id_;    // canonical id -> declaration index
    std::map<std::string, std::uint32_t> name_to_id_;
    mutable std::map<int, std::vector<Monomial>> basis_cache_;
};

// Builds the algebra on the disjoint union of two generator lists (declaration
// order: all of `a` then all of `b`); names must not collide.
inline FreeGCA tensor_algebra(const FreeGCA& a, const FreeGCA& b) {
    std::vector<Generator> gens;
    gens.reserve(a.size() + b.size());
    std::vector<Generator> decl_a(a.size()), decl_b(b.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) decl_a[a.decl_index(i)] = a.gen(i);
    for (std::uint32_t i = 0; i < b.size(); ++i) decl_b[b.decl_index(i)] = b.gen(i);
    for (auto& g : decl_a) gens.push_back(g);
    for (auto& g : decl_b) gens.push_back(g);
    return FreeGCA(std::move(gens));
}

// A copy of `a` with `suffix` appended to every generator name.
inline FreeGCA renamed_copy(const FreeGCA& a, const std::string& suffix) {
    std::vector<Generator> gens(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        gens[a.decl_index(i)] = Generator{a.gen(i).name + suffix, a.gen(i).degree};
    }
    return FreeGCA(std::move(gens));
}

}  // namespace rht
