#pragma once

#include <vector>

#include "rht/gca.hpp"
#include "rht/linalg.hpp"

namespace rht {

// Degree-|k| derivation of a free GCA into itself, determined by its values
// on generators: theta(ab) = theta(a) b + (-1)^{|theta||a|} a theta(b).
class Derivation {
  public:
    Derivation() = default;
    Derivation(const FreeGCA* alg, int degree)
        : alg_(alg), degree_(degree), values_(alg->size()) {}

    int degree() const { return degree_; }
    const FreeGCA& algebra() const { return *alg_; }

    void set(std::uint32_t id, Poly value) {
        if (!value.empty()) {
            const int want = alg_->gen(id).degree + degree_;
            if (!alg_->is_homogeneous(value, want))
                throw input_error("derivation value on '" + alg_->gen(id).name +
                                  "' is not homogeneous of degree " + std::to_string(want));
        }
        values_[id] = std::move(value);
    }
    const Poly& value(std::uint32_t id) const { return values_[id]; }

    Poly apply(const Monomial& m) const {
        Poly out;
        int prefix_deg = 0;
        for (std::size_t i = 0; i < m.f.size(); ++i) {
            const auto [g, e] = m.f[i];
            const Poly& dg = values_[g];
            if (!dg.empty()) {
                int sign = ((degree_ % 2 != 0) && (prefix_deg % 2 != 0)) ? -1 : 1;
                Monomial prefix, rest;
                prefix.f.assign(m.f.begin(), m.f.begin() + static_cast<long>(i));
                rest = m.f[i].second > 1
                           ? Monomial{{{g, e - 1}}}
                           : Monomial{};
                Monomial suffix;
                suffix.f.assign(m.f.begin() + static_cast<long>(i) + 1, m.f.end());
                Poly term = alg_->mul(mono_poly(prefix, Rat(sign) * Rat(static_cast<long>(e))), dg);
                term = alg_->mul(term, mono_poly(rest));
                term = alg_->mul(term, mono_poly(suffix));
                out = out + term;
            }
            prefix_deg += alg_->gen(g).degree * static_cast<int>(e);
        }
        return out;
    }

    Poly apply(const Poly& p) const {
        Poly out;
        for (auto& [m, c] : p) out = out + c * apply(m);
        return out;
    }

    // Matrix of the derivation from degree n to degree n + |theta| in the
    // deterministic monomial bases.
    Mat matrix(int n) const {
        const auto& src = alg_->basis(n);
        const auto& tgt = alg_->basis(n + degree_);
        Mat m(tgt.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            Poly im = apply(src[j]);
            auto v = alg_->coords(im, n + degree_);
            for (std::size_t i = 0; i < tgt.size(); ++i) m(i, j) = v[i];
        }
        return m;
    }

  private:
    const FreeGCA* alg_ = nullptr;
    int degree_ = 0;
    std::vector<Poly> values_;
};

// Algebra morphism between free GCAs, determined by generator images.
class AlgebraMorphism {
  public:
    AlgebraMorphism() = default;
    AlgebraMorphism(const FreeGCA* src, const FreeGCA* tgt)
        : src_(src), tgt_(tgt), values_(src->size(), unit_poly()) {
        for (auto& v : values_) v.clear();
    }

    const FreeGCA& source() const { return *src_; }
    const FreeGCA& target() const { return *tgt_; }

    void set(std::uint32_t id, Poly value) {
        if (!value.empty() && !tgt_->is_homogeneous(value, src_->gen(id).degree))
            throw input_error("morphism is not degree zero on '" + src_->gen(id).name + "'");
        values_[id] = std::move(value);
    }
    const Poly& value(std::uint32_t id) const { return values_[id]; }

    Poly apply(const Monomial& m) const {
        Poly out = unit_poly();
        for (auto& [g, e] : m.f) out = tgt_->mul(out, tgt_->pow(values_[g], e));
        return out;
    }
    Poly apply(const Poly& p) const {
        Poly out;
        for (auto& [m, c] : p) out = out + c * apply(m);
        return out;
    }

    // f(d_src(g)) == d_tgt(f(g)) on every generator extends to the whole
    // algebra, so this is a complete chain-map check.
    bool commutes(const Derivation& d_src, const Derivation& d_tgt) const {
        for (std::uint32_t g = 0; g < src_->size(); ++g)
            if (!(apply(d_src.value(g)) - d_tgt.apply(values_[g])).empty()) return false;
        return true;
    }

    Mat matrix(int n) const {
        const auto& src = src_->basis(n);
        const auto& tgt = tgt_->basis(n);
        Mat m(tgt.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            auto v = tgt_->coords(apply(src[j]), n);
            for (std::size_t i = 0; i < tgt.size(); ++i) m(i, j) = v[i];
        }
        return m;
    }

  private:
    const FreeGCA* src_ = nullptr;
    const FreeGCA* tgt_ = nullptr;
    std::vector<Poly> values_;
};

}  // namespace rht
