#pragma once

#include <memory>
#include <string>

#include "rht/complex.hpp"
#include "rht/derivation.hpp"
#include "rht/gca.hpp"

namespace rht {

// A free CDGA (Lambda V, d) with differential of degree +1. The input object
// for everything downstream.
class CDGAModel {
  public:
    CDGAModel() = default;
    CDGAModel(std::string name, FreeGCA alg)
        : name_(std::move(name)), alg_(std::make_unique<FreeGCA>(std::move(alg))),
          d_(alg_.get(), +1) {}

    CDGAModel(CDGAModel&&) = default;
    CDGAModel& operator=(CDGAModel&&) = default;

    CDGAModel clone() const {
        CDGAModel m(name_, *alg_);
        for (std::uint32_t g = 0; g < alg_->size(); ++g) m.d_.set(g, d_.value(g));
        return m;
    }

    const std::string& name() const { return name_; }
    const FreeGCA& algebra() const { return *alg_; }
    const Derivation& d() const { return d_; }

    void set_d(std::uint32_t id, Poly value) {
        for (auto& [m, c] : value)
            if (m.is_unit()) throw input_error("differential has a constant term on '" +
                                               alg_->gen(id).name + "'");
        d_.set(id, std::move(value));
    }
    void set_d(const std::string& name, Poly value) { set_d(alg_->id_of(name), std::move(value)); }

    // d(d(g)) = 0 for every generator is the full d^2 = 0 check.
    void check_d_squared() const {
        for (std::uint32_t g = 0; g < alg_->size(); ++g) {
            if (!d_.apply(d_.value(g)).empty())
                throw input_error("d^2 != 0 on generator '" + alg_->gen(g).name +
                                  "' (degree " + std::to_string(alg_->gen(g).degree) + ")");
        }
    }

    bool simply_connected() const {
        for (auto& g : alg_->gens())
            if (g.degree < 2) return false;
        return true;
    }

    bool minimal() const {
        for (std::uint32_t g = 0; g < alg_->size(); ++g)
            for (auto& [m, c] : d_.value(g))
                if (m.length() < 2) return false;
        return true;
    }

    const CochainComplex& complex() const {
        if (!cx_) {
            const FreeGCA* a = alg_.get();
            const Derivation* d = &d_;
            cx_ = std::make_unique<CochainComplex>(
                [a](int n) { return a->dim(n); },
                [d](int n) { return d->matrix(n); });
        }
        return *cx_;
    }

    const Cohomology& cohomology() const {
        if (!h_) h_ = std::make_unique<Cohomology>(&complex());
        return *h_;
    }

    // ---- polynomial-level wrappers over the generic machinery ----

    Poly representative(int n, std::size_t i) const {
        return alg_->from_coords(cohomology().reps(n)[i], n);
    }

    std::vector<Rat> reduce(const Poly& z, int n) const {
        return cohomology().reduce(n, alg_->coords(z, n));
    }

    bool is_cocycle(const Poly& z) const { return d_.apply(z).empty(); }

    // Some p with d(p) = target (free variables zero), or nullopt.
    std::optional<Poly> preimage(const Poly& target) const {
        if (target.empty()) return unit_poly(Rat(0)) - unit_poly(Rat(0));
        auto deg = alg_->degree(target);
        if (!deg) throw input_error("preimage target must be homogeneous");
        auto sol = cohomology().preimage(*deg - 1, alg_->coords(target, *deg));
        if (!sol) return std::nullopt;
        return alg_->from_coords(*sol, *deg - 1);
    }

  private:
    std::string name_;
    std::unique_ptr<FreeGCA> alg_;
    Derivation d_;
    mutable std::unique_ptr<CochainComplex> cx_;
    mutable std::unique_ptr<Cohomology> h_;
};

// Matrix of H^n(f) for a chain algebra morphism between models.
inline Mat h_star(const CDGAModel& src, const CDGAModel& tgt, const AlgebraMorphism& f, int n) {
    return induced_map(src.cohomology(), tgt.cohomology(),
                       [&](int k) { return f.matrix(k); }, n);
}

inline Mat h_star_inverse(const CDGAModel& src, const CDGAModel& tgt, const AlgebraMorphism& f,
                          int n) {
    return induced_inverse(src.cohomology(), tgt.cohomology(),
                           [&](int k) { return f.matrix(k); }, n);
}

}  // namespace rht
