#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rht/linalg.hpp"

namespace rht {

struct not_quasi_iso : invariant_violation {
    int degree;
    explicit not_quasi_iso(int n)
        : invariant_violation("induced map is not invertible in degree " + std::to_string(n)),
          degree(n) {}
};

// A cochain complex presented by dimensions and differential matrices
// d_n : C^n -> C^{n+1}. Everything is lazy and cached.
class CochainComplex {
  public:
    CochainComplex() = default;
    CochainComplex(std::function<std::size_t(int)> dim, std::function<Mat(int)> d)
        : dim_(std::move(dim)), d_(std::move(d)) {}

    std::size_t dim(int n) const {
        auto it = dim_cache_.find(n);
        if (it != dim_cache_.end()) return it->second;
        std::size_t v = dim_(n);
        dim_cache_[n] = v;
        return v;
    }

    const Mat& d(int n) const {
        auto it = d_cache_.find(n);
        if (it != d_cache_.end()) return it->second;
        Mat m = d_(n);
        if (m.rows() != dim(n + 1) || m.cols() != dim(n))
            throw invariant_violation("differential matrix has wrong shape at degree " +
                                      std::to_string(n));
        return d_cache_.emplace(n, std::move(m)).first->second;
    }

    const Echelon& d_echelon(int n) const {
        auto it = ech_cache_.find(n);
        if (it != ech_cache_.end()) return *it->second;
        auto e = std::make_unique<Echelon>(d(n));
        return *ech_cache_.emplace(n, std::move(e)).first->second;
    }

    bool d_squared_zero(int n) const { return (d(n + 1) * d(n)).is_zero(); }

  private:
    std::function<std::size_t(int)> dim_;
    std::function<Mat(int)> d_;
    mutable std::map<int, std::size_t> dim_cache_;
    mutable std::map<int, Mat> d_cache_;
    mutable std::map<int, std::unique_ptr<Echelon>> ech_cache_;
};

// Cohomology of a CochainComplex with deterministic representatives:
// the canonical echelon kernel basis, filtered so classes extend the image.
class Cohomology {
  public:
    explicit Cohomology(const CochainComplex* c) : c_(c) {}

    const CochainComplex& complex() const { return *c_; }

    std::size_t dim(int n) const { return data(n).reps.size(); }

    // Representative coordinate vectors in the degree-n basis.
    const std::vector<std::vector<Rat>>& reps(int n) const { return data(n).reps; }

    // Coordinates of the class of a cocycle; throws if not a cocycle.
    std::vector<Rat> reduce(int n, const std::vector<Rat>& z) const {
        const auto& dd = data(n);
        if (z.size() != c_->dim(n)) throw invariant_violation("reduce: wrong vector length");
        if (dd.reps.empty() && dd.image_rank == 0) {
            for (auto& x : z)
                if (!is_zero(x)) throw invariant_violation("reduce: not a cocycle");
            return {};
        }
        auto sol = dd.reduce_ech->solve(z);
        if (!sol) throw invariant_violation("reduce: vector is not a cocycle in degree " +
                                            std::to_string(n));
        std::vector<Rat> out(dd.reps.size());
        for (std::size_t i = 0; i < dd.reps.size(); ++i) out[i] = (*sol)[i];
        return out;
    }

    // Some w with d(w) = z (free variables zero), or nullopt if z is not exact.
    std::optional<std::vector<Rat>> preimage(int n, const std::vector<Rat>& z) const {
        if (z.size() != c_->dim(n + 1)) throw invariant_violation("preimage: wrong length");
        return c_->d_echelon(n).solve(z);
    }

    bool is_cocycle(int n, const std::vector<Rat>& z) const {
        auto v = c_->d(n).apply(z);
        for (auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }

  private:
    struct DegreeData {
        std::vector<std::vector<Rat>> reps;
        std::size_t image_rank = 0;
        // echelon of [reps | image-spanning columns]; solving against it reads
        // off class coordinates in the rep basis.
        std::unique_ptr<Echelon> reduce_ech;
    };

    const DegreeData& data(int n) const {
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;

        DegreeData dd;
        const std::size_t dn = c_->dim(n);
        // kernel of d_n
        auto ker = c_->d_echelon(n).kernel();
        // image of d_{n-1}
        std::vector<std::vector<Rat>> img;
        if (c_->dim(n - 1) > 0 && dn > 0) {
            const Mat& dm = c_->d(n - 1);
            for (std::size_t j = 0; j < dm.cols(); ++j) {
                std::vector<Rat> col(dn);
                bool nz = false;
                for (std::size_t i = 0; i < dn; ++i) {
                    col[i] = dm(i, j);
                    nz = nz || !is_zero(col[i]);
                }
                if (nz) img.push_back(std::move(col));
            }
        }
        // choose kernel vectors independent modulo the image
        Mat probe(dn, img.size() + ker.size());
        for (std::size_t j = 0; j < img.size(); ++j)
            for (std::size_t i = 0; i < dn; ++i) probe(i, j) = img[j][i];
        for (std::size_t j = 0; j < ker.size(); ++j)
            for (std::size_t i = 0; i < dn; ++i) probe(i, img.size() + j) = ker[j][i];
        Echelon pe(probe);
        std::size_t img_rank = 0;
        for (auto p : pe.pivot_cols())
            if (p < img.size()) ++img_rank;
        dd.image_rank = img_rank;
        for (auto p : pe.pivot_cols())
            if (p >= img.size()) dd.reps.push_back(ker[p - img.size()]);

        // reduce matrix: [reps | image basis]
        std::vector<std::vector<Rat>> img_basis;
        for (auto p : pe.pivot_cols())
            if (p < img.size()) img_basis.push_back(img[p]);
        Mat red(dn, dd.reps.size() + img_basis.size());
        for (std::size_t j = 0; j < dd.reps.size(); ++j)
            for (std::size_t i = 0; i < dn; ++i) red(i, j) = dd.reps[j][i];
        for (std::size_t j = 0; j < img_basis.size(); ++j)
            for (std::size_t i = 0; i < dn; ++i) red(i, dd.reps.size() + j) = img_basis[j][i];
        if (red.cols() > 0) dd.reduce_ech = std::make_unique<Echelon>(red);

        return cache_.emplace(n, std::move(dd)).first->second;
    }

    const CochainComplex* c_;
    mutable std::map<int, DegreeData> cache_;
};

// Induced map on cohomology of a map of complexes given by matrices f_n.
// Rows index the target complex basis, columns the source complex basis.
inline Mat induced_map(const Cohomology& src, const Cohomology& tgt,
                       const std::function<Mat(int)>& f, int n) {
    const auto& reps = src.reps(n);
    Mat out(tgt.dim(n), reps.size());
    if (reps.empty()) return out;
    Mat fn = f(n);
    for (std::size_t j = 0; j < reps.size(); ++j) {
        auto v = tgt.reduce(n, fn.apply(reps[j]));
        for (std::size_t i = 0; i < v.size(); ++i) out(i, j) = v[i];
    }
    return out;
}

// Inverse of the induced map of a quasi-isomorphism in degree n.
inline Mat induced_inverse(const Cohomology& src, const Cohomology& tgt,
                           const std::function<Mat(int)>& f, int n) {
    Mat m = induced_map(src, tgt, f, n);
    auto inv = inverse(m);
    if (!inv) throw not_quasi_iso(n);
    return *inv;
}

}  // namespace rht
