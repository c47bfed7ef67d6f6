#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rht/gca.hpp"
#include "rht/linalg.hpp"
#include "rht/model.hpp"

using namespace rht;

// Hilbert series oracle: coefficient of t^n in
//   prod_{even g} (1 - t^{|g|})^{-1} * prod_{odd g} (1 + t^{|g|}).
// Independent of the enumeration code; plain integer power series.
static std::vector<Int> hilbert_series(const FreeGCA& a, int maxdeg) {
    std::vector<Int> s(maxdeg + 1);
    s[0] = 1;
    for (auto& g : a.gens()) {
        std::vector<Int> t(maxdeg + 1);
        if (g.odd()) {
            for (int n = 0; n <= maxdeg; ++n) {
                t[n] = s[n];
                if (n >= g.degree) t[n] += s[n - g.degree];
            }
        } else {
            for (int n = 0; n <= maxdeg; ++n) {
                t[n] = s[n];
                if (n >= g.degree) t[n] += t[n - g.degree];
            }
        }
        s = std::move(t);
    }
    return s;
}

static FreeGCA cp1_loop_algebra() {
    return FreeGCA({{"x", 2}, {"xb", 1}, {"yb", 2}});
}

TEST_CASE("normalize_word basics") {
    FreeGCA a({{"a", 1}, {"b", 1}, {"x", 2}, {"y", 5}});
    auto xb = a.id_of("a");

    SECTION("odd square vanishes") {
        auto r = a.normalize({{xb, 1}, {xb, 1}});
        REQUIRE_FALSE(r.has_value());
    }
    SECTION("one odd transposition") {
        auto r = a.normalize({{a.id_of("b"), 1}, {a.id_of("a"), 1}});
        REQUIRE(r.has_value());
        CHECK(r->first == -1);
        CHECK(a.to_string(r->second) == "a b");
    }
    SECTION("even generator commutes freely") {
        auto r = a.normalize({{a.id_of("y"), 1}, {a.id_of("x"), 2}});
        REQUIRE(r.has_value());
        CHECK(r->first == 1);
        CHECK(a.to_string(r->second) == "x^2 y");
    }
    SECTION("normalize is idempotent on normal forms") {
        auto r = a.normalize({{a.id_of("y"), 1}, {a.id_of("x"), 2}, {a.id_of("b"), 1}});
        REQUIRE(r.has_value());
        auto r2 = a.normalize(r->second.f);
        REQUIRE(r2.has_value());
        CHECK(r2->first == 1);
        CHECK(r2->second == r->second);
    }
}

TEST_CASE("poly_mul examples") {
    SECTION("xbar^2 = 0 in the CP^1 loop algebra") {
        FreeGCA a({{"x", 2}, {"xb", 1}});
        Poly x = a.gen_poly(a.id_of("x")), xb = a.gen_poly(a.id_of("xb"));
        Poly p = a.mul(x + xb, xb);
        // canonical generator order is (degree, declaration): xb before x
        CHECK(a.to_string(p) == "xb x");
    }
    SECTION("unit") {
        FreeGCA a({{"x", 2}, {"y", 5}});
        Poly p = a.mul(a.gen_poly(0), a.gen_poly(1)) + unit_poly(rat(3, 2));
        CHECK(a.mul(unit_poly(), p) == p);
    }
    SECTION("(xb+yb)(xb-yb) = -2 xb yb for odd degree-1 generators") {
        FreeGCA a({{"xb", 1}, {"yb", 1}});
        Poly xb = a.gen_poly(a.id_of("xb")), yb = a.gen_poly(a.id_of("yb"));
        Poly p = a.mul(xb + yb, xb - yb);
        REQUIRE(p.size() == 1);
        CHECK(a.to_string(p) == "- 2 xb yb");
    }
}

TEST_CASE("graded commutativity and associativity (randomized)") {
    FreeGCA a({{"u", 1}, {"v", 2}, {"w", 3}});
    std::mt19937 rng(12345);
    auto random_homog = [&](int deg) {
        const auto& b = a.basis(deg);
        Poly p;
        for (auto& m : b) {
            int c = static_cast<int>(rng() % 5) - 2;
            if (c != 0) p = p + mono_poly(m, c);
        }
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        int dp = 1 + static_cast<int>(rng() % 4), dq = 1 + static_cast<int>(rng() % 4),
            dr = 1 + static_cast<int>(rng() % 3);
        Poly p = random_homog(dp), q = random_homog(dq), r = random_homog(dr);
        int sign = (dp % 2 && dq % 2) ? -1 : 1;
        CHECK(a.mul(p, q) == Rat(sign) * a.mul(q, p));
        CHECK(a.mul(a.mul(p, q), r) == a.mul(p, a.mul(q, r)));
    }
}

TEST_CASE("basis_of_degree") {
    SECTION("Lambda(x2, y5)") {
        FreeGCA a({{"x", 2}, {"y", 5}});
        auto b4 = a.basis(4);
        REQUIRE(b4.size() == 1);
        CHECK(a.to_string(b4[0]) == "x^2");
        auto b7 = a.basis(7);
        REQUIRE(b7.size() == 1);
        CHECK(a.to_string(b7[0]) == "x y");
    }
    SECTION("CP^1 loop algebra degree 3") {
        FreeGCA a = cp1_loop_algebra();
        auto b3 = a.basis(3);
        REQUIRE(b3.size() == 2);
        std::vector<std::string> names{a.to_string(b3[0]), a.to_string(b3[1])};
        std::sort(names.begin(), names.end());
        CHECK(names[0] == "xb x");
        CHECK(names[1] == "xb yb");
    }
    SECTION("counts match the Hilbert series up to degree 30") {
        std::vector<FreeGCA> algebras;
        algebras.push_back(FreeGCA({{"x", 2}, {"y", 5}}));
        algebras.push_back(cp1_loop_algebra());
        algebras.push_back(FreeGCA({{"x", 3}, {"y", 3}, {"xb", 2}, {"yb", 2}}));
        algebras.push_back(FreeGCA({{"x", 3}, {"y", 3}, {"z", 5}, {"xb", 2}, {"yb", 2}, {"zb", 4}}));
        for (auto& a : algebras) {
            auto h = hilbert_series(a, 30);
            for (int n = 0; n <= 30; ++n) REQUIRE(Int(static_cast<long>(a.dim(n))) == h[n]);
        }
    }
}

TEST_CASE("tensor_rename") {
    FreeGCA a({{"x", 3}});
    FreeGCA ap = renamed_copy(a, "'");
    FreeGCA t = tensor_algebra(a, ap);
    CHECK(t.size() == 2);
    REQUIRE(t.find("x'").has_value());

    SECTION("renaming map sends x^2 to x'^2") {
        FreeGCA e({{"x", 2}});
        FreeGCA ep = renamed_copy(e, "'");
        AlgebraMorphism inj(&e, &ep);
        inj.set(e.id_of("x"), ep.gen_poly(ep.id_of("x'")));
        Poly x2 = e.pow(e.gen_poly(e.id_of("x")), 2);
        CHECK(ep.to_string(inj.apply(x2)) == "x'^2");
    }
    SECTION("dimensions multiply as a Cauchy product") {
        FreeGCA e({{"x", 2}, {"y", 5}});
        FreeGCA tt = tensor_algebra(e, renamed_copy(e, "'"));
        auto h = hilbert_series(e, 20);
        for (int n = 0; n <= 20; ++n) {
            Int expect = 0;
            for (int k = 0; k <= n; ++k) expect += h[k] * h[n - k];
            REQUIRE(Int(static_cast<long>(tt.dim(n))) == expect);
        }
    }
}

TEST_CASE("linear algebra over Q") {
    SECTION("solve and kernel") {
        Mat m(2, 3);
        m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
        m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 7;
        Echelon e(m);
        CHECK(e.rank() == 2);
        auto ker = e.kernel();
        REQUIRE(ker.size() == 1);
        auto img = m.apply(ker[0]);
        CHECK(is_zero(img[0]));
        CHECK(is_zero(img[1]));
        std::vector<Rat> b{rat(1), rat(2)};
        auto x = e.solve(b);
        REQUIRE(x.has_value());
        auto mx = m.apply(*x);
        CHECK(mx[0] == rat(1));
        CHECK(mx[1] == rat(2));
    }
    SECTION("inverse") {
        Mat m(2, 2);
        m(0, 0) = rat(1, 2); m(0, 1) = 1;
        m(1, 0) = 0; m(1, 1) = rat(3);
        auto inv = inverse(m);
        REQUIRE(inv.has_value());
        CHECK((m * *inv) == Mat::identity(2));
    }
    SECTION("singular") {
        Mat m(2, 2);
        m(0, 0) = 1; m(0, 1) = 1;
        m(1, 0) = 2; m(1, 1) = 2;
        CHECK_FALSE(inverse(m).has_value());
        CHECK(rank(m) == 1);
    }
}
