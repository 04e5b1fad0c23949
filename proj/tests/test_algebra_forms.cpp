#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrt/catalog.hpp"
#include "lrt/forms.hpp"

using namespace lrt;

namespace {

Vec unit(std::size_t dim, std::size_t i) {
    Vec v(dim, Rat(0));
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("bigraded dimensions") {
    const TripleData heis = catalog_get("heis");  // nH=1, nQ=2, dim A=1
    CHECK(w_dim(heis, 0, 0) == 1);
    CHECK(w_dim(heis, 1, 0) == 2);
    CHECK(w_dim(heis, 1, 1) == 2);
    CHECK(w_dim(heis, 2, 0) == 1);
    CHECK(w_dim(heis, 2, 1) == 1);
    CHECK(w_dim(heis, 3, 0) == 0);
    CHECK(w_dim(heis, 0, 2) == 0);
    CHECK(w_dim(heis, -1, 0) == 0);
    CHECK(w_dim(heis, 0, -1) == 0);

    const TripleData dn = catalog_get("dual-numbers");  // nH=nQ=1, dim A=2
    CHECK(w_dim(dn, 0, 0) == 2);
    CHECK(w_dim(dn, 1, 1) == 2);
}

TEST_CASE("evaluation of bigraded forms is alternating and multilinear") {
    const TripleData t = catalog_get("so3");
    // f in W^{1,1} with f(e2)(e1) = 1, all other basis values 0
    Vec f(w_dim(t, 1, 1), Rat(0));
    f[w_index(t, 1, 1, 0, 0, 0)] = 1;
    const ModEl e1 = t.hBasis(0);
    const ModEl e2 = t.qBasis(0), e3 = t.qBasis(1);
    CHECK(eval_w(t, 1, 1, f, {e2}, {e1}) == t.A.one());
    CHECK(eval_w(t, 1, 1, f, {e3}, {e1}) == t.A.zero());
    // multilinearity over the scalars
    const ModEl mix = mod_add(mod_scale(Rat(2), e2), mod_scale(Rat(3), e3));
    CHECK(eval_w(t, 1, 1, f, {mix}, {mod_scale(Rat(5), e1)}) ==
          vec_scale(Rat(10), t.A.one()));

    // g in W^{2,0} on heis: g(X,Y) = 1
    const TripleData h = catalog_get("heis");
    Vec g(w_dim(h, 2, 0), Rat(0));
    g[0] = 1;
    const ModEl X = h.qBasis(0), Y = h.qBasis(1);
    CHECK(eval_w(h, 2, 0, g, {X, Y}, {}) == h.A.one());
    CHECK(eval_w(h, 2, 0, g, {Y, X}, {}) == vec_scale(Rat(-1), h.A.one()));
    CHECK(eval_w(h, 2, 0, g, {X, X}, {}) == h.A.zero());
}

TEST_CASE("evaluation with algebra coefficients") {
    const TripleData t = catalog_get("dual-numbers");
    const AEl eps = t.A.basis(1);
    // f in W^{1,0} with f(xi) = 1
    Vec f(w_dim(t, 1, 0), Rat(0));
    f[0] = 1;
    const ModEl xi = t.qBasis(0);
    CHECK(eval_w(t, 1, 0, f, {mod_scale_a(t.A, eps, xi)}, {}) == eps);
    // eps * eps = 0 in A
    Vec g(w_dim(t, 1, 0), Rat(0));
    g[1] = 1;  // g(xi) = eps
    CHECK(eval_w(t, 1, 0, g, {mod_scale_a(t.A, eps, xi)}, {}) == t.A.zero());
}

TEST_CASE("single-graded forms with module coefficients") {
    const BaseAlgebra a = BaseAlgebra::rationals();
    // Alt^2 of a rank-3 module with values in a rank-2 module
    const std::size_t dim = alt_dim(a, 3, 2, 2);
    CHECK(dim == 6);
    Vec f(dim, Rat(0));
    // f(e0,e1) = m1
    f[alt_index(a, 2, 0, 1, 0)] = 1;
    const ModEl e0 = mod_basis(3, 0, a), e1 = mod_basis(3, 1, a);
    const ModEl v = eval_alt(a, 3, 2, 2, f, {e0, e1});
    CHECK(vec_is_zero(v[0]));
    CHECK(v[1] == a.one());
    const ModEl w = eval_alt(a, 3, 2, 2, f, {e1, e0});
    CHECK(w[1] == vec_scale(Rat(-1), a.one()));
}

TEST_CASE("wedge product") {
    const BaseAlgebra a = BaseAlgebra::rationals();
    const std::size_t n = 3;
    const Vec f = unit(alt_dim(a, n, 1, 1), 0);  // e0*
    const Vec g = unit(alt_dim(a, n, 1, 1), 1);  // e1*
    const Vec h = unit(alt_dim(a, n, 1, 1), 2);  // e2*
    const Vec fg = alt_wedge(a, n, 1, f, 1, g);
    // (e0* ^ e1*)(e0,e1) = 1
    const ModEl e0 = mod_basis(n, 0, a), e1 = mod_basis(n, 1, a);
    CHECK(eval_alt(a, n, 2, 1, fg, {e0, e1})[0] == a.one());
    // graded commutativity for odd degrees
    const Vec gf = alt_wedge(a, n, 1, g, 1, f);
    CHECK(vec_is_zero(vec_add(fg, gf)));
    CHECK(vec_is_zero(alt_wedge(a, n, 1, f, 1, f)));
    // associativity
    const Vec left = alt_wedge(a, n, 2, fg, 1, h);
    const Vec right = alt_wedge(a, n, 1, f, 2, alt_wedge(a, n, 1, g, 1, h));
    CHECK(left == right);
    // top form evaluates to 1 on the ordered basis
    const ModEl e2 = mod_basis(n, 2, a);
    CHECK(eval_alt(a, n, 3, 1, left, {e0, e1, e2})[0] == a.one());
}

TEST_CASE("interior product") {
    const BaseAlgebra a = BaseAlgebra::rationals();
    const std::size_t n = 3;
    const Vec f = unit(alt_dim(a, n, 1, 1), 0);
    const Vec g = unit(alt_dim(a, n, 1, 1), 1);
    const Vec fg = alt_wedge(a, n, 1, f, 1, g);
    ModEl u = mod_zero(n, a);
    u[0] = vec_scale(Rat(2), a.one());
    u[1] = vec_scale(Rat(-3), a.one());
    // i_u (e0* ^ e1*) = 2 e1* + 3 e0*
    const Vec c = alt_contract(a, n, 2, fg, u);
    CHECK(c == vec_add(vec_scale(Rat(2), g), vec_scale(Rat(3), f)));
    // contraction twice with the same vector vanishes
    const Vec h = unit(alt_dim(a, n, 1, 1), 2);
    const Vec top = alt_wedge(a, n, 2, fg, 1, h);
    const Vec once = alt_contract(a, n, 3, top, u);
    CHECK(vec_is_zero(alt_contract(a, n, 2, once, u)));
}
