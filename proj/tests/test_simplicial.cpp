#include "homalg/simplicial.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace homalg;

namespace {

SemiSimplicialSet triangle_boundary() {
    auto s = circle(3);
    return s;
}

} // namespace

TEST_CASE("validate_s1 on the triangle boundary") {
    auto s = triangle_boundary();
    REQUIRE(s.validate());
    auto r = validate_s1(s);
    CHECK(r.connected);
    CHECK(r.injective);
    CHECK(r.stars == S1Report::Stars::ok);
    CHECK(r.all_pass());
}

TEST_CASE("validate_s1 failures") {
    SemiSimplicialSet two;
    two.add_vertex("a");
    two.add_vertex("b");
    auto r = validate_s1(two);
    CHECK(!r.connected);

    // two distinct edges with an identical corner pair
    SemiSimplicialSet bigon;
    bigon.add_vertex("a");
    bigon.add_vertex("b");
    bigon.add_simplex(1, "e", {1, 0});
    bigon.add_simplex(1, "f", {1, 0});
    REQUIRE(bigon.validate());
    r = validate_s1(bigon);
    CHECK(!r.injective);

    // repeated corner
    SemiSimplicialSet loop;
    loop.add_vertex("a");
    loop.add_simplex(1, "e", {0, 0});
    r = validate_s1(loop);
    CHECK(!r.injective);
}

TEST_CASE("corners are ordered") {
    auto s = standard_simplex(2);
    auto top = s.find("s012");
    REQUIRE(top);
    auto cs = s.corners(*top);
    REQUIRE(cs.size() == 3);
    CHECK(s.cells[0][cs[0]].id == "s0");
    CHECK(s.cells[0][cs[1]].id == "s1");
    CHECK(s.cells[0][cs[2]].id == "s2");
}

TEST_CASE("barycentric subdivision counts") {
    auto d1 = standard_simplex(1);
    auto b1 = barycentric_subdivide(d1);
    REQUIRE(b1.bs.validate());
    CHECK(b1.bs.count(0) == 3);
    CHECK(b1.bs.count(1) == 2);

    auto tb = triangle_boundary();
    auto bt = barycentric_subdivide(tb);
    REQUIRE(bt.bs.validate());
    CHECK(bt.bs.count(0) == 6);
    CHECK(bt.bs.count(1) == 6);

    auto d2 = standard_simplex(2);
    auto b2 = barycentric_subdivide(d2);
    REQUIRE(b2.bs.validate());
    CHECK(b2.bs.count(0) == 7);
    CHECK(b2.bs.count(1) == 12);
    CHECK(b2.bs.count(2) == 6);

    // subdivisions always pass the injectivity part of S1
    CHECK(validate_s1(b2.bs).injective);
    CHECK(validate_s1(bt.bs).injective);
}

TEST_CASE("subdivision invariance of homology") {
    std::vector<SemiSimplicialSet> inputs = {standard_simplex(1), standard_simplex(2),
                                             standard_simplex(3), triangle_boundary(),
                                             circle(5)};
    for (auto& s : inputs) {
        REQUIRE(s.total_size() <= 200);
        auto b = barycentric_subdivide(s);
        auto hs = homology_ranks(chain_complex<F2>(s));
        auto hb = homology_ranks(chain_complex<F2>(b.bs));
        CHECK(hs == hb);
        auto hq = homology_ranks(chain_complex<Rat>(s));
        auto hbq = homology_ranks(chain_complex<Rat>(b.bs));
        CHECK(hq == hbq);
    }
}

TEST_CASE("simplicial chains: point, circle, twisted circle") {
    SemiSimplicialSet pt;
    pt.add_vertex("p");
    auto c = chain_complex<Rat>(pt);
    CHECK(homology_ranks(c) == std::map<int, int>{{0, 1}});

    auto circ = circle(3);
    auto c2 = chain_complex<F2>(circ);
    REQUIRE(c2.validate());
    CHECK(homology_ranks(c2) == std::map<int, int>{{0, 1}, {1, 1}});

    // rank-1 local system with monodromy -1; oracle: Bareiss rank of the
    // twisted boundary matrix (edge e2 transports with a sign flip)
    std::vector<std::vector<oracle::BigInt>> tw = {
        {-1, 0, -1}, {1, -1, 0}, {0, 1, -1}};
    REQUIRE(oracle::bareiss_rank(tw) == 3);

    auto l = LocalSystem<Rat>::trivial(circ);
    l.maps[1][2][0](0, 0) = Rat(-1); // d_0 of e2 lands at v0 with sign -1
    REQUIRE(l.validate(circ));
    auto ct = chain_complex<Rat>(circ, l);
    REQUIRE(ct.validate());
    CHECK(homology_ranks(ct).empty());
}

TEST_CASE("star subcomplexes") {
    auto d2 = standard_simplex(2);
    auto top = *d2.find("s012");
    auto st = star(d2, top);
    CHECK(st.total_size() == d2.total_size());

    auto tb = triangle_boundary();
    auto v = *tb.find("v0");
    auto sv = star(tb, v);
    REQUIRE(sv.validate());
    CHECK(sv.count(0) == 3);
    CHECK(sv.count(1) == 2);

    auto e = *d2.find("s01");
    auto se = star(d2, e);
    CHECK(se.total_size() == d2.total_size());
}

TEST_CASE("front faces of flags") {
    auto d2 = standard_simplex(2);
    auto b = barycentric_subdivide(d2);
    // take a maximal flag v < e < t
    const Flag& f = b.flags[2][0];
    REQUIRE(f.size() == 3);
    CHECK(front_face(f, 2) == f);
    CHECK(front_face(f, 0) == Flag{f[0]});
    CHECK(front_face(f, 1) == Flag({f[0], f[1]}));
    CHECK_THROWS_AS(front_face(f, 3), std::out_of_range);
}

TEST_CASE("twisted boundary squares to zero on random local systems") {
    Rng rng(99);
    auto d3 = standard_simplex(3);
    // random local system built from per-simplex invertible P: map = P_face P_cell^{-1}
    auto build = [&](const SemiSimplicialSet& s, int r) {
        LocalSystem<Rat> l = LocalSystem<Rat>::trivial(s, r);
        std::vector<std::vector<Matrix<Rat>>> p(s.dim() + 1);
        for (int d = 0; d <= s.dim(); ++d)
            for (int i = 0; i < s.count(d); ++i)
                p[d].push_back(gen::random_invertible<Rat>(rng, r));
        for (int d = 1; d <= s.dim(); ++d)
            for (int i = 0; i < s.count(d); ++i)
                for (int j = 0; j <= d; ++j) {
                    Cell f = s.face({d, i}, j);
                    l.maps[d][i][j] = p[f.first][f.second] * *p[d][i].inverse();
                }
        return l;
    };
    for (auto& s : {standard_simplex(3), circle(4)}) {
        auto l = build(s, 2);
        REQUIRE(l.validate(s));
        auto c = chain_complex<Rat>(s, l);
        REQUIRE(c.validate()); // includes d^2 = 0
    }
    (void)d3;
}
