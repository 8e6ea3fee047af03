#include "derange/simplicial.hpp"

#include "derange/families.hpp"
#include "derange/signed_permutation.hpp"
#include "golden_tables.hpp"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>

using namespace derange;

TEST_CASE("h-polynomial basics") {
    SimplicialComplex point = SimplicialComplex::from_facets({"v"}, {{0}});
    CHECK(point.h_polynomial() == IntPoly{1});

    SimplicialComplex triangle_boundary =
        SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(triangle_boundary.h_polynomial() == IntPoly{1, 1, 1});

    SimplicialComplex empty;
    CHECK(empty.h_polynomial() == IntPoly{1});
    CHECK(empty.dim() == -1);
    CHECK(empty.facet_count() == 1);

    KnComplex k2 = k_n(2);
    CHECK(k2.complex.num_vertices() == 5);
    CHECK(k2.complex.facet_count() == 4);
    CHECK(k2.complex.h_polynomial() == IntPoly{1, 3});
}

TEST_CASE("join multiplies h") {
    SimplicialComplex point = SimplicialComplex::from_facets({"v"}, {{0}});
    SimplicialComplex edge = join(point, point);
    CHECK(edge.h_polynomial() == IntPoly{1});

    SimplicialComplex triangle_boundary =
        SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    SimplicialComplex cone = join(triangle_boundary, point);
    CHECK(cone.h_polynomial() == IntPoly{1, 1, 1});

    // a couple of irregular complexes
    SimplicialComplex path = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}});
    CHECK(join_h_check(path, triangle_boundary));
    CHECK(join_h_check(path, path));
    CHECK(join_h_check(triangle_boundary, point));
}

TEST_CASE("barycentric subdivision h equals the Eulerian polynomial") {
    Subdivision sd1 = barycentric_subdivision(SimplicialComplex::simplex(1));
    CHECK(sd1.complex().num_vertices() == 1);

    Subdivision sd2 = barycentric_subdivision(SimplicialComplex::simplex(2));
    CHECK(sd2.complex().num_vertices() == 3);
    CHECK(sd2.complex().h_polynomial() == IntPoly{1, 1});

    Subdivision sd3 = barycentric_subdivision(SimplicialComplex::simplex(3));
    CHECK(sd3.complex().h_polynomial() == IntPoly{1, 4, 1});
    sd3.validate();
}

TEST_CASE("local h of the barycentric subdivision is the derangement polynomial") {
    for (int n = 1; n <= 4; ++n) {
        Subdivision sd = barycentric_subdivision(SimplicialComplex::simplex(n));
        CHECK(local_h(sd) == golden::derangement_a[n]);
    }
    // trivial subdivisions have vanishing local h
    for (int n = 1; n <= 4; ++n)
        CHECK(local_h(Subdivision::trivial(SimplicialComplex::simplex(n))).is_zero());
}

TEST_CASE("local h of the interval-poset subdivision") {
    for (int n = 1; n <= 4; ++n) {
        KnComplex kn = k_n(n);
        CHECK(local_h(kn.over_simplex) == golden::f_plus[n]);
        CHECK(kn.complex.h_polynomial() == golden::b_plus[n]);
        CHECK(kn.complex.facet_count() == factorial(n) * (Int(1) << (n - 1)));
    }
    CHECK_THROWS_AS(k_n(0), std::invalid_argument);
    CHECK_THROWS_AS(k_n(7), std::invalid_argument);
}

TEST_CASE("links and restrictions") {
    KnComplex k3 = k_n(3);
    // link of a facet is the empty complex
    Face facet = k3.complex.facets().front();
    CHECK(k3.complex.link(facet).h_polynomial() == IntPoly{1});
    CHECK_THROWS_AS(k3.complex.link(Face{999}), std::invalid_argument);

    // restriction to a vertex of the simplex is a point
    SimplicialComplex r1 = k3.over_simplex.restriction_complex({0});
    CHECK(r1.dim() == 0);
    CHECK(r1.facet_count() == 1);

    k3.over_simplex.validate();
    k3.over_sd.validate();
}

TEST_CASE("interval-poset restrictions replicate the smaller construction") {
    // faces of the restriction to a k-set are the chains of intervals
    // inside that set; relabeling gives exactly the k-element construction
    for (int n = 2; n <= 4; ++n) {
        KnComplex kn = k_n(n);
        KnComplex smaller = k_n(n - 1);
        std::map<std::pair<Face, Face>, int> smaller_vertex;
        for (std::size_t id = 0; id < smaller.intervals.size(); ++id)
            smaller_vertex[smaller.intervals[id]] = static_cast<int>(id);

        for (int drop = 0; drop < n; ++drop) {
            Face f;
            std::map<int, int> renumber;
            for (int v = 0; v < n; ++v)
                if (v != drop) {
                    renumber[v] = static_cast<int>(f.size());
                    f.push_back(v);
                }
            SimplicialComplex r = kn.over_simplex.restriction_complex(f);
            std::set<Face> relabeled;
            for (const Face& chain : r.faces()) {
                Face mapped;
                for (int vertex : chain) {
                    auto [a, b] = kn.intervals[vertex];
                    for (int& x : a) x = renumber.at(x);
                    for (int& x : b) x = renumber.at(x);
                    mapped.push_back(smaller_vertex.at({a, b}));
                }
                std::sort(mapped.begin(), mapped.end());
                relabeled.insert(std::move(mapped));
            }
            CHECK(relabeled == smaller.complex.faces());
        }
    }
}

TEST_CASE("restriction counts over the barycentric target") {
    for (int n = 2; n <= 4; ++n) {
        KnComplex kn = k_n(n);
        for (const Face& v : kn.sd.complex().faces()) {
            if (v.empty()) continue;
            int d = static_cast<int>(v.size());
            CHECK(kn.over_sd.restriction_complex(v).facet_count() == Int(1) << (d - 1));
            IntPoly lh = local_h(kn.over_sd.restriction(v));
            CHECK(lh == (d % 2 == 0 ? IntPoly::monomial(1, d / 2) : IntPoly{}));
        }
    }
}

TEST_CASE("relative local h") {
    FamilyCalculator calc;
    SimplicialComplex simplex3 = SimplicialComplex::simplex(3);
    Subdivision sd3 = barycentric_subdivision(simplex3);

    // empty face reduces to the plain local h
    CHECK(relative_local_h(sd3, Face{}) == local_h(sd3));

    // single chain {1}: block sizes r0 = 2, r1 = 1
    std::map<Face, int> ids;
    Poset::face_poset(simplex3, &ids);
    Face e{ids.at(Face{0})};
    CHECK(relative_local_h(sd3, e) ==
          calc.value(Family::DA, 2) * calc.value(Family::A, 1));

    // every face against the product formula, with symmetry and sign checks
    std::vector<Face> face_of_vertex(ids.size());
    for (const auto& [face, id] : ids) face_of_vertex[id] = face;
    for (const Face& face : sd3.complex().faces()) {
        std::vector<Face> chain;
        for (int v : face) chain.push_back(face_of_vertex[v]);
        std::sort(chain.begin(), chain.end(),
                  [](const Face& a, const Face& b) { return a.size() < b.size(); });
        IntPoly expected = calc.value(Family::DA, 3 - (chain.empty() ? 0 : static_cast<int>(chain.back().size())));
        std::size_t prev = 0;
        for (const Face& s : chain) {
            expected *= calc.value(Family::A, static_cast<int>(s.size() - prev));
            prev = s.size();
        }
        IntPoly got = relative_local_h(sd3, face);
        CHECK(got == expected);
        if (!got.is_zero()) CHECK(got.reversed(3 - static_cast<int>(face.size())) == got);
        CHECK(std::all_of(got.coeffs().begin(), got.coeffs().end(),
                          [](const Int& c) { return c >= 0; }));
    }
}

TEST_CASE("subdivision decomposition formula") {
    for (int n = 1; n <= 3; ++n) {
        KnComplex kn = k_n(n);
        CHECK(decomposition_formula_check(kn.sd, kn.over_sd));
        CHECK(decomposition_formula_check(kn.sd, Subdivision::trivial(kn.sd.complex())));
    }
}

TEST_CASE("h formula for subdivisions of pure complexes") {
    for (int n = 1; n <= 3; ++n) {
        KnComplex kn = k_n(n);
        CHECK(h_formula_check(kn.over_simplex));
        CHECK(h_formula_check(kn.over_sd));
        CHECK(h_formula_check(kn.sd));
        CHECK(h_formula_check(Subdivision::trivial(SimplicialComplex::simplex(n))));
    }
}

TEST_CASE("edgewise h transform") {
    FamilyCalculator calc;
    CHECK(edgewise_h(calc.value(Family::A, 3), 3, 2) == golden::b_plus[3]);
    IntPoly h{1, 5, 2};
    CHECK(edgewise_h(h, 4, 1) == h);
    CHECK(edgewise_h(IntPoly{1}, 1, 3) == IntPoly{1});
}

TEST_CASE("flag vectors of the sign-choice poset") {
    for (int n = 1; n <= 4; ++n) {
        Poset pn = p_n_poset(n);
        FlagVectors fv = flag_vectors(pn, n);
        CHECK(fv.alpha.at(0) == 1);

        IntPoly h = k_n(n).complex.h_polynomial();
        for (int k = 0; k <= n; ++k) {
            Int sum = 0;
            for (const auto& [mask, beta] : fv.beta)
                if (__builtin_popcount(mask) == k) sum += beta;
            CHECK(h.coeff(k) == sum);
        }
        for (const auto& [mask, beta] : fv.beta) CHECK(beta >= 0);
    }

    // beta counts the positive-last signed permutations by descent set
    Poset p3 = p_n_poset(3);
    FlagVectors fv3 = flag_vectors(p3, 3);
    std::map<unsigned, Int> by_desb;
    for (const auto& w : enumerate_bn(3)) {
        if (w.classify() != SignedPermutation::Half::Plus) continue;
        unsigned mask = 0;
        for (int i : w.des_b_set()) mask |= 1u << (3 - i - 1);
        ++by_desb[mask];
    }
    for (const auto& [mask, beta] : fv3.beta) {
        Int expected = by_desb.count(mask) ? by_desb.at(mask) : Int(0);
        CHECK(beta == expected);
    }
}

TEST_CASE("poset validation") {
    CHECK_THROWS_AS(Poset({"a"}, {{true}}, {1}), std::invalid_argument);
    std::vector<std::vector<bool>> not_transitive{
        {false, true, false}, {false, false, true}, {false, false, false}};
    CHECK_THROWS_AS(Poset({"a", "b", "c"}, not_transitive, {1, 2, 3}), std::invalid_argument);
}
