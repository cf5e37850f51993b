#include "doctest.h"

#include "corpus.hpp"
#include "logres/betti.hpp"
#include "logres/derive.hpp"
#include "logres/equivalence.hpp"
#include "logres/parser.hpp"
#include "logres/ring.hpp"

using namespace logres;
using logres::testing::random_wct;
using logres::testing::simplicial_h1;

namespace {

const FieldPtr Q = NumberField::rationals();

NFElem qn(long v) { return NFElem(Q, Rational(v)); }

// generic lines arrangement: r lines in general position (WCT level)
WeakCombinatorialType generic_lines(int r) {
    WeakCombinatorialType w;
    for (int i = 0; i < r; ++i) w.components.push_back({"L" + std::to_string(i + 1), 1, 0});
    int br = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            SingularPoint p;
            p.id = "P" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            std::string b1 = "b" + std::to_string(++br), b2 = "b" + std::to_string(++br);
            w.branch_component[b1] = w.components[i].id;
            w.branch_component[b2] = w.components[j].id;
            p.branches = {b1, b2};
            w.mu[branch_pair_key(b1, b2)] = 1;
            w.points.push_back(p);
        }
    return w;
}

} // namespace

TEST_CASE("betti numbers of basic arrangements") {
    // single smooth conic, projective: (1, 0, 0)
    WeakCombinatorialType conic;
    conic.components.push_back({"C", 2, 0});
    CHECK(betti_numbers(conic) == std::array<long long, 3>({1, 0, 0}));
    // two lines, one node -> b2 = 0
    auto two = generic_lines(2);
    CHECK(curve_first_betti(two) == 0);
    // single smooth curve of genus g -> 2g
    WeakCombinatorialType quart;
    quart.components.push_back({"C", 4, 3});
    CHECK(curve_first_betti(quart) == 6);
    // disconnected soft-valid input errors with the components named
    WeakCombinatorialType disc;
    disc.components.push_back({"A", 1, 0});
    disc.components.push_back({"B", 1, 0});
    CHECK_THROWS_WITH_AS((void)curve_first_betti(disc), doctest::Contains("disconnected"),
                         std::runtime_error);
}

TEST_CASE("betti agrees with the simplicial oracle on the random corpus") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        auto w = random_wct(rng);
        REQUIRE(validate(w).valid());
        CHECK(curve_first_betti(w) == simplicial_h1(w));
    }
}

TEST_CASE("presentation of r generic lines plus transversal") {
    for (int r = 2; r <= 5; ++r) {
        CAPTURE(r);
        auto p = RingPresentation::build(generic_lines(r));
        CHECK(p.v2_dimension() == r * (r - 1) / 2);
        // b1 = r, b2 = C(r,2) for the affine complement
        auto aff = affine_restriction(p);
        long long h1 = curve_first_betti(p.wct());
        CHECK(p.v2_dimension() + 2 * p.k_dimension() == h1);
        // cup products: sigma_i ^ sigma_j = psi at their node
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j) {
                auto cls = p.cup(i, j);
                int nonzero = 0;
                for (const auto& x : cls.v) nonzero += x.is_zero() ? 0 : 1;
                CHECK(nonzero == 1);
            }
    }
}

TEST_CASE("dimension identity over the random corpus") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        auto w = random_wct(rng, 4, 4);
        auto p = RingPresentation::build(w);
        long long h1_with_line = curve_first_betti(p.wct());
        CHECK(p.v2_dimension() + 2 * p.k_dimension() == h1_with_line);
    }
}

TEST_CASE("cup products are alternating, bilinear, and V2-valued") {
    std::mt19937 rng(4242);
    auto w = random_wct(rng, 3, 3);
    auto p = RingPresentation::build(w);
    size_t r = p.sigma_components().size();
    for (size_t i = 0; i < r; ++i) {
        CHECK(p.cup(i, i).is_zero());
        for (size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            auto a = p.cup(i, j), b = p.cup(j, i);
            for (size_t c = 0; c < a.v.size(); ++c) CHECK(a.v[c] == -b.v[c]);
            for (const auto& x : a.k_part) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("tangent-conics arrangement: affine presentation, omega basis and 3psi1+psi2") {
    auto D = derive_wct({{"C1", parse_homogeneous("y*(y-z) + (x+y)^2", Q)},
                         {"C2", parse_homogeneous("y*(y-z) + (x-y)^2", Q)},
                         {"C3", parse_homogeneous("y - z", Q)}},
                        Q);
    auto p = RingPresentation::build(D.wct());
    // with the formal line: b2 = h1 of the full divisor = 6
    CHECK(p.v2_dimension() == 6);
    CHECK(curve_first_betti(p.wct()) == 6);

    auto aff = affine_restriction(p);
    REQUIRE(aff.omega.size() == 2);
    // omega_i = 2 sigma_3 - sigma_i
    CHECK(aff.omega[0] == std::vector<NFElem>({qn(-1), qn(0), qn(2)}));
    CHECK(aff.omega[1] == std::vector<NFElem>({qn(0), qn(-1), qn(2)}));
    CHECK(aff.affine_b1 == 2);
    CHECK(aff.psi_basis.size() == 2);
    CHECK(aff.affine_b2 == 2);

    // reference classes: psi1 = psi_{P3}(C1,C2) + psi_{P2}(C2,C3) - psi_{P2'}(C1,C3)
    // where P3 is the mu=3 conic-conic point, P2/P2' the tangency nodes.
    const auto& w = p.wct();
    auto point_with = [&](long long mu, const std::string& ca, const std::string& cb) {
        for (const auto& pt : w.points) {
            if (pt.branches.size() != 2) continue;
            if (pt.id.rfind("inf:", 0) == 0) continue;
            const auto &c1 = w.branch_component.at(pt.branches[0]),
                       &c2 = w.branch_component.at(pt.branches[1]);
            if (std::set<std::string>({c1, c2}) != std::set<std::string>({ca, cb})) continue;
            if (w.mu_of(pt.branches[0], pt.branches[1]) != mu) continue;
            return pt;
        }
        throw std::runtime_error("fixture point not found");
    };
    auto gen_vec = [&](const SingularPoint& pt, const std::string& cfrom, const std::string& cto,
                       const NFElem& coef, std::vector<NFElem>& raw) {
        std::string bf, bt;
        for (const auto& b : pt.branches) {
            if (w.branch_component.at(b) == cfrom) bf = b;
            if (w.branch_component.at(b) == cto) bt = b;
        }
        auto col = p.column_of({pt.id, bf, bt});
        REQUIRE(col.has_value());
        raw[*col] += coef;
    };
    auto P3 = point_with(3, "C1", "C2");
    auto P1 = point_with(1, "C1", "C2");
    auto Pt2 = point_with(2, "C2", "C3");
    auto Pt2p = point_with(2, "C1", "C3");
    std::vector<NFElem> raw1(p.gen_count(), NFElem::zero(Q)), raw2(p.gen_count(), NFElem::zero(Q));
    gen_vec(P3, "C1", "C2", qn(1), raw1);
    gen_vec(Pt2, "C2", "C3", qn(1), raw1);
    gen_vec(Pt2p, "C1", "C3", qn(-1), raw1);
    gen_vec(P1, "C1", "C2", qn(1), raw2);
    gen_vec(Pt2, "C2", "C3", qn(1), raw2);
    gen_vec(Pt2p, "C1", "C3", qn(-1), raw2);
    auto psi1 = p.reduce(std::move(raw1));
    auto psi2 = p.reduce(std::move(raw2));

    // omega_1 ^ omega_2 = 3 psi1 + psi2 exactly
    auto prod = p.cup(aff.omega[0], aff.omega[1]);
    std::vector<std::vector<NFElem>> ref_basis = {p.quotient_coords(psi1), p.quotient_coords(psi2)};
    auto coords = in_basis(p, ref_basis, prod);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == qn(3));
    CHECK((*coords)[1] == qn(1));

    // and the export contains the relation against the canonical basis
    auto text = export_presentation(p, true);
    CHECK(text.find("omega_1 ^ omega_2") != std::string::npos);
}

TEST_CASE("cuspidal-cubic pair: weakly equivalent, classically distinct") {
    auto mk = [&](const std::string& conic) {
        return derive_wct({{"C1", parse_homogeneous("z*(x-y)^2 - x*y*(x+y)", Q)},
                           {"C2", parse_homogeneous(conic, Q)}},
                          Q);
    };
    auto D1 = mk("y*z - x*z + x*y");
    auto D2 = mk("3*y*z - x*z + x*y");
    auto wit = weak_equivalence(D1.wct(), D2.wct());
    REQUIRE(wit.has_value());
    CHECK(witness_is_valid(D1.wct(), D2.wct(), *wit));
    // the witness permutes the mu=2 and mu=3 points
    auto k1 = D1.classical(), k2 = D2.classical();
    CHECK(!classical_equivalence(k1, k2).has_value());
    // self-comparison yields the identity-style witness
    auto self = classical_equivalence(k1, k1);
    REQUIRE(self.has_value());
    for (const auto& [a, b] : self->point_map) CHECK(a == b);
}

TEST_CASE("two nodal cubics are classically equivalent") {
    auto D1 = derive_wct({{"C", parse_homogeneous("y^2*z - x^2*(x+z)", Q)}}, Q);
    auto D2 = derive_wct({{"C", parse_homogeneous("y^2*z - x^2*(x+4*z)", Q)}}, Q);
    auto k1 = D1.classical(), k2 = D2.classical();
    CHECK(classical_equivalence(k1, k2).has_value());
    // classical equivalence implies weak equivalence of the weakened types
    CHECK(weak_equivalence(weaken(k1), weaken(k2)).has_value());
}

TEST_CASE("degree mismatch blocks equivalence") {
    WeakCombinatorialType a, b;
    a.components.push_back({"A", 1, 0});
    a.components.push_back({"B", 2, 0});
    b.components.push_back({"A", 1, 0});
    b.components.push_back({"B", 3, 0});
    // minimal consistent mu data
    for (auto* w : {&a, &b}) {
        int n = (*w).components[1].degree;
        SingularPoint p;
        p.id = "P";
        w->branch_component["x"] = "A";
        w->branch_component["y"] = "B";
        p.branches = {"x", "y"};
        w->mu[branch_pair_key("x", "y")] = n;
        w->points.push_back(p);
    }
    CHECK(!weak_equivalence(a, b).has_value());
}

TEST_CASE("equivalence is reflexive, symmetric, transitive on random types") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 12; ++trial) {
        auto w = random_wct(rng, 3, 3);
        auto id = weak_equivalence(w, w);
        REQUIRE(id.has_value());
        CHECK(witness_is_valid(w, w, *id));

        // relabeled copy
        WeakCombinatorialType v = w;
        for (auto& c : v.components) c.id = "X" + c.id;
        std::map<std::string, std::string> bc;
        for (auto& [b, cid] : v.branch_component) bc[b] = "X" + cid;
        v.branch_component = bc;
        if (v.has_transversal_line) v.line_component = "X" + v.line_component;
        std::reverse(v.components.begin(), v.components.end());
        std::reverse(v.points.begin(), v.points.end());

        auto f = weak_equivalence(w, v);
        REQUIRE(f.has_value());
        CHECK(witness_is_valid(w, v, *f));
        auto g = weak_equivalence(v, w);
        REQUIRE(g.has_value());
        // witnesses invert and compose
        CHECK(witness_is_valid(v, w, f->inverse()));
        CHECK(witness_is_valid(w, w, EquivalenceWitness::compose(*f, *g)));
    }
}

TEST_CASE("exact-sequence bookkeeping: h0 of the boundary is r + e + 1") {
    auto D = derive_wct({{"C1", parse_homogeneous("y*(y-z) + (x+y)^2", Q)},
                         {"C2", parse_homogeneous("y*(y-z) + (x-y)^2", Q)},
                         {"C3", parse_homogeneous("y - z", Q)}},
                        Q);
    auto classical = D.classical();
    auto p = RingPresentation::build(D.wct());
    // e: tacnodes S1, S4 have 2 internal vertices each; S2 (contact 3) has 3;
    // S3 (node) has 1; plus 5 formal nodes at infinity -> e = 13
    long long h0 = h0_divisor_normalization(p, classical.point_trees);
    CHECK(h0 == 3 + 13 + 1);
    // cup pencil shape and determinism
    auto pencil = cup_pencil(p);
    CHECK(pencil.size() == 3);
    CHECK(pencil[0].size() == 3);
    CHECK(pencil == cup_pencil(p));
}

TEST_CASE("soft Bezout in partial mode; the ring builder refuses") {
    WeakCombinatorialType w;
    w.components.push_back({"C1", 2, 0});
    w.components.push_back({"C2", 2, 0});
    int br = 0;
    for (int k = 0; k < 3; ++k) { // only 3 of the 4 nodes entered
        SingularPoint p;
        p.id = "P" + std::to_string(k + 1);
        std::string b1 = "b" + std::to_string(++br), b2 = "b" + std::to_string(++br);
        w.branch_component[b1] = "C1";
        w.branch_component[b2] = "C2";
        p.branches = {b1, b2};
        w.mu[branch_pair_key(b1, b2)] = 1;
        w.points.push_back(p);
    }
    auto hard = validate(w, false);
    CHECK(!hard.valid());
    CHECK(!hard.hard_valid());
    CHECK(hard.text().find("3 != 4") != std::string::npos);
    auto soft = validate(w, true);
    CHECK(!soft.valid());
    CHECK(soft.hard_valid()); // demoted to a warning
    CHECK_THROWS_WITH_AS((void)RingPresentation::build(w), doctest::Contains("validation"),
                         std::runtime_error);
}

TEST_CASE("documented divergence: multi-branch 2-component points escape the relation list") {
    // Two nodal cubics sharing their node (realizable) put two branches of each
    // component at one point; the stated relation list (antisymmetry plus
    // pairwise-distinct-component triangles) leaves the 4-cycle class alive, so
    // dim V^2 + 2g exceeds h1 by one there. The random corpus generator
    // excludes this configuration; this test documents the divergence.
    WeakCombinatorialType w;
    w.components.push_back({"C1", 3, 0});
    w.components.push_back({"C2", 3, 0});
    SingularPoint p;
    p.id = "P";
    for (int i = 0; i < 2; ++i) {
        w.branch_component["a" + std::to_string(i)] = "C1";
        w.branch_component["b" + std::to_string(i)] = "C2";
        p.branches.push_back("a" + std::to_string(i));
        p.branches.push_back("b" + std::to_string(i));
    }
    std::sort(p.branches.begin(), p.branches.end());
    // nodes elsewhere soak up the remaining Bezout budget 9 - 4 = 5
    w.mu[branch_pair_key("a0", "b0")] = 1;
    w.mu[branch_pair_key("a0", "b1")] = 1;
    w.mu[branch_pair_key("a1", "b0")] = 1;
    w.mu[branch_pair_key("a1", "b1")] = 1;
    w.points.push_back(p);
    int br = 0;
    for (int k = 0; k < 5; ++k) {
        SingularPoint q;
        q.id = "N" + std::to_string(k);
        std::string b1 = "x" + std::to_string(++br), b2 = "y" + std::to_string(br);
        w.branch_component[b1] = "C1";
        w.branch_component[b2] = "C2";
        q.branches = {b1, b2};
        w.mu[branch_pair_key(b1, b2)] = 1;
        w.points.push_back(q);
    }
    REQUIRE(validate(w).valid());
    auto pr = RingPresentation::build(w);
    long long h1 = curve_first_betti(pr.wct());
    CHECK(pr.v2_dimension() + 2 * pr.k_dimension() == h1 + 1); // one 4-cycle survives
}

TEST_CASE("cup products intertwine through the cuspidal-cubic pair witness") {
    auto mk = [&](const std::string& conic) {
        return derive_wct({{"C1", parse_homogeneous("z*(x-y)^2 - x*y*(x+y)", Q)},
                           {"C2", parse_homogeneous(conic, Q)}},
                          Q);
    };
    auto D1 = mk("y*z - x*z + x*y");
    auto D2 = mk("3*y*z - x*z + x*y");
    auto wit = weak_equivalence(D1.wct(), D2.wct());
    REQUIRE(wit.has_value());
    auto p1 = RingPresentation::build(D1.wct());
    auto p2 = RingPresentation::build(D2.wct());
    // transport the only interesting product sigma_1 ^ sigma_2
    auto cls = p1.cup(0, 1);
    std::map<std::string, size_t> idx2;
    for (size_t i = 0; i < p2.sigma_components().size(); ++i)
        idx2[p2.sigma_components()[i].id] = i;
    auto cls2 = p2.cup(idx2.at(wit->component_map.at(p1.sigma_components()[0].id)),
                       idx2.at(wit->component_map.at(p1.sigma_components()[1].id)));
    std::vector<NFElem> transported(p2.gen_count(), NFElem::zero(Q));
    for (size_t c = 0; c < p1.v1().size(); ++c) {
        if (cls.v[c].is_zero()) continue;
        const auto& g = p1.v1()[c];
        PsiAff img{wit->point_map.at(g.point), wit->branch_map.at(g.b1), wit->branch_map.at(g.b2)};
        auto col = p2.column_of(img);
        REQUIRE(col.has_value());
        transported[*col] += cls.v[c];
    }
    // infinity generators transport by component
    for (size_t k = 0; k < p1.vinf().size(); ++k) {
        size_t c = p1.v1().size() + k;
        if (cls.v[c].is_zero()) continue;
        auto col = p2.column_of_inf(wit->component_map.at(p1.vinf()[k].comp), p1.vinf()[k].k);
        REQUIRE(col.has_value());
        transported[*col] += cls.v[c];
    }
    auto reduced = p2.reduce(std::move(transported));
    for (size_t c = 0; c < reduced.v.size(); ++c) CHECK(reduced.v[c] == cls2.v[c]);
    // and the relation ranks agree
    CHECK(p1.relation_matrix().rows() == p2.relation_matrix().rows());
    CHECK(p1.v2_dimension() == p2.v2_dimension());
}
