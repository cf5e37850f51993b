#include "doctest.h"

#include "logres/identities.hpp"
#include "logres/parser.hpp"

using namespace logres;

namespace {
const FieldPtr Q = NumberField::rationals();
FieldPtr qxi() { return NumberField::make({Rational(1), Rational(1), Rational(1)}); }
}

TEST_CASE("concurrent lines: the cyclic node-form combination is the zero polynomial") {
    HPoly l1 = parse_homogeneous("x", Q);
    HPoly l2 = parse_homogeneous("y", Q);
    HPoly l3 = parse_homogeneous("2*x + 5*y", Q);
    HPoly c0 = parse_homogeneous("x + y + z", Q);
    CHECK(concurrent_lines_zero_form(l1, l2, l3, c0));
    // non-concurrent lines do not cancel
    HPoly l3b = parse_homogeneous("2*x + 5*y + z", Q);
    CHECK(!concurrent_lines_zero_form(l1, l2, l3b, c0));
}

TEST_CASE("solver: two lines plus transversal") {
    auto D = derive_wct({{"C0", parse_homogeneous("x + y + z", Q)},
                         {"L1", parse_homogeneous("x", Q)},
                         {"L2", parse_homogeneous("y", Q)}},
                        Q, std::string("C0"));
    auto reps = solve_representatives(D);
    REQUIRE(reps.pairs.size() == 1);
    auto rep = verify_representatives(D, reps);
    CHECK(rep.all_ok);
    // the numerator is the constant Jac(L1, L2, C0) = 1 (mu = 1)
    const HPoly& phi = reps.pairs.begin()->second;
    CHECK(phi.degree() == 0);
    CHECK(phi.coeff(0, 0, 0) == NFElem::one(Q));
}

TEST_CASE("solver: three concurrent lines plus transversal") {
    auto D = derive_wct({{"C0", parse_homogeneous("x + y + 3*z", Q)},
                         {"L1", parse_homogeneous("x", Q)},
                         {"L2", parse_homogeneous("y", Q)},
                         {"L3", parse_homogeneous("x - y", Q)}},
                        Q, std::string("C0"));
    auto reps = solve_representatives(D);
    auto rep = verify_representatives(D, reps);
    CHECK(rep.all_ok);
    auto mem = verify_memberships(D, reps);
    CHECK(mem.all_ok);
}

TEST_CASE("solver: two conics with a transversal line") {
    auto D = derive_wct({{"C0", parse_homogeneous("9*x - 22*y - 29*z", Q)},
                         {"C1", parse_homogeneous("x^2 + y^2 - 2*z^2", Q)},
                         {"C2", parse_homogeneous("x^2 + 2*y^2 - 3*z^2", Q)}},
                        Q, std::string("C0"));
    auto reps = solve_representatives(D);
    auto rep = verify_representatives(D, reps);
    CHECK(rep.all_ok);
    auto mem = verify_memberships(D, reps);
    CHECK(mem.all_ok);
}

TEST_CASE("quintic over Q(xi): the pinned reference representatives satisfy every identity") {
    auto F = qxi();
    auto D = derive_wct({{"C0", parse_homogeneous("x + y + z", F)},
                         {"C1", parse_homogeneous("y - z", F)},
                         {"C2", parse_homogeneous("x*y + x*z + y*z", F)},
                         {"C3", parse_homogeneous("x^2*(y+z) + y^2*(x+z) + z^2*(x+y)", F)}},
                        F, std::string("C0"),
                        {{"C2", "[a : -a - 1 : 1]"}, {"C3", "[0 : 1 : -1]"}});

    // Jac(C2,C3,C0) = 2 phi_P1 + 2 phi_P2 + 2 phi_P3 + 3 phi_inf^{2,R2} C3
    //                 - 2 phi_inf^{3,Q2} C2 - 2 phi_inf^{3,Q3} C2
    HPoly phiP1 = parse_homogeneous(
        "(a+2)*(z*x^2 + a*y*x^2 + x*z^2 + a*y^2*x + z^2*y + a*z*y^2)", F);
    HPoly phiP2 = parse_homogeneous(
        "(a+2)*(y^2*x + x*z^2 + y*x^2 + z*x^2 + z^2*y + (1-a)*z*x*y + a*z*y^2)", F);
    HPoly phiP3 = parse_homogeneous(
        "(a-1)*(y^2*x + x*z^2 + y*x^2 + z*x^2 + y^2*z + (a+2)*z*x*y - (1+a)*z^2*y)", F);
    HPoly phiI2R2 = parse_homogeneous("-(2*a+1)*z^0 + 0*z^0", F); // constant -(2a+1)
    HPoly phiI3Q2 = parse_homogeneous("-3*(x+y)", F);
    HPoly phiI3Q3 = parse_homogeneous("3*(x+z)", F);

    HPoly jac = HPoly::jacobian(D.equation_of("C2"), D.equation_of("C3"), D.equation_of("C0"));
    NFElem two(F, Rational(2)), three(F, Rational(3));
    HPoly rhs = phiP1 * two + phiP2 * two + phiP3 * two + phiI2R2 * D.equation_of("C3") * three -
                phiI3Q2 * D.equation_of("C2") * two - phiI3Q3 * D.equation_of("C2") * two;
    CHECK((jac - rhs).is_zero());

    // triangle at P1 with the listed (1,2), (2,3), (1,3) representatives
    HPoly phi12 = parse_homogeneous("2*x - a*y + (1+a)*z", F);
    HPoly phi13 = parse_homogeneous("2*x^2 + x*z + x*y - z^2 + 4*y*z - y^2", F);
    HPoly tri = phi12 * D.equation_of("C3") + phiP1 * D.equation_of("C1") -
                phi13 * D.equation_of("C2");
    CHECK(tri.is_zero());
}

TEST_CASE("quintic over Q(xi): the solver finds representatives and all identities verify") {
    auto F = qxi();
    auto D = derive_wct({{"C0", parse_homogeneous("x + y + z", F)},
                         {"C1", parse_homogeneous("y - z", F)},
                         {"C2", parse_homogeneous("x*y + x*z + y*z", F)},
                         {"C3", parse_homogeneous("x^2*(y+z) + y^2*(x+z) + z^2*(x+y)", F)}},
                        F, std::string("C0"),
                        {{"C2", "[a : -a - 1 : 1]"}, {"C3", "[0 : 1 : -1]"}});
    auto reps = solve_representatives(D);
    auto rep = verify_representatives(D, reps);
    CHECK(rep.all_ok);
    if (!rep.all_ok) MESSAGE(rep.text());
    auto mem = verify_memberships(D, reps);
    CHECK(mem.all_ok);
}

TEST_CASE("residue locus of a random pair section matches the support contract") {
    auto F = qxi();
    auto D = derive_wct({{"C0", parse_homogeneous("x + y + z", F)},
                         {"C1", parse_homogeneous("y - z", F)},
                         {"C2", parse_homogeneous("x*y + x*z + y*z", F)},
                         {"C3", parse_homogeneous("x^2*(y+z) + y^2*(x+z) + z^2*(x+y)", F)}},
                        F, std::string("C0"),
                        {{"C2", "[a : -a - 1 : 1]"}, {"C3", "[0 : 1 : -1]"}});
    auto P1 = D.point_index(parse_point("[1:0:0]", F));
    REQUIRE(P1.has_value());
    for (unsigned seed : {1u, 7u, 23u}) {
        auto rep = verify_residue_locus(D, "C2", "C3", *P1, seed);
        if (!rep.all_ok) MESSAGE(rep.text());
        CHECK(rep.all_ok);
    }
    // and for the conics pair with the rational transversal
    auto D2 = derive_wct({{"C0", parse_homogeneous("9*x - 22*y - 29*z", Q)},
                          {"C1", parse_homogeneous("x^2 + y^2 - 2*z^2", Q)},
                          {"C2", parse_homogeneous("x^2 + 2*y^2 - 3*z^2", Q)}},
                         Q, std::string("C0"));
    size_t node = 0;
    for (size_t pi = 0; pi < D2.point_coords().size(); ++pi)
        if (vanishes_at(D2.equation_of("C1"), D2.point_coords()[pi]) &&
            vanishes_at(D2.equation_of("C2"), D2.point_coords()[pi]))
            node = pi;
    auto rep = verify_residue_locus(D2, "C1", "C2", node, 5);
    if (!rep.all_ok) MESSAGE(rep.text());
    CHECK(rep.all_ok);
}
