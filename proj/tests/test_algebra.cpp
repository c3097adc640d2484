#include <doctest.h>

#include "helpers.hpp"

using namespace hvt;

namespace {

AlgebraElement ae(const GroupPtr& g, const std::string& text) {
    return parse_algebra_element(text, g);
}

} // namespace

TEST_CASE("bracket fixtures from the structure constants") {
    const GroupPtr g = zgroup();
    CHECK(bracket(ae(g, "L[2]"), ae(g, "L[-2]")) == ae(g, "4*L[0] + 1/2*C"));
    CHECK(bracket(ae(g, "I[1]"), ae(g, "I[-1]")) == ae(g, "C_I"));
    CHECK(bracket(ae(g, "L[1]"), ae(g, "I[0]")) == ae(g, "0"));
    CHECK(bracket(ae(g, "C"), ae(g, "L[5]")) == ae(g, "0"));
    // [L_1, I_-1] = I_0 - 2 C_LI
    CHECK(bracket(ae(g, "L[1]"), ae(g, "I[-1]")) == ae(g, "I[0] - 2*C_LI"));
    // central term of [L_mu, L_-mu] is (mu^3-mu)/12
    CHECK(bracket(ae(g, "L[3]"), ae(g, "L[-3]")) == ae(g, "6*L[0] + 2*C"));
}

TEST_CASE("bracket over the quadratic group") {
    const GroupPtr g = qreal();
    // [L_√2, L_-√2] = 2√2 L_0 + (2√2-√2)/12 C = 2√2 L_0 + (√2/12) C
    CHECK(bracket(ae(g, "L[√2]"), ae(g, "L[-√2]")) == ae(g, "2√2*L[0] + 1/12√2*C"));
    // [I_√2, I_-√2] = √2 C_I
    CHECK(bracket(ae(g, "I[√2]"), ae(g, "I[-√2]")) == ae(g, "√2*C_I"));
    // [L_1, I_√2] = -√2 I_(1+√2)
    CHECK(bracket(ae(g, "L[1]"), ae(g, "I[√2]")) == ae(g, "-√2*I[1+√2]"));
}

TEST_CASE("antisymmetry, Jacobi and grading on random generators") {
    std::mt19937 rng(1001);
    for (const GroupPtr& g : {zgroup(), qreal(), qlex()}) {
        const AlgebraElement zero(g);
        for (int k = 0; k < 400; ++k) {
            const Generator x = random_generator(g, rng, 5);
            const Generator y = random_generator(g, rng, 5);
            const Generator z = random_generator(g, rng, 5);
            const AlgebraElement ux = AlgebraElement::basis(x, g);
            const AlgebraElement uy = AlgebraElement::basis(y, g);
            const AlgebraElement uz = AlgebraElement::basis(z, g);
            CHECK(bracket(ux, uy) + bracket(uy, ux) == zero);
            CHECK(bracket(ux, bracket(uy, uz)) + bracket(uy, bracket(uz, ux)) +
                      bracket(uz, bracket(ux, uy)) ==
                  zero);
            // grading: [x, y] lives at index(x)+index(y); centrals only at 0
            if (!x.is_central() && !y.is_central()) {
                const GroupElement sum = *x.index + *y.index;
                const AlgebraElement br = bracket(ux, uy);
                for (const auto& [t, c] : br.terms()) {
                    if (t.is_central())
                        CHECK(sum.is_zero());
                    else
                        CHECK(*t.index == sum);
                }
            }
        }
    }
}

TEST_CASE("theta basis table") {
    const GroupPtr z = zgroup();
    // theta(x, L_0) = x^-1 L_0 + ((x-x^-1)/24) C
    const GroupElement two = ge(z, "2");
    CHECK(theta(two, ae(z, "L[0]")) == ae(z, "1/2*L[0] + 1/16*C"));
    CHECK(theta(ge(z, "1"), ae(z, "I[3]")) == ae(z, "I[3]"));
    CHECK(theta(two, ae(z, "I[0]")) == ae(z, "1/2*I[0] + 1/2*C_LI"));
    CHECK(theta(two, ae(z, "C")) == ae(z, "2*C"));
    CHECK(theta(two, ae(z, "C_I")) == ae(z, "1/2*C_I"));
    CHECK(theta(two, ae(z, "C_LI")) == ae(z, "C_LI"));
    CHECK(theta(two, ae(z, "L[3]")) == ae(z, "1/2*L[6]"));

    const GroupPtr q = qreal();
    const GroupElement r2 = ge(q, "√2");
    CHECK(theta(r2, ae(z, "L[2]")) == ae(q, "1/2√2*L[2√2]"));
    CHECK(theta(r2, ae(z, "L[0]")) == ae(q, "1/2√2*L[0] + 1/48√2*C"));
    CHECK(theta(r2, ae(z, "I[0]")) == ae(q, "1/2√2*I[0] + (1-1/2√2)*C_LI"));

    CHECK_THROWS_AS(theta(z->zero(), ae(z, "L[1]")), PreconditionError);
}

TEST_CASE("theta is a bracket homomorphism and a bijection on the basis") {
    const GroupPtr z = zgroup();
    const GroupPtr q = qreal();
    std::vector<GroupElement> scales{ge(q, "1"), ge(q, "2"), ge(q, "√2")};
    std::vector<Generator> gens;
    for (long i = -5; i <= 5; ++i) {
        gens.push_back(Generator::L(ge(z, std::to_string(i))));
        gens.push_back(Generator::I(ge(z, std::to_string(i))));
    }
    gens.push_back(Generator::central(GenTag::C));
    gens.push_back(Generator::central(GenTag::CI));
    gens.push_back(Generator::central(GenTag::CLI));

    for (const GroupElement& x : scales) {
        for (const Generator& a : gens) {
            const AlgebraElement ua = AlgebraElement::basis(a, z);
            // bijection on the spanned subspace: theta^-1(theta(u)) = u
            CHECK(theta_inverse(x, theta(x, ua)) == ua);
            for (const Generator& b : gens) {
                const AlgebraElement ub = AlgebraElement::basis(b, z);
                CHECK(theta(x, bracket(ua, ub)) == bracket(theta(x, ua), theta(x, ub)));
            }
        }
    }
}

TEST_CASE("transport fixtures") {
    const GroupPtr z = zgroup();
    const GroupElement two = ge(z, "2");
    const HighestWeight hw1 = hw5("0", "0", "24", "0", "0");
    const HighestWeight t1 = transport_highest_weight(two, hw1);
    CHECK(t1 == hw5("3/2", "0", "48", "0", "0"));

    CHECK(transport_highest_weight(two, hw5("0", "0", "0", "4", "0")) ==
          hw5("0", "0", "0", "2", "0"));

    const HighestWeight any = hw5("2", "-3", "1/2", "7", "√2");
    CHECK(transport_highest_weight(ge(qreal(), "1"), any) == any);

    CHECK_THROWS_AS(transport_highest_weight(ge(z, "-1"), any), PreconditionError);
}
