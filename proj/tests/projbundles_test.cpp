#include <gtest/gtest.h>

#include "birmax/projbundles.hpp"
#include "support.hpp"

using namespace birmax;
using namespace birmax::testing;

namespace {

struct Fixture {
    CurvePtr c = elliptic({{"L", std::nullopt}, {"M", std::nullopt}, {"T", 3}, {"U", 3}, {"A", 2}});
    PicElement o = PicElement::zero(c);
    PicElement l = gen(c, "L");
    PicElement m = gen(c, "M");
    PicElement t = gen(c, "T");
    PicElement u = gen(c, "U");
    PicElement a = gen(c, "A");
    PicElement p = PicElement::point(c);

    VBundle lines(std::vector<PicElement> cls) const {
        std::vector<Atom> atoms;
        for (auto& x : cls) atoms.push_back(Atom::line(x));
        return VBundle(c, atoms);
    }
    VBundle e20(const PicElement& tw, const PicElement& line) const {
        return VBundle(c, {Atom::atiyah(2, 0, tw), Atom::line(line)});
    }
    VBundle e21(const PicElement& tw, const PicElement& line) const {
        return VBundle(c, {Atom::atiyah(2, 1, tw), Atom::line(line)});
    }
    VBundle a3(int d, const PicElement& tw) const { return VBundle(c, {Atom::atiyah(3, d, tw)}); }

    std::vector<PicElement> three_torsion() const {
        std::vector<PicElement> out;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) out.push_back(t * i + u * j);
        return out;
    }

    // A random rank-3 bundle whose twists are representable by degree-0 classes.
    VBundle random_rank3(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> kind(0, 4);
        auto tw = random_pic0(c, rng);
        switch (kind(rng)) {
            case 0: return lines({random_pic(c, rng), random_pic(c, rng), random_pic(c, rng)});
            case 1: return e20(tw, random_pic(c, rng));
            case 2: return e21(tw, random_pic(c, rng));
            case 3: return a3(std::uniform_int_distribution<int>(0, 2)(rng), tw);
            default: return lines({tw, tw + random_pic0(c, rng), tw});
        }
    }
};

}  // namespace

TEST(ProjBundles, CanonicalizeExamples) {
    Fixture f;
    auto x = canonicalize(f.lines({f.l, f.l, f.l}));
    EXPECT_EQ(x.tag, CaseTag::TrivialProduct);
    EXPECT_EQ(x.rep, f.lines({f.o, f.o, f.o}));

    x = canonicalize(f.e20(f.t, f.m));
    EXPECT_EQ(x.tag, CaseTag::E20plusM);
    EXPECT_EQ(x.rep, f.e20(f.o, f.m - f.t));

    x = canonicalize(f.lines({f.o, f.l, f.l}));
    EXPECT_EQ(x.tag, CaseTag::OplusOplusM);
    EXPECT_EQ(x.rep, f.lines({f.o, f.o, -f.l}));

    x = canonicalize(f.a3(1, f.l));
    EXPECT_EQ(x.tag, CaseTag::A31);
    EXPECT_EQ(x.to_string(), "A31");

    EXPECT_EQ(canonicalize(f.lines({f.o, f.l, f.m})).tag, CaseTag::OplusLplusM);
    EXPECT_EQ(canonicalize(f.e21(f.l, f.m)).tag, CaseTag::E21plusM);
    EXPECT_EQ(canonicalize(VBundle(f.c, {Atom::atiyah(3, 0, f.c)})).tag, CaseTag::A30);
}

TEST(ProjBundles, CanonicalDegreesOrdered) {
    Fixture f;
    // O + L + M with 0 <= deg L <= deg M after normalization
    for (auto cls : {std::vector{f.p * 2, f.o, f.p}, {-f.p, f.o, f.p * 3}, {f.p, f.p, f.p * 2 + f.t}}) {
        auto rep = canonicalize(f.lines(cls)).rep;
        std::vector<std::int64_t> degs;
        for (const auto& s : rep.summands()) degs.push_back(s.degree());
        EXPECT_TRUE(std::is_sorted(degs.begin(), degs.end()));
        EXPECT_EQ(degs.front(), 0) << rep.to_string();
        EXPECT_TRUE(rep.summands().front().as_line()->cls.is_zero()) << rep.to_string();
    }
}

TEST(ProjBundles, RankTwoTags) {
    Fixture f;
    EXPECT_EQ(canonicalize(f.lines({f.l, f.l})).tag, CaseTag::RuledTrivial);
    EXPECT_EQ(canonicalize(f.lines({f.o, f.p})).tag, CaseTag::RuledDecomposable);
    EXPECT_EQ(canonicalize(VBundle(f.c, {Atom::atiyah(2, 0, f.l)})).tag, CaseTag::RuledA20);
    EXPECT_EQ(canonicalize(VBundle(f.c, {Atom::atiyah(2, 1, f.l)})).tag, CaseTag::RuledA21);
}

TEST(ProjBundles, CanonicalizeIdempotentProperty) {
    std::mt19937_64 rng(kSeed + 20);
    Fixture f;
    for (int i = 0; i < kIterations; ++i) {
        auto x = canonicalize(f.random_rank3(rng));
        auto y = canonicalize(x.rep);
        EXPECT_EQ(y.rep.summands(), x.rep.summands()) << x.to_string();
        EXPECT_EQ(y.tag, x.tag);
    }
}

TEST(ProjBundles, IsoExamples) {
    Fixture f;
    EXPECT_TRUE(proj_iso(f.lines({f.o, f.l, f.m}), f.lines({f.o, -f.l, f.m - f.l})));
    EXPECT_FALSE(proj_iso(f.e20(f.o, f.m), f.e20(f.o, f.l)));
    EXPECT_FALSE(proj_iso(f.e20(f.o, f.m), f.e20(f.o, -f.m)));
    EXPECT_FALSE(proj_iso(f.a3(1, f.o), f.a3(2, f.o)));
    EXPECT_TRUE(proj_iso(f.a3(1, f.o), f.a3(1, f.l)));
    EXPECT_THROW(proj_iso(f.lines({f.o, f.l}), f.lines({f.o, f.o, f.o})), ContractError);
}

TEST(ProjBundles, TwistInvarianceProperty) {
    std::mt19937_64 rng(kSeed + 21);
    Fixture f;
    for (int i = 0; i < kIterations; ++i) {
        auto e = f.random_rank3(rng);
        bool line_sum = e.summands().size() == 3;
        auto n = line_sum ? random_pic(f.c, rng) : random_pic0(f.c, rng);
        auto en = tensor_line(e, n);
        EXPECT_TRUE(proj_iso(e, en)) << e.to_string();
        auto x = canonicalize(e), y = canonicalize(en);
        EXPECT_EQ(x.rep.summands(), y.rep.summands()) << e.to_string() << " vs " << en.to_string();
        EXPECT_EQ(x.tag, y.tag);
    }
}

TEST(ProjBundles, IsoIsEquivalenceProperty) {
    std::mt19937_64 rng(kSeed + 22);
    Fixture f;
    for (int i = 0; i < kIterations; ++i) {
        auto x = f.random_rank3(rng);
        auto y = f.random_rank3(rng);
        auto z = tensor_line(y, random_pic0(f.c, rng));
        EXPECT_TRUE(proj_iso(x, x));
        EXPECT_EQ(proj_iso(x, y), proj_iso(y, x));
        if (proj_iso(x, y) && proj_iso(y, z)) {
            EXPECT_TRUE(proj_iso(x, z));
        }
        EXPECT_EQ(proj_iso(x, y), canonicalize(x).rep == canonicalize(y).rep);
    }
}

TEST(ProjBundles, DualExamples) {
    Fixture f;
    auto triv = canonicalize(f.lines({f.o, f.o, f.o}));
    EXPECT_EQ(proj_dual(triv).rep, triv.rep);
    EXPECT_EQ(proj_dual(canonicalize(f.a3(1, f.o))).tag, CaseTag::A32);
    EXPECT_EQ(proj_dual(canonicalize(f.a3(0, f.o))).tag, CaseTag::A30);
    EXPECT_EQ(proj_dual(canonicalize(f.e20(f.o, f.m))).rep, f.e20(f.o, -f.m));
    auto g2 = make_curve(2, {});
    auto s = canonicalize(VBundle(g2, {Atom::stable2(PicElement::point(g2, 2)), Atom::line(PicElement::point(g2))}));
    EXPECT_THROW(proj_dual(s), ContractError);
}

TEST(ProjBundles, DualIsInvolutionProperty) {
    std::mt19937_64 rng(kSeed + 23);
    Fixture f;
    for (int i = 0; i < kIterations; ++i) {
        auto x = canonicalize(f.random_rank3(rng));
        auto back = proj_dual(proj_dual(x));
        EXPECT_TRUE(proj_iso(back, x)) << x.to_string();
        EXPECT_EQ(back.tag, x.tag);
    }
}

TEST(ProjBundles, E21DualMatchesRankTwoRule) {
    // E_{2,1}^dual = E_{2,1} (x) O(-p0), so P(E_{2,1} + M)^dual = P(E_{2,1} + (p0 - M)).
    Fixture f;
    for (auto m : {f.o, f.l, f.t, f.p, f.l - f.p * 2}) {
        auto x = canonicalize(f.e21(f.o, m));
        auto expected = canonicalize(f.e21(f.o, f.p - m));
        EXPECT_TRUE(proj_iso(proj_dual(x), expected)) << m.to_string();
    }
}

TEST(ProjBundles, SemiHomogeneousExamples) {
    Fixture f;
    EXPECT_TRUE(is_semi_homogeneous(canonicalize(VBundle(f.c, {Atom::atiyah(3, 0, f.c)}))));
    EXPECT_TRUE(is_semi_homogeneous(canonicalize(f.a3(2, f.o))));
    for (auto m : {f.o, f.l, f.p, -f.p * 2}) EXPECT_FALSE(is_semi_homogeneous(canonicalize(f.e21(f.o, m))));
    EXPECT_FALSE(is_semi_homogeneous(canonicalize(f.lines({f.o, f.o, f.p}))));
    EXPECT_FALSE(is_semi_homogeneous(canonicalize(f.e20(f.o, f.p))));
    EXPECT_TRUE(is_semi_homogeneous(canonicalize(f.e20(f.o, f.m))));
    EXPECT_TRUE(is_semi_homogeneous(canonicalize(f.lines({f.o, f.l, f.m}))));
    EXPECT_FALSE(is_semi_homogeneous(canonicalize(f.lines({f.o, f.l, f.p}))));
    auto g2 = make_curve(2, {});
    EXPECT_THROW(is_semi_homogeneous(canonicalize(VBundle(g2, {Atom::line(PicElement::zero(g2))}))),
                 ContractError);
}

TEST(ProjBundles, OmegaExamples) {
    Fixture f;
    EXPECT_EQ(omega_group(canonicalize(f.lines({f.o, f.t, f.t * 2}))), GroupTag::z3());
    EXPECT_EQ(omega_group(canonicalize(f.lines({f.o, f.l, f.m}))), GroupTag::trivial());
    EXPECT_EQ(omega_group(canonicalize(f.lines({f.o, f.t, f.u}))), GroupTag::trivial());
    EXPECT_EQ(omega_group(canonicalize(f.a3(1, f.o))), GroupTag::z3_squared());
    EXPECT_EQ(omega_group(canonicalize(f.e20(f.o, f.t))), GroupTag::trivial());
    EXPECT_EQ(omega_group(canonicalize(f.a3(0, f.o))), GroupTag::trivial());
}

TEST(ProjBundles, OmegaMatchesThreeTorsionCountProperty) {
    std::mt19937_64 rng(kSeed + 24);
    Fixture f;
    auto g3 = f.three_torsion();
    std::vector<VBundle> pool{f.a3(1, f.o), f.a3(2, f.l), f.a3(0, f.t),
                              f.lines({f.o, f.t, f.t * 2}), f.lines({f.l, f.l + f.u, f.l + f.u * 2}),
                              f.lines({f.o, f.t + f.u, f.t * 2 + f.u * 2})};
    for (int i = 0; i < kIterations; ++i) pool.push_back(f.random_rank3(rng));
    for (const auto& e : pool) {
        auto x = canonicalize(e);
        int count = 0;
        for (const auto& n : g3) count += tensor_line(x.rep, n) == x.rep;
        auto order = omega_group(x).finite_order();
        ASSERT_TRUE(order.has_value()) << x.to_string();
        EXPECT_EQ(9 % *order, 0);
        EXPECT_EQ(*order, count) << x.to_string();
    }
}
