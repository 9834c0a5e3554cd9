#include <gtest/gtest.h>

#include <algorithm>

#include "birmax/conjugacy.hpp"
#include "support.hpp"

using namespace birmax;
using namespace birmax::testing;

namespace {

struct Fixture {
    CurvePtr c = elliptic({{"L", std::nullopt}, {"M", std::nullopt}, {"T", 3}, {"U", 3}, {"A", 2}, {"F", 5}});
    PicElement o = PicElement::zero(c);
    PicElement l = gen(c, "L");
    PicElement m = gen(c, "M");
    PicElement t = gen(c, "T");
    PicElement u = gen(c, "U");
    PicElement a = gen(c, "A");
    PicElement f5 = gen(c, "F");

    ProjBundle p2(std::vector<PicElement> cls) const {
        std::vector<Atom> atoms;
        for (auto& x : cls) atoms.push_back(Atom::line(x));
        return canonicalize(VBundle(c, atoms));
    }
};

IntMatrix2 mat(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return {{{a, b}, {c, d}}}; }

const ProjBundle& bundle_of(const MfsDescriptor& d) { return std::get<P2Bundle>(d).bundle; }

}  // namespace

TEST(Conjugacy, Sl2Enumerate) {
    auto one = sl2_enumerate(1);
    EXPECT_NE(std::find(one.begin(), one.end(), mat(1, 0, 0, 1)), one.end());
    EXPECT_NE(std::find(one.begin(), one.end(), mat(0, 1, -1, 0)), one.end());
    std::size_t scan = 0;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) scan += a * d - b * c == 1;
    EXPECT_EQ(one.size(), scan);
    for (const auto& x : sl2_enumerate(3)) EXPECT_EQ(x[0][0] * x[1][1] - x[0][1] * x[1][0], 1);
    auto two = sl2_enumerate(2);
    EXPECT_TRUE(std::is_sorted(two.begin(), two.end()));
    EXPECT_EQ(std::adjacent_find(two.begin(), two.end()), two.end());
    EXPECT_THROW(sl2_enumerate(0), ContractError);
}

TEST(Conjugacy, OLMExamples) {
    Fixture f;
    auto [p1, p2] = conjugates_OLM(f.l, f.m, mat(1, 0, 0, 1), 0);
    EXPECT_EQ(p1, MfsDescriptor(P1OverRuled{RuledBase::dec(f.m), 0, f.l, std::nullopt}));
    EXPECT_TRUE(proj_iso(bundle_of(p2), f.p2({f.o, f.l, f.m})));

    auto [q1, q2] = conjugates_OLM(f.l, f.m, mat(0, 1, -1, 0), 1);
    EXPECT_EQ(q1, MfsDescriptor(P1OverRuled{RuledBase::dec(-f.l), 1, f.m, std::nullopt}));
    EXPECT_TRUE(proj_iso(bundle_of(q2), f.p2({f.o, f.m, -f.l})));

    EXPECT_THROW(conjugates_OLM(f.l, f.m, mat(1, 1, 1, 1), 0), ContractError);
    EXPECT_THROW(conjugates_OLM(f.l, f.l, mat(1, 0, 0, 1), 0), ContractError);
    EXPECT_THROW(conjugates_OLM(f.a, f.t, mat(1, 0, 0, 1), 0), ContractError);
    EXPECT_THROW(conjugates_OLM(f.o, f.m, mat(1, 0, 0, 1), 0), ContractError);
}

TEST(Conjugacy, OOMExamples) {
    Fixture f;
    auto v = conjugates_OOM(f.f5);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_TRUE(proj_iso(bundle_of(v[0]), f.p2({f.o, f.o, f.f5})));
    EXPECT_EQ(v[1], MfsDescriptor(P1OverRuled{RuledBase::trivial(), 1, f.f5, std::nullopt}));
    EXPECT_THROW(conjugates_OOM(f.o), ContractError);
}

TEST(Conjugacy, E20MExamples) {
    Fixture f;
    auto v = conjugates_E20M(f.m, 0, 1);
    auto has = [&](const MfsDescriptor& d) { return std::find(v.begin(), v.end(), d) != v.end(); };
    EXPECT_TRUE(has(P1OverRuled{RuledBase::dec(f.m), 1, f.o, 0}));
    EXPECT_TRUE(has(P1OverRuled{RuledBase::dec(f.m), 1, f.m, 1}));
    EXPECT_TRUE(has(P1OverRuled{RuledBase::dec(f.m), 0, f.o, 0}));
    EXPECT_TRUE(has(P1OverRuled{RuledBase::a20(), 1, f.m, std::nullopt}));
    EXPECT_TRUE(has(P2Bundle{canonicalize(VBundle(f.c, {Atom::atiyah(2, 0, f.c), Atom::line(-f.m)}))}));
    EXPECT_FALSE(has(P1OverRuled{RuledBase::dec(f.m), 2, f.o, 0}));
    auto c4 = elliptic({{"Q", 4}});
    EXPECT_THROW(conjugates_E20M(gen(c4, "Q"), 0, 1), ContractError);
}

TEST(Conjugacy, Superrigidity) {
    Fixture f;
    EXPECT_EQ(is_superrigid(classify_p2_bundle(VBundle(f.c, {Atom::atiyah(3, 2, f.c)}))), Verdict::Yes);
    EXPECT_EQ(is_superrigid(classify_p2_bundle(f.p2({f.o, f.o, f.o}))), Verdict::Yes);
    EXPECT_EQ(is_superrigid(classify_p2_bundle(VBundle(f.c, {Atom::atiyah(2, 0, f.c), Atom::line(f.m)}))),
              Verdict::No);
    EXPECT_THROW(is_superrigid(classify_p2_bundle(VBundle(f.c, {Atom::atiyah(3, 0, f.c)}))), ContractError);
    auto g2 = make_curve(2, {});
    auto s = classify_p2_bundle(VBundle(g2, {Atom::stable2(PicElement::point(g2, 4)), Atom::line(PicElement::point(g2, 2))}));
    EXPECT_EQ(is_superrigid(s), Verdict::Undetermined);
}

TEST(Conjugacy, SuperrigidListsOnlyThemselves) {
    Fixture f;
    for (auto x : {canonicalize(VBundle(f.c, {Atom::atiyah(3, 1, f.c)})),
                   canonicalize(VBundle(f.c, {Atom::atiyah(3, 2, f.c)})), f.p2({f.o, f.o, f.o})}) {
        ASSERT_EQ(is_superrigid(classify_p2_bundle(x)), Verdict::Yes);
        for (const auto& d : conjugates(x)) {
            ASSERT_TRUE(std::holds_alternative<P2Bundle>(d));
            EXPECT_TRUE(proj_iso(bundle_of(d), x));
        }
    }
    EXPECT_THROW(conjugates(f.p2({f.o, f.t, f.t * 2})), ContractError);
}

TEST(Conjugacy, ClosureProperty) {
    Fixture f;
    for (const auto& d : conjugates(f.p2({f.o, f.t, f.u}))) {
        if (auto p = std::get_if<P2Bundle>(&d)) {
            auto r = classify_p2_bundle(p->bundle);
            EXPECT_EQ(r.maximal, Verdict::Yes) << p->bundle.to_string();
            EXPECT_EQ(r.vertical, GroupTag::gm(2));
        }
    }
    for (const auto& d : conjugates_E20M(f.m, -1, 2)) {
        if (auto p = std::get_if<P2Bundle>(&d)) {
            auto r = classify_p2_bundle(p->bundle);
            EXPECT_EQ(r.maximal, Verdict::Yes);
            EXPECT_EQ(r.vertical, GroupTag::gm_semidirect_ga());
        }
    }
    for (auto m : {f.m, f.t, f.a, f.f5 * 2, f.l - f.m}) {
        for (const auto& d : conjugates_OOM(m)) {
            if (auto p = std::get_if<P2Bundle>(&d)) {
                auto r = classify_p2_bundle(p->bundle);
                EXPECT_EQ(r.maximal, Verdict::Yes);
                EXPECT_EQ(r.vertical, GroupTag::gl2());
            }
        }
    }
}

TEST(Conjugacy, DedupSanity) {
    Fixture f;
    auto original = f.p2({f.o, f.l, f.m});
    std::vector<IntMatrix2> reproducing;
    for (const auto& x : sl2_enumerate(2)) {
        auto [p1, p2] = conjugates_OLM(f.l, f.m, x, 0);
        if (proj_iso(bundle_of(p2), original)) reproducing.push_back(x);
    }
    // twisting by -L or -M and reordering gives the 3-cycle generated by ((-1,1),(-1,0))
    std::vector<IntMatrix2> expected{mat(-1, 1, -1, 0), mat(0, -1, 1, -1), mat(1, 0, 0, 1)};
    EXPECT_EQ(reproducing, expected);

    auto all = conjugates(original);
    int hits = 0;
    for (const auto& d : all)
        if (auto p = std::get_if<P2Bundle>(&d)) hits += proj_iso(p->bundle, original);
    EXPECT_EQ(hits, 1);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
}

TEST(Conjugacy, OutputIsSorted) {
    Fixture f;
    auto v = conjugates(f.p2({f.o, f.t, f.u}), {1, -1, 1});
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.index() != b.index() ? a.index() < b.index() : to_string(a) < to_string(b);
    }));
}

TEST(Conjugacy, CatalogGenusOne) {
    Fixture f;
    auto cat = maximal_catalog(f.c);
    auto has = [&](const MfsDescriptor& d) {
        return std::any_of(cat.entries.begin(), cat.entries.end(), [&](const auto& e) { return e.descriptor == d; });
    };
    EXPECT_TRUE(has(FibreProduct{RuledBase::a21(), RuledBase::a21()}));
    EXPECT_FALSE(has(FibreProduct{RuledBase::dec(f.a), RuledBase::a21()}));
    EXPECT_TRUE(has(FibreProduct{RuledBase::dec(f.t), RuledBase::a21()}));
    EXPECT_TRUE(has(DelPezzoFibration{6, ""}));
    EXPECT_TRUE(has(DelPezzoFibration{8, ""}));
    EXPECT_TRUE(has(P1OverRuled{RuledBase::a21(), 0, f.o, std::nullopt}));
    EXPECT_FALSE(has(P1OverRuled{RuledBase::trivial(), 1, f.m, std::nullopt}));
    EXPECT_TRUE(has(P1OverRuled{RuledBase::trivial(), 2, f.m, std::nullopt}));
    EXPECT_FALSE(cat.notes.empty());
    for (const auto& e : cat.entries) EXPECT_TRUE(e.witness.holds()) << to_string(e.descriptor);
}

TEST(Conjugacy, CatalogGenusTwo) {
    auto c = make_curve(2, {{"N", std::nullopt}});
    auto cat = maximal_catalog(c);
    std::vector<std::string> kinds;
    for (const auto& e : cat.entries) {
        EXPECT_TRUE(e.witness.holds());
        kinds.push_back(kind_name(e.descriptor));
    }
    auto has = [&](const MfsDescriptor& d) {
        return std::any_of(cat.entries.begin(), cat.entries.end(), [&](const auto& e) { return e.descriptor == d; });
    };
    auto o = Atom::line(PicElement::zero(c));
    EXPECT_TRUE(has(DelPezzoFibration{8, ""}));
    EXPECT_TRUE(has(P2Bundle{canonicalize(VBundle(c, {o, o, o}))}));
    EXPECT_TRUE(has(P1OverRuled{RuledBase::trivial(), 0, PicElement::zero(c), std::nullopt}));
    EXPECT_TRUE(has(P2Bundle{canonicalize(VBundle(c, {Atom::stable2(PicElement::point(c, 2)),
                                                      Atom::line(PicElement::point(c))}))}));
    EXPECT_EQ(std::count(kinds.begin(), kinds.end(), "fibre_product"), 0);
    EXPECT_FALSE(has(DelPezzoFibration{6, ""}));
}

TEST(Conjugacy, TwoDivisorEntriesFollowD0) {
    Fixture f;
    CatalogParams params;
    auto p = PicElement::point(f.c);
    params.divisor_classes = {p, p + f.t};
    auto count = [&](const Catalog& cat) {
        return std::count_if(cat.entries.begin(), cat.entries.end(), [](const auto& e) {
            return e.witness.kind == Witness::Kind::Nontrivial2Divisor;
        });
    };
    params.d0 = p * 2;
    auto base = maximal_catalog(f.c, params);  // D = p0 fails, D = p0 + T holds
    EXPECT_EQ(count(base), 1);
    params.d0 = p * 2 + f.t;  // now E = 4 p0 + 2 T - 2(2 p0 + T) = 0 for D = p0 + T
    auto moved = maximal_catalog(f.c, params);
    EXPECT_EQ(count(moved), 1);
    bool has_p = std::any_of(moved.entries.begin(), moved.entries.end(), [&](const auto& e) {
        return e.witness.kind == Witness::Kind::Nontrivial2Divisor && *e.witness.line == p;
    });
    EXPECT_TRUE(has_p);
}

TEST(Conjugacy, TextForms) {
    Fixture f;
    EXPECT_EQ(to_string(MfsDescriptor(P1OverRuled{RuledBase::dec(f.m), 2, f.m * 2, 2})),
              "P1over(Dec(M), b=2, D=2*M, n=2)");
    EXPECT_EQ(to_string(MfsDescriptor(FibreProduct{RuledBase::a21(), RuledBase::a21()})), "FP(A21, A21)");
    EXPECT_EQ(to_string(MfsDescriptor(DelPezzoFibration{6, ""})), "DP(6)");
    EXPECT_EQ(kind_name(MfsDescriptor(P2Bundle{f.p2({f.o, f.o, f.o})})), "p2_bundle");
}
