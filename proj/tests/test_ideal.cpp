#include <algorithm>
#include <gtest/gtest.h>

#include "support.hpp"
#include "sympow/certificate.hpp"
#include "sympow/datasets.hpp"

using namespace sympow;
using testkit::Gen;

namespace {

FieldElement one(const FieldPtr& f) { return FieldElement(f, Rational(1)); }
HomForm mono(const FieldPtr& f, Exponent e) { return HomForm::monomial(f, e, one(f)); }

GradedBasis span_of(const FieldPtr& f, unsigned d, const std::vector<HomForm>& forms)
{
    std::vector<Vector> rows;
    for (const auto& h : forms) rows.push_back(h.dense());
    return GradedBasis::from_rows(f, d, row_basis(ExactMatrix::from_rows(f, monomial_count(d), rows)));
}

FatPointScheme coordinate_points(unsigned m)
{
    const Dataset ds = coordinate_points_dataset();
    return make_scheme(ds.field, ds.points, m);
}

struct Twelve {
    Dataset ds = fp_even_dataset(12, FieldMode::compact);
    FatPointScheme z = make_scheme(ds.field, ds.points, 1);
    HomForm F = ds.product_form();
};

const Twelve& twelve()
{
    static const Twelve t;
    return t;
}

}  // namespace

TEST(FatPiece, CoordinatePoints)
{
    const FieldPtr q = rational_field();
    const GradedBasis i2 = fat_piece(coordinate_points(1), 2);
    EXPECT_TRUE(same_span(i2, span_of(q, 2, {mono(q, {1, 1, 0}), mono(q, {1, 0, 1}), mono(q, {0, 1, 1})})));
    const GradedBasis s3 = fat_piece(coordinate_points(2), 3);
    EXPECT_TRUE(same_span(s3, span_of(q, 3, {mono(q, {1, 1, 1})})));
}

TEST(FatPiece, TwelveLowDegree) { EXPECT_EQ(fat_piece(twelve().z, 4).dim(), 0u); }

TEST(FatPiece, DimensionBoundsOnShippedData)
{
    for (const Dataset& ds : {coordinate_points_dataset(), dual_hesse_dataset()}) {
        for (unsigned m = 1; m <= 3; ++m) {
            const auto h = hilbert_function(make_scheme(ds.field, ds.points, m), 10);
            bool positive = false;
            for (unsigned d = 0; d <= 10; ++d) {
                const long expected = static_cast<long>(monomial_count(d)) -
                                      static_cast<long>(ds.points.size() * m * (m + 1) / 2);
                EXPECT_GE(static_cast<long>(h[d]), expected);
                if (positive) EXPECT_GE(h[d], h[d - 1]);
                positive = positive || h[d] > 0;
                // Equality iff the conditions are independent: compare with the rank of the conditions.
                const GradedBasis fp = fat_piece(make_scheme(ds.field, ds.points, m), d);
                EXPECT_EQ(fp.dim(), h[d]);
            }
        }
    }
}

TEST(Symbolic, Membership)
{
    const FieldPtr q = rational_field();
    const Dataset ds = coordinate_points_dataset();
    const PointP2 P{one(q), FieldElement(q), FieldElement(q)}, R{FieldElement(q), FieldElement(q), one(q)};
    ASSERT_EQ(std::count(ds.points.begin(), ds.points.end(), P) + std::count(ds.points.begin(), ds.points.end(), R), 2);
    const HomForm xy = mono(q, {1, 1, 0});
    EXPECT_TRUE(symbolic_member(xy, make_scheme(q, {R}, 2)).member);
    EXPECT_FALSE(symbolic_member(xy, make_scheme(q, {P}, 2)).member);
    EXPECT_TRUE(symbolic_member(mono(q, {1, 1, 1}), coordinate_points(2)).member);
    EXPECT_TRUE(symbolic_member(twelve().F, twelve().z.with_multiplicity(3)).member);
}

TEST(MinGenerators, CoordinatePoints)
{
    const IdealPresentation p = min_generators(coordinate_points(1), 4);
    ASSERT_EQ(p.generators.size(), 3u);
    for (const auto& g : p.generators) EXPECT_EQ(g.degree(), 2u);
    EXPECT_EQ(p.gamma, 2u);
    EXPECT_EQ(p.complete_to, 4u);

    const IdealPresentation e = min_generators(make_scheme(rational_field(), {}, 1), 3);
    ASSERT_EQ(e.generators.size(), 1u);
    EXPECT_EQ(e.generators[0].degree(), 0u);
}

TEST(MinGenerators, TwelveGammaAndHilbert)
{
    const IdealPresentation p = min_generators(twelve().z, 7);
    EXPECT_EQ(p.gamma, 5u);
    const auto h = hilbert_function(twelve().z, 12);
    for (unsigned d = 0; d <= 7; ++d) EXPECT_EQ(p.hilbert[d], h[d]);
    EXPECT_EQ(h[4], 0u);
    EXPECT_GT(h[5], 0u);
    // Past the regularity the 19 points impose independent conditions.
    EXPECT_EQ(h[12], monomial_count(12) - 19);
}

TEST(PowerPiece, CoordinatePoints)
{
    const FieldPtr q = rational_field();
    const IdealPresentation p = min_generators(coordinate_points(1), 4);
    EXPECT_EQ(power_piece(p, 2, 3).dim(), 0u);
    const GradedBasis four = power_piece(p, 2, 4);
    const HomForm xy = mono(q, {1, 1, 0}), xz = mono(q, {1, 0, 1}), yz = mono(q, {0, 1, 1});
    EXPECT_EQ(four.dim(), 6u);
    EXPECT_TRUE(same_span(four, span_of(q, 4, {xy * xy, xy * xz, xy * yz, xz * xz, xz * yz, yz * yz})));
    for (unsigned d = 0; d <= 4; ++d) EXPECT_TRUE(same_span(power_piece(p, 1, d), fat_piece(coordinate_points(1), d)));
}

TEST(PowerPiece, RefusesIncompletePresentation)
{
    const IdealPresentation p = min_generators(twelve().z, 5);
    EXPECT_THROW(power_piece(p, 2, 12), CompletenessError);
}

TEST(PowerPiece, RegularPowersAreSymbolic)
{
    Gen g(41);
    const Dataset ds = dual_hesse_dataset();
    const FatPointScheme z = make_scheme(ds.field, ds.points, 1);
    const IdealPresentation p = min_generators(z, 6);
    for (int i = 0; i < 100; ++i) {
        const unsigned r = static_cast<unsigned>(g.integer(1, 3));
        HomForm prod = mono(ds.field, {0, 0, 0});
        for (unsigned k = 0; k < r; ++k) prod = prod * (p.generators[g.index(p.generators.size())] * g.nonzero_element(ds.field));
        EXPECT_TRUE(symbolic_member(prod, z.with_multiplicity(r)).member);
    }
}

TEST(Containment, Examples)
{
    const ContainmentReport c = containment_check(coordinate_points(1), 4, 2, 10);
    EXPECT_TRUE(c.holds());

    const Dataset hesse = dual_hesse_dataset();
    const ContainmentReport h = containment_check(make_scheme(hesse.field, hesse.points, 1), 3, 2, 9);
    ASSERT_EQ(h.first_failure(), 9u);
    const HomForm& w = *h.degrees.back().witness;
    const HomForm F = hesse.product_form();
    EXPECT_EQ(w * F.terms().begin()->second, F * w.terms().begin()->second);

    const ContainmentReport t = containment_check(twelve().z, 3, 2, 12, 12);
    ASSERT_EQ(t.first_failure(), 12u);
    EXPECT_EQ(t.degrees[0].symbolic_dim, 1u);
}

TEST(Containment, MembershipInvariantUnderGeneratorChanges)
{
    Gen g(42);
    const Dataset hesse = dual_hesse_dataset();
    IdealPresentation p = min_generators(make_scheme(hesse.field, hesse.points, 1), 6);
    const GradedBasis base = power_piece(p, 2, 9);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(p.generators.begin(), p.generators.end(), g.engine());
        for (auto& gen : p.generators) gen = gen * g.nonzero_element(hesse.field);
        EXPECT_TRUE(same_span(power_piece(p, 2, 9), base));
    }
}

TEST(Jacobian, CoordinateTriangleSaturatesToUnit)
{
    const FieldPtr q = rational_field();
    const HomForm xyz = mono(q, {1, 1, 1});
    const auto I = jacobian_ideal(xyz);
    ASSERT_EQ(I.size(), 4u);
    EXPECT_EQ(I[1], mono(q, {0, 1, 1}));
    const GeneratedIdeal J(q, derivative_closure(I));
    for (unsigned d = 0; d <= 3; ++d) {
        const SaturationResult s = saturate_generated(J, d);
        EXPECT_EQ(s.basis.dim(), monomial_count(d)) << d;
    }
}

TEST(Jacobian, TripleLineGivesMultiplesOfTheForm)
{
    const FieldPtr q = rational_field();
    const HomForm l = HomForm::linear(one(q), FieldElement(q, Rational(2)), FieldElement(q, Rational(-1)));
    const GeneratedIdeal J(q, derivative_closure(jacobian_ideal(l * l * l)));
    for (unsigned d = 1; d <= 4; ++d) {
        std::vector<HomForm> multiples;
        for (const auto& e : monomial_basis(d - 1)) multiples.push_back(l.shifted(e));
        EXPECT_TRUE(same_span(saturate_generated(J, d).basis, span_of(q, d, multiples))) << d;
    }
}

TEST(Saturation, FixesSaturatedAndUnitInput)
{
    const FatPointScheme z = coordinate_points(2);
    std::map<unsigned, GradedBasis> cache;
    const PieceSource fat = [&](unsigned d) -> const GradedBasis& {
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, fat_piece(z, d)).first;
        return it->second;
    };
    for (unsigned d = 0; d <= 5; ++d) EXPECT_TRUE(same_span(truncated_saturation(fat, z.field, d).basis, fat(d)));

    const GeneratedIdeal unit(rational_field(), {mono(rational_field(), {0, 0, 0})});
    for (unsigned d = 0; d <= 3; ++d) EXPECT_EQ(saturate_generated(unit, d).basis.dim(), monomial_count(d));
}

TEST(Saturation, ScriptPathMatchesEvaluationPath)
{
    const auto& t = twelve();
    const GeneratedIdeal J(t.ds.field, derivative_closure(jacobian_ideal(t.F)));
    bool gained = false;
    for (unsigned d = 0; d <= 7; ++d) {
        const SaturationResult s = saturate_generated(J, d);
        EXPECT_TRUE(same_span(s.basis, fat_piece(t.z, d))) << d;
        if (J.piece(d).dim() < s.basis.dim()) gained = true;
    }
    EXPECT_TRUE(gained);
}

TEST(Certificate, RoundTripAndTamper)
{
    const auto& t = twelve();
    const IdealPresentation pres = min_generators(t.z, 7);
    const Certificate cert = nonmember_certificate(t.F, pres, t.z, 3, 2, t.ds.config());
    ASSERT_TRUE(verify_certificate(cert).ok());
    const Certificate back = Certificate::from_json(json::parse(cert.to_json().dump()));
    EXPECT_EQ(back.to_json().dump(), cert.to_json().dump());
    EXPECT_TRUE(verify_certificate(back).ok());

    Certificate zeroed = cert;
    for (auto& x : zeroed.dual) x = FieldElement(cert.field);
    EXPECT_EQ(verify_certificate(zeroed).first_failure(), 4);

    Certificate perturbed = cert;
    perturbed.generators[0] += mono(cert.field, {5, 0, 0});
    const int f = verify_certificate(perturbed).first_failure();
    EXPECT_TRUE(f == 1 || f == 2) << f;

    Certificate truncated = cert;
    truncated.generators.pop_back();
    EXPECT_EQ(verify_certificate(truncated).first_failure(), 2);
}

TEST(Certificate, MemberProductIsContradiction)
{
    const Dataset hesse = dual_hesse_dataset();
    const FatPointScheme z = make_scheme(hesse.field, hesse.points, 1);
    const IdealPresentation p = min_generators(z, 5);
    const HomForm gh = p.generators[0] * p.generators[1];
    EXPECT_THROW(nonmember_certificate(gh, p, z, 2, 2, hesse.config()), MembershipContradiction);
}

TEST(CertificateProperty, TamperDetection)
{
    // Tampering classes that always break validity, with the checks allowed to fire first.
    const Dataset ds = coordinate_points_dataset();
    const FieldPtr q = ds.field;
    const FatPointScheme z = make_scheme(q, ds.points, 1);
    const HomForm F = ds.product_form();
    const Certificate cert = nonmember_certificate(F, min_generators(z, 2), z, 2, 2, ds.config());
    ASSERT_TRUE(verify_certificate(cert).ok());
    const std::size_t xyz = monomial_index({1, 1, 1});

    Gen g(43);
    for (int i = 0; i < 1200; ++i) {
        Certificate c = cert;
        const int kind = static_cast<int>(g.integer(0, 5));
        std::vector<int> allowed;
        switch (kind) {
        case 0: {  // pure power added to a generator: no longer vanishes at a vertex
            Exponent e{0, 0, 0};
            e[g.index(3)] = 2;
            c.generators[g.index(3)] += mono(q, e) * FieldElement(q, g.nonzero_rational());
            allowed = {1};
            break;
        }
        case 1: {  // dual no longer sees F
            for (auto& x : c.dual) x = FieldElement(q, g.rational());
            c.dual[xyz] = FieldElement(q);
            allowed = {4};
            break;
        }
        case 2: {  // F moved off the symbolic square
            std::size_t k;
            do k = g.index(monomial_count(3));
            while (k == xyz);
            c.form += mono(q, monomial_basis(3)[k]) * FieldElement(q, g.nonzero_rational());
            allowed = {4, 5};
            break;
        }
        case 3: {  // Hilbert table edited
            const std::size_t d = g.index(c.hilbert.size());
            c.hilbert[d] += static_cast<std::size_t>(g.integer(1, 5));
            allowed = {2};
            break;
        }
        case 4: {  // a generator dropped
            c.generators.erase(c.generators.begin() + static_cast<long>(g.index(c.generators.size())));
            allowed = {2};
            break;
        }
        case 5: {  // a point moved
            auto& p = c.points[g.index(c.points.size())];
            p = PointP2(p[0] + FieldElement(q, g.nonzero_rational()), p[1], p[2] + FieldElement(q, Rational(1)));
            allowed = {1};
            break;
        }
        }
        const VerificationResult v = verify_certificate(c);
        ASSERT_FALSE(v.ok()) << "kind " << kind;
        ASSERT_NE(std::find(allowed.begin(), allowed.end(), v.first_failure()), allowed.end())
            << "kind " << kind << " failed at " << v.first_failure();
    }
}
