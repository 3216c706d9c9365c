// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "sympow/certificate.hpp"
#include "sympow/commands.hpp"
#include "sympow/kernels.hpp"

using namespace sympow;
using testkit::Gen;

namespace {

struct Outcome {
    bool passed = true;
    std::string note;
    void require(bool cond, const std::string& what)
    {
        if (!cond && passed) {
            passed = false;
            note = what;
        }
    }
};

bool proportional(const HomForm& a, const HomForm& b)
{
    if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return false;
    return a * b.terms().begin()->second == b * a.terms().begin()->second;
}

json run_verify(int n, FieldMode mode, const std::string& cert_path, int& code)
{
    cli::VerifyOptions o;
    o.data.n = n;
    o.data.mode = mode;
    o.emit_cert = cert_path;
    o.json = true;
    std::ostringstream out, err;
    code = cli::cmd_verify(o, out, err);
    return json::parse(out.str());
}

Outcome main_theorem()
{
    Outcome r;
    const auto cert = (std::filesystem::temp_directory_path() / "sympow-acceptance-12.json").string();
    int code = -1;
    const json rep = run_verify(12, FieldMode::compact, cert, code);
    r.require(code == 0, "verify exit code " + std::to_string(code));
    r.require(rep["dataset"]["points"] == 19, "triple point count");
    r.require(rep["form_in_symbolic_power"] == true, "F12 not in I^(3)");
    r.require(rep["form_in_power"] == false, "F12 in I^2");
    std::ostringstream out, err;
    r.require(cli::cmd_certificate(cert, false, out, err) == 0, "certificate re-verification: " + out.str());
    return r;
}

Outcome field_modes()
{
    Outcome r;
    int c1 = -1, c2 = -1;
    const json a = run_verify(12, FieldMode::compact, "", c1);
    const json b = run_verify(12, FieldMode::cyclotomic, "", c2);
    r.require(c1 == 0 && c2 == 0, "exit codes");
    r.require(b["dataset"]["minimal_polynomial"] == json::array({"1", "0", "-1", "0", "1"}), "cyclotomic minpoly");
    for (const char* key : {"hilbert", "symbolic_hilbert", "verdict", "first_failure", "form_in_symbolic_power",
                            "form_in_power", "gamma", "generator_degrees"})
        r.require(a[key] == b[key], std::string("mismatch in ") + key);
    r.require(a["dataset"]["points"] == b["dataset"]["points"], "triple counts differ");
    return r;
}

Outcome warm_up()
{
    Outcome r;
    const Dataset ds = coordinate_points_dataset();
    const FieldPtr q = ds.field;
    const FatPointScheme z = make_scheme(q, ds.points, 1);
    const FieldElement one(q, Rational(1));
    std::vector<Vector> quadrics;
    for (const Exponent& e : {Exponent{1, 1, 0}, Exponent{1, 0, 1}, Exponent{0, 1, 1}})
        quadrics.push_back(HomForm::monomial(q, e, one).dense());
    r.require(same_row_space(fat_piece(z, 2).matrix(), ExactMatrix::from_rows(q, 6, quadrics)), "I_2 != <xy,xz,yz>");
    const IdealPresentation pres = min_generators(z, 2);
    const GradedBasis sq = power_piece(pres, 2, 3);
    r.require(sq.dim() == 0, "dim (I^2)_3 != 0");
    const HomForm xyz = HomForm::monomial(q, {1, 1, 1}, one);
    r.require(symbolic_member(xyz, z.with_multiplicity(2)).member, "xyz not in I^(2)");
    r.require(!span_decide(xyz.dense(), sq.matrix()).member(), "xyz in I^2");
    return r;
}

Outcome dual_hesse()
{
    Outcome r;
    const Dataset ds = dual_hesse_dataset();
    r.require(ds.field->minimal_poly() == UPoly{1, 1, 1}, "field is not Q[a]/(a^2+a+1)");
    const IntersectionStats s = classify_intersections(ds.lines);
    r.require(s.count(3) == 12 && ds.points.size() == 12, "triple points != 12");
    r.require(s.count(2) == 0, "ordinary points present");
    const ContainmentReport c = containment_check(make_scheme(ds.field, ds.points, 1), 3, 2, 9);
    r.require(c.first_failure() == 9u, "containment does not fail first at degree 9");
    r.require(c.degrees.back().witness && proportional(*c.degrees.back().witness, ds.product_form()),
              "witness is not the product form");
    return r;
}

Outcome els_check()
{
    Outcome r;
    const Dataset cp = coordinate_points_dataset();
    r.require(containment_check(make_scheme(cp.field, cp.points, 1), 4, 2, 14).holds(), "coordinate points");
    const Dataset z = fp_even_dataset(12, FieldMode::compact);
    r.require(containment_check(make_scheme(z.field, z.points, 1), 4, 2, 14).holds(), "Z12");
    return r;
}

Outcome lemma_oracle()
{
    Outcome r;
    for (int n : {12, 14, 16, 18, 20}) {
        const Arrangement arr = build_arrangement(n, FieldMode::cyclotomic);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const bool det0 = line_determinant(arr.lines[i], arr.lines[j], arr.lines[k]).is_zero();
                    r.require(det0 == ((i + j + k) % n == 0), "n=" + std::to_string(n) + " triple " +
                                                                  std::to_string(i) + "," + std::to_string(j) +
                                                                  "," + std::to_string(k));
                }
        const auto pts = triple_points(arr).points;
        r.require(static_cast<int>(pts.size()) == 1 + n * (n - 3) / 6, "|Z_" + std::to_string(n) + "|");
        r.require(static_cast<int>(classify_intersections(arr.lines).points_with_multiplicity_at_least(3).size()) ==
                      1 + n * (n - 3) / 6,
                  "clustering count for n=" + std::to_string(n));
    }
    return r;
}

Outcome script_path()
{
    Outcome r;
    const Dataset ds = fp_even_dataset(12, FieldMode::compact);
    const FatPointScheme z = make_scheme(ds.field, ds.points, 1);
    const GeneratedIdeal J(ds.field, derivative_closure(jacobian_ideal(ds.product_form())));
    unsigned gamma = 0;
    while (fat_piece(z, gamma).dim() == 0) ++gamma;
    r.require(gamma == 5, "gamma = " + std::to_string(gamma));
    for (unsigned d = 0; d <= 12 - gamma; ++d)
        r.require(same_span(saturate_generated(J, d).basis, fat_piece(z, d)), "degree " + std::to_string(d));
    return r;
}

Outcome elimination_oracle()
{
    Outcome r;
    Gen g(2024);
    const std::vector<FieldPtr> fields = {
        rational_field(), make_field(UPoly{-3, 0, 1}, Complex(1.7320508L, 0), "Q(sqrt3)"), cyclotomic_field(3),
        cyclotomic_field(12), cyclotomic_field(5)};
    for (int i = 0; i < 200; ++i) {
        const FieldPtr& f = fields[g.index(fields.size())];
        const ExactMatrix m = g.matrix(f, g.index(12) + 1, g.index(40) + 1, 0.5);
        const RrefResult ff = rref(m, Elimination::fraction_free);
        const RrefResult naive = reference::rref_serial(m);
        const std::string tag = "matrix " + std::to_string(i);
        r.require(ff.rank == naive.rank && ff.rank == testkit::regular_rank(m), tag + ": rank");
        r.require(ff.reduced == naive.reduced, tag + ": row space");
        const auto ker = kernel(m);
        r.require(ker.size() == m.cols() - naive.rank, tag + ": kernel dimension");
        for (const auto& v : ker)
            for (std::size_t row = 0; row < m.rows(); ++row) r.require(dot(m.row(row), v).is_zero(), tag + ": kernel");
    }
    return r;
}

Outcome property_suites()
{
    Outcome r;
    constexpr int cases = 1000;
    Gen g(99);
    const FieldPtr f = cyclotomic_field(12);
    const FieldElement zero(f), one(f, Rational(1));
    for (int i = 0; i < cases; ++i) {
        const FieldElement x = g.element(f), y = g.element(f), z = g.element(f);
        r.require((x + y) + z == x + (y + z) && (x * y) * z == x * (y * z), "associativity");
        r.require(x + y == y + x && x * y == y * x, "commutativity");
        r.require(x * (y + z) == x * y + x * z, "distributivity");
        r.require(x + zero == x && x * one == x, "identities");
        if (!x.is_zero()) r.require((x * f_inv(x)).is_one(), "inverse");
    }
    const HomForm X = HomForm::variable(f, Var::x), Y = HomForm::variable(f, Var::y), Z = HomForm::variable(f, Var::z);
    for (int i = 0; i < cases; ++i) {
        const unsigned d = static_cast<unsigned>(g.integer(1, 6));
        const HomForm h = g.form(f, d, 0.4);
        r.require(X * p_diff(h, Var::x) + Y * p_diff(h, Var::y) + Z * p_diff(h, Var::z) ==
                      h * FieldElement(f, Rational(d)),
                  "Euler identity");
    }
    for (int i = 0; i < cases; ++i) {
        const HomForm a = g.form(f, static_cast<unsigned>(g.integer(0, 4)), 0.4);
        const HomForm b = g.form(f, static_cast<unsigned>(g.integer(0, 4)), 0.4);
        const PointP2 p = g.point(f);
        r.require(p_eval(a * b, p) == p_eval(a, p) * p_eval(b, p), "evaluation multiplicativity");
    }
    const Dataset ds = coordinate_points_dataset();
    const FieldPtr q = ds.field;
    const FatPointScheme z = make_scheme(q, ds.points, 1);
    const Certificate cert = nonmember_certificate(ds.product_form(), min_generators(z, 2), z, 2, 2, ds.config());
    const std::size_t xyz = monomial_index({1, 1, 1});
    for (int i = 0; i < cases; ++i) {
        Certificate c = cert;
        switch (g.integer(0, 3)) {
        case 0: {
            Exponent e{0, 0, 0};
            e[g.index(3)] = 2;
            c.generators[g.index(3)] += HomForm::monomial(q, e, FieldElement(q, g.nonzero_rational()));
            break;
        }
        case 1:
            for (auto& x : c.dual) x = FieldElement(q, g.rational());
            c.dual[xyz] = FieldElement(q);
            break;
        case 2:
            c.hilbert[g.index(c.hilbert.size())] += 1;
            break;
        default:
            c.generators.erase(c.generators.begin() + static_cast<long>(g.index(c.generators.size())));
        }
        r.require(!verify_certificate(c).ok(), "tampered certificate accepted");
    }
    return r;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "verify --n 12 --field compact: 19 points, F in I^(3), F not in I^2, certificate re-verified", 120,
         main_theorem},
        {2, "compact and cyclotomic field modes agree", 120, field_modes},
        {3, "coordinate points: I_2 = <xy,xz,yz>, (I^2)_3 = 0, xyz in I^(2) \\ I^2", 1, warm_up},
        {4, "dual Hesse: 12 triple points, 0 ordinary, failure at degree 9 with the product form", 30, dual_hesse},
        {5, "I^(4) in I^2 for d <= 14 (coordinate points, Z12)", 600, els_check},
        {6, "determinant test == divisibility test, |Z_n| formula, n = 12..20", 60, lemma_oracle},
        {7, "saturated derivative closure of the Jacobian ideal == I(Z12) for d <= 7", 600, script_path},
        {8, "fraction-free vs naive elimination on 200 random matrices", 600, elimination_oracle},
        {9, "property suites (ring, Euler, evaluation, tamper), 1000 cases each", 60, property_suites},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.passed && secs > c.limit_s) {
            o.passed = false;
            o.note = "time limit " + std::to_string(c.limit_s) + " s exceeded";
        }
        std::ostringstream line;
        line << (o.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << std::fixed
             << std::setprecision(2) << secs << " s)";
        if (!o.passed) line << ": " << o.note;
        std::cout << line.str() << std::endl;
        failures += !o.passed;
    }
    return failures == 0 ? 0 : 1;
}
