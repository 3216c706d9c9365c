#include "sympow/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "sympow/certificate.hpp"
#include "sympow/render.hpp"

namespace sympow::cli {

namespace {

class Stopwatch {
public:
    long long lap()
    {
        const auto now = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DatasetError(path + ": malformed JSON: " + e.what());
    }
}

json dataset_summary(const Dataset& ds)
{
    json j = {{"name", ds.name},
              {"field", ds.field->label()},
              {"minimal_polynomial", field_to_json(ds.field).at("minpoly")},
              {"lines", ds.lines.size()},
              {"point_multiplicity", ds.point_multiplicity},
              {"points", ds.points.size()}};
    if (ds.arrangement) {
        j["n"] = ds.arrangement->n;
        j["field_mode"] = ds.arrangement->mode == FieldMode::compact ? "compact" : "cyclotomic";
        j["expected_points"] = expected_triple_count(ds.arrangement->n);
    }
    return j;
}

std::string dataset_line(const json& d)
{
    std::ostringstream s;
    s << d.at("name").get<std::string>();
    if (d.contains("n")) s << " n=" << d.at("n").get<int>() << " (" << d.at("field_mode").get<std::string>() << ")";
    s << ", " << d.at("lines").get<std::size_t>() << " lines over " << d.at("field").get<std::string>();
    return s.str();
}

json hilbert_rows(const std::vector<std::size_t>& dims)
{
    json rows = json::array();
    for (std::size_t d = 0; d < dims.size(); ++d) rows.push_back({d, dims[d]});
    return rows;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Presentation certified far enough for power_piece(r) in degree `degree`.
IdealPresentation presentation_for(const FatPointScheme& reduced, unsigned degree, unsigned r)
{
    unsigned gamma = 0;
    while (gamma <= degree && fat_piece(reduced, gamma).dim() == 0) ++gamma;
    const long bound = static_cast<long>(degree) - static_cast<long>(gamma) * static_cast<long>(r - 1);
    return min_generators(reduced, static_cast<unsigned>(std::max<long>(bound, std::min(gamma, degree))));
}

void print_verify_text(const json& rep, std::ostream& out)
{
    const unsigned m = rep.at("m"), r = rep.at("r");
    out << "dataset      " << dataset_line(rep.at("dataset")) << "\n";
    out << "points       " << rep.at("dataset").at("points").get<std::size_t>();
    if (rep.at("dataset").contains("expected_points"))
        out << " (formula " << rep.at("dataset").at("expected_points").get<int>() << ")";
    out << "\n";
    if (rep.contains("gamma")) {
        out << "gamma        " << (rep.at("gamma").is_null() ? std::string("none") : rep.at("gamma").dump()) << "\n";
        out << "hilbert I    ";
        for (const auto& row : rep.at("hilbert")) out << row[0].get<int>() << ":" << row[1].get<std::size_t>() << " ";
        out << "\n";
        out << "generators   degrees";
        for (const auto& g : rep.at("generator_degrees")) out << " " << g.get<unsigned>();
        out << "\n";
    }
    if (rep.contains("degrees")) {
        out << "degree  dim I^(" << m << ")  dim I^" << r << "  contained\n";
        for (const auto& v : rep.at("degrees")) {
            if (v.at("symbolic_dim").get<std::size_t>() == 0) continue;
            out << std::setw(6) << v.at("degree").get<unsigned>() << "  " << std::setw(9)
                << v.at("symbolic_dim").get<std::size_t>() << "  " << std::setw(7) << v.at("power_dim").get<std::size_t>()
                << "  " << yes_no(v.at("contained")) << "\n";
        }
        if (!rep.at("first_failure").is_null()) {
            out << "first failure at degree " << rep.at("first_failure").get<unsigned>();
            if (rep.contains("witness")) {
                if (rep.at("witness_is_form").get<bool>())
                    out << ", witness proportional to F";
                else
                    out << ", witness " << rep.at("witness").get<std::string>();
            }
            out << "\n";
        }
    }
    if (rep.contains("form_in_symbolic_power"))
        out << "F in I^(" << m << ")    " << yes_no(rep.at("form_in_symbolic_power")) << "\n";
    if (rep.contains("form_in_power") && !rep.at("form_in_power").is_null())
        out << "F in I^" << r << "      " << yes_no(rep.at("form_in_power")) << "\n";
    if (rep.contains("certificate")) {
        const auto& c = rep.at("certificate");
        out << "certificate  ";
        for (const char* name : kCheckNames)
            if (c.at("checks").contains(name))
                out << name << "=" << (c.at("checks").at(name).get<bool>() ? "pass" : "FAIL") << " ";
        if (!c.at("path").is_null()) out << "-> " << c.at("path").get<std::string>();
        out << "\n";
    }
    if (rep.contains("error")) out << "error        " << rep.at("error").get<std::string>() << "\n";
    out << "verdict      " << rep.at("verdict").get<std::string>() << " (expected "
        << rep.at("expected").get<std::string>() << "): " << (rep.at("confirmed").get<bool>() ? "CONFIRMED" : "NOT CONFIRMED")
        << "\n";
    out << "timings ms  ";
    for (const auto& [stage, ms] : rep.at("timings_ms").items()) out << " " << stage << "=" << ms.get<long long>();
    out << "\n";
}

bool proportional(const HomForm& a, const HomForm& b)
{
    if (a.degree() != b.degree() || a.is_zero() || b.is_zero()) return false;
    const FieldElement ca = a.terms().begin()->second, cb = b.terms().begin()->second;
    return a * cb == b * ca;
}

void contradiction_banner(std::ostream& out, unsigned r, const MembershipContradiction& e)
{
    const std::string bar(72, '!');
    out << bar << "\n"
        << "CONTRADICTION: the claimed counterexample fails, F lies in I^" << r << "\n"
        << e.what() << "\n"
        << "combination of the power-piece basis:\n"
        << vector_to_json(e.combination()).dump() << "\n"
        << bar << "\n";
}

}  // namespace

Dataset resolve_dataset(const DatasetChoice& choice)
{
    if (!choice.config_path.empty()) return dataset_from_json(read_json_file(choice.config_path));
    const std::string name = !choice.name.empty() ? choice.name : (choice.n ? "fp-even" : "");
    if (name.empty()) throw DatasetError("choose a dataset with --n, --dataset or --config");
    if (name != "fp-even") return named_dataset(name, 0, FieldMode::cyclotomic);
    const int n = choice.n.value_or(12);
    const FieldMode mode = choice.mode.value_or(n == 12 ? FieldMode::compact : FieldMode::cyclotomic);
    if (mode == FieldMode::compact && n != 12)
        throw DatasetError("--field compact is only available for n = 12; use --field cyclotomic");
    return fp_even_dataset(n, mode);
}

Expectation expected_verdict(const std::string& dataset, unsigned m, unsigned r)
{
    if (m >= 2 * r) return Expectation::containment;
    if ((dataset == "fp-even" || dataset == "dual-hesse") && m == 3 && r == 2) return Expectation::non_containment;
    if (dataset == "coordinate-points" && m == 2 && r == 2) return Expectation::non_containment;
    return Expectation::none;
}

std::string to_string(Expectation e)
{
    switch (e) {
    case Expectation::non_containment: return "non-containment";
    case Expectation::containment: return "containment";
    case Expectation::none: return "none";
    }
    return "none";
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err)
{
    if (opts.m < 1 || opts.r < 1) {
        err << "error: --m and --r must be positive\n";
        return usage;
    }
    Stopwatch clock;
    Dataset ds;
    try {
        ds = resolve_dataset(opts.data);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    const Expectation expect = expected_verdict(ds.name, opts.m, opts.r);
    json rep = {{"command", "verify"},  {"dataset", dataset_summary(ds)}, {"m", opts.m},
                {"r", opts.r},          {"expected", to_string(expect)},  {"verdict", "undecided"},
                {"confirmed", false},   {"operations", json::array()},    {"timings_ms", json::object()}};
    auto stage = [&](const char* name) {
        rep["operations"].push_back(name);
        rep["timings_ms"][name] = clock.lap();
    };
    stage("build");

    int code = failure;
    std::optional<MembershipContradiction> contradiction;
    try {
        const HomForm form = ds.product_form();
        const unsigned max_degree = opts.max_degree.value_or(form.degree());
        rep["form_degree"] = form.degree();
        rep["max_degree"] = max_degree;
        const FatPointScheme reduced = make_scheme(ds.field, ds.points, 1);

        const SymbolicReport sym = symbolic_member(form, reduced.with_multiplicity(opts.m));
        rep["form_in_symbolic_power"] = sym.member;
        stage("symbolic");

        const ContainmentReport cont = containment_check(reduced, opts.m, opts.r, max_degree);
        const auto& pres = cont.presentation;
        rep["gamma"] = pres.gamma ? json(*pres.gamma) : json(nullptr);
        rep["complete_to"] = pres.complete_to;
        rep["hilbert"] = hilbert_rows(pres.hilbert);
        json gdeg = json::array();
        for (const auto& g : pres.generators) gdeg.push_back(g.degree());
        rep["generator_degrees"] = gdeg;
        if (pres.gamma) rep["two_gamma_exceeds_lines"] = 2 * *pres.gamma > ds.lines.size();
        json degrees = json::array();
        json sym_hilbert = json::array();
        for (const auto& v : cont.degrees) {
            json row = {{"degree", v.degree},
                        {"symbolic_dim", v.symbolic_dim},
                        {"power_dim", v.power_dim},
                        {"contained", v.contained}};
            if (v.witness) row["witness"] = v.witness->str();
            degrees.push_back(row);
            sym_hilbert.push_back({v.degree, v.symbolic_dim});
        }
        rep["degrees"] = degrees;
        rep["symbolic_hilbert"] = sym_hilbert;
        const auto fail = cont.first_failure();
        rep["first_failure"] = fail ? json(*fail) : json(nullptr);
        if (fail) {
            const HomForm& w = *cont.degrees[*fail - cont.degrees.front().degree].witness;
            rep["witness"] = w.str();
            rep["witness_is_form"] = proportional(w, form);
        }
        rep["verdict"] = cont.holds() ? "containment" : "non-containment";
        stage("containment");

        rep["form_in_power"] = nullptr;
        switch (expect) {
        case Expectation::containment:
            rep["confirmed"] = cont.holds();
            break;
        case Expectation::none:
            rep["confirmed"] = true;
            break;
        case Expectation::non_containment: {
            if (!sym.member) {
                rep["error"] = "F does not lie in the symbolic power (check form_in_symbolic_power)";
                break;
            }
            const IdealPresentation cert_pres =
                max_degree >= form.degree() ? pres : presentation_for(reduced, form.degree(), opts.r);
            try {
                const Certificate cert = nonmember_certificate(form, cert_pres, reduced, opts.m, opts.r, ds.config());
                rep["form_in_power"] = false;
                json checks = json::object();
                for (const auto& [name, passed] : cert.checks) checks[name] = passed;
                rep["certificate"] = {{"checks", checks},
                                      {"path", opts.emit_cert.empty() ? json(nullptr) : json(opts.emit_cert)}};
                if (!opts.emit_cert.empty()) {
                    std::ofstream f(opts.emit_cert);
                    if (!f) throw DatasetError("cannot write " + opts.emit_cert);
                    f << cert.to_json().dump(2) << "\n";
                }
                rep["confirmed"] = fail.has_value();
                if (!fail) rep["error"] = "F is not in I^r but no degreewise failure was found up to --max-degree";
            } catch (const MembershipContradiction& e) {
                rep["form_in_power"] = true;
                rep["contradiction"] = {{"message", e.what()}, {"combination", vector_to_json(e.combination())}};
                rep["error"] = "claimed counterexample contradicted: F lies in I^r";
                contradiction.emplace(e);
            }
            stage("certificate");
            break;
        }
        }
        code = rep["confirmed"].get<bool>() ? ok : failure;
    } catch (const DatasetError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        rep["error"] = e.what();
        code = failure;
    }
    rep["exit_code"] = code;

    if (contradiction) contradiction_banner(err, opts.r, *contradiction);
    if (opts.json)
        out << rep.dump(2) << "\n";
    else
        print_verify_text(rep, out);
    return code;
}

int cmd_certificate(const std::string& path, bool json_out, std::ostream& out, std::ostream& err)
{
    Certificate cert;
    try {
        cert = Certificate::from_json(read_json_file(path));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    VerificationResult v;
    try {
        v = verify_certificate(cert);
    } catch (const std::exception& e) {
        err << "error: certificate could not be checked: " << e.what() << "\n";
        return failure;
    }
    if (json_out) {
        json checks = json::array();
        for (std::size_t i = 0; i < v.checks.size(); ++i)
            checks.push_back({{"index", i + 1},
                              {"name", v.checks[i].name},
                              {"passed", v.checks[i].passed},
                              {"detail", v.checks[i].detail}});
        out << json{{"command", "certificate"},
                    {"path", path},
                    {"checks", checks},
                    {"ok", v.ok()},
                    {"first_failure", v.first_failure()}}
                   .dump(2)
            << "\n";
    } else {
        for (std::size_t i = 0; i < v.checks.size(); ++i) {
            const auto& c = v.checks[i];
            out << "check " << i + 1 << " " << c.name << ": " << (c.passed ? "pass" : "FAIL");
            if (!c.passed) out << " (" << c.detail << ")";
            out << "\n";
        }
        if (v.ok())
            out << "certificate valid: F of degree " << cert.degree() << " is not in I^" << cert.power << "\n";
        else
            out << "certificate rejected at check " << v.first_failure() << " ("
                << v.checks[v.first_failure() - 1].name << ")\n";
    }
    return v.ok() ? ok : failure;
}

int cmd_render(const RenderCommandOptions& opts, std::ostream& out, std::ostream& err)
{
    try {
        const Dataset ds = resolve_dataset(opts.data);
        RenderOptions ro;
        ro.show_ordinary = opts.show_ordinary;
        const std::string svg = render_svg(ds, ro);
        if (opts.svg.empty()) {
            out << svg;
        } else {
            std::ofstream f(opts.svg, std::ios::binary);
            if (!f) throw DatasetError("cannot write " + opts.svg);
            f << svg;
            out << "wrote " << opts.svg << " (" << ds.lines.size() << " lines, " << ds.points.size() << " points)\n";
        }
        return ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

int cmd_hilbert(const HilbertOptions& opts, std::ostream& out, std::ostream& err)
{
    Dataset ds;
    try {
        ds = resolve_dataset(opts.data);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    if (opts.m < 1) {
        err << "error: --m must be positive\n";
        return usage;
    }
    const unsigned max_degree = opts.max_degree.value_or(static_cast<unsigned>(ds.lines.size()));
    const auto dims = hilbert_function(make_scheme(ds.field, ds.points, opts.m), max_degree);
    std::optional<std::size_t> first;
    for (std::size_t d = 0; d < dims.size() && !first; ++d)
        if (dims[d] > 0) first = d;
    if (opts.json) {
        out << json{{"command", "hilbert"},
                    {"dataset", dataset_summary(ds)},
                    {"m", opts.m},
                    {"table", hilbert_rows(dims)},
                    {"first_positive", first ? json(*first) : json(nullptr)}}
                   .dump(2)
            << "\n";
        return ok;
    }
    out << "dataset " << dataset_line(dataset_summary(ds)) << ", " << ds.points.size() << " points, multiplicity "
        << opts.m << "\n";
    out << " d  dim\n";
    for (std::size_t d = 0; d < dims.size(); ++d) {
        out << std::setw(2) << d << "  " << dims[d];
        if (first && d == *first) out << "   <- first nonzero degree";
        out << "\n";
    }
    return ok;
}

int cmd_scan(const ScanOptions& opts, std::ostream& out, std::ostream& err)
{
    json rows = json::array();
    bool all_ok = true;
    for (int n : opts.ns) {
        Stopwatch clock;
        json row = {{"n", n}};
        try {
            if (n < 12 || n % 2 != 0) throw DatasetError("scan needs even n >= 12");
            DatasetChoice choice;
            choice.n = n;
            choice.mode = opts.mode;
            const Dataset ds = resolve_dataset(choice);
            row["points"] = ds.points.size();
            row["formula"] = expected_triple_count(n);
            row["formula_ok"] = static_cast<int>(ds.points.size()) == expected_triple_count(n);
            const ContainmentReport rep =
                containment_check(make_scheme(ds.field, ds.points, 1), opts.m, opts.r, static_cast<unsigned>(n),
                                  static_cast<unsigned>(n));
            const auto& v = rep.degrees.front();
            row["symbolic_dim"] = v.symbolic_dim;
            row["power_dim"] = v.power_dim;
            row["contained_at_n"] = v.contained;
            row["verdict"] = v.contained ? "containment" : "non-containment";
            if (!row["formula_ok"].get<bool>()) all_ok = false;
        } catch (const std::exception& e) {
            row["error"] = e.what();
            all_ok = false;
        }
        row["ms"] = clock.lap();
        rows.push_back(row);
        if (!opts.json) {
            out << "n=" << std::setw(2) << n;
            if (row.contains("error")) {
                out << "  error: " << row["error"].get<std::string>();
            } else {
                out << "  points " << row["points"].get<std::size_t>() << " (formula " << row["formula"].get<int>()
                    << (row["formula_ok"].get<bool>() ? ", ok" : ", MISMATCH") << ")  dim I^(" << opts.m << ")_n "
                    << row["symbolic_dim"].get<std::size_t>() << "  degree-" << n << " verdict "
                    << row["verdict"].get<std::string>();
            }
            out << "  " << row["ms"].get<long long>() << " ms\n";
        }
    }
    if (opts.json) out << json{{"command", "scan"}, {"m", opts.m}, {"r", opts.r}, {"rows", rows}}.dump(2) << "\n";
    if (!all_ok) err << "scan: some rows failed\n";
    return all_ok ? ok : failure;
}

int cmd_config_build(const DatasetChoice& data, std::ostream& out, std::ostream& err)
{
    try {
        out << resolve_dataset(data).config().dump(2) << "\n";
        return ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

int cmd_config_triples(const DatasetChoice& data, bool json_out, std::ostream& out, std::ostream& err)
{
    Dataset ds;
    try {
        ds = resolve_dataset(data);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    const IntersectionStats stats = classify_intersections(ds.lines);
    json clusters = json::array();
    for (const auto& c : stats.clusters) {
        if (static_cast<int>(c.lines.size()) < ds.point_multiplicity) continue;
        clusters.push_back({{"point", point_to_json(c.point)}, {"text", c.point.str()}, {"lines", c.lines}});
    }
    json hist = json::object();
    for (const auto& [mult, count] : stats.histogram) hist[std::to_string(mult)] = count;
    if (json_out) {
        out << json{{"command", "config triples"},
                    {"dataset", dataset_summary(ds)},
                    {"points", clusters},
                    {"histogram", hist},
                    {"points_per_line", stats.points_per_line},
                    {"crossings_per_line", stats.crossings_per_line}}
                   .dump(2)
            << "\n";
        return ok;
    }
    out << "dataset " << dataset_line(dataset_summary(ds)) << "\n";
    out << clusters.size() << " points of multiplicity >= " << ds.point_multiplicity << "\n";
    for (const auto& c : clusters) {
        out << "  " << c.at("text").get<std::string>() << "  lines";
        for (int l : c.at("lines")) out << " " << l;
        out << "\n";
    }
    out << "multiplicity histogram:";
    for (const auto& [mult, count] : stats.histogram) out << " " << mult << "->" << count;
    out << "\npoints (mult >= 3) per line:";
    for (int c : stats.points_per_line) out << " " << c;
    out << "\n";
    return ok;
}

}  // namespace sympow::cli
