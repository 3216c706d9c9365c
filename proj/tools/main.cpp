#include <iostream>

#include <CLI11.hpp>

#include "sympow/commands.hpp"

using namespace sympow;

namespace {

const std::map<std::string, FieldMode> kModes{{"compact", FieldMode::compact}, {"cyclotomic", FieldMode::cyclotomic}};

void add_dataset_flags(CLI::App* app, cli::DatasetChoice& d)
{
    app->add_option("--n", d.n, "fp-even configuration with n lines (even)");
    app->add_option("--dataset", d.name, "fp-even, coordinate-points or dual-hesse")
        ->check(CLI::IsMember({"fp-even", "coordinate-points", "dual-hesse"}));
    app->add_option("--config", d.config_path, "JSON file with \"lines\" (and optional \"field\")");
    app->add_option("--field", d.mode, "number field for fp-even: compact (n = 12 only) or cyclotomic")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact symbolic-power containment checks for line arrangements"};
    app.require_subcommand(1);

    cli::VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "build, certify and report I^(m) vs I^r");
    add_dataset_flags(v, verify.data);
    v->add_option("--m", verify.m, "symbolic multiplicity")->capture_default_str();
    v->add_option("--r", verify.r, "ordinary power")->capture_default_str();
    v->add_option("--max-degree", verify.max_degree, "last degree examined (default: degree of F)");
    v->add_option("--emit-cert", verify.emit_cert, "write the non-membership certificate here");
    v->add_flag("--json", verify.json, "JSON report");

    std::string cert_path;
    bool cert_json = false;
    auto* c = app.add_subcommand("certificate", "re-verify a certificate file");
    c->add_option("path", cert_path, "certificate JSON")->required();
    c->add_flag("--json", cert_json, "JSON report");

    cli::RenderCommandOptions render;
    auto* rd = app.add_subcommand("render", "draw the arrangement as SVG");
    add_dataset_flags(rd, render.data);
    rd->add_option("--svg", render.svg, "output path (default stdout)");
    rd->add_flag("--show-ordinary", render.show_ordinary, "mark double points as well");

    cli::HilbertOptions hilbert;
    auto* h = app.add_subcommand("hilbert", "Hilbert function of the fat point ideal");
    add_dataset_flags(h, hilbert.data);
    h->add_option("--m", hilbert.m, "multiplicity")->capture_default_str();
    h->add_option("--max-degree", hilbert.max_degree, "last degree (default: number of lines)");
    h->add_flag("--json", hilbert.json, "JSON report");

    cli::ScanOptions scan;
    scan.ns = {14, 16, 18, 20};
    auto* s = app.add_subcommand("scan", "triple counts and degree-n verdicts over several n");
    s->add_option("--n", scan.ns, "values of n")->capture_default_str();
    s->add_option("--field", scan.mode, "compact or cyclotomic")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    s->add_option("--m", scan.m)->capture_default_str();
    s->add_option("--r", scan.r)->capture_default_str();
    s->add_flag("--json", scan.json, "JSON report");

    cli::DatasetChoice build_data, triples_data;
    bool triples_json = false;
    auto* cfg = app.add_subcommand("config", "inspect configurations");
    cfg->require_subcommand(1);
    auto* cb = cfg->add_subcommand("build", "print the configuration JSON");
    add_dataset_flags(cb, build_data);
    auto* ct = cfg->add_subcommand("triples", "list multiple points and intersection statistics");
    add_dataset_flags(ct, triples_data);
    ct->add_flag("--json", triples_json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::usage;
    }

    try {
        if (*v) return cli::cmd_verify(verify, std::cout, std::cerr);
        if (*c) return cli::cmd_certificate(cert_path, cert_json, std::cout, std::cerr);
        if (*rd) return cli::cmd_render(render, std::cout, std::cerr);
        if (*h) return cli::cmd_hilbert(hilbert, std::cout, std::cerr);
        if (*s) return cli::cmd_scan(scan, std::cout, std::cerr);
        if (*cb) return cli::cmd_config_build(build_data, std::cout, std::cerr);
        if (*ct) return cli::cmd_config_triples(triples_data, triples_json, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::failure;
    }
    return cli::usage;
}
