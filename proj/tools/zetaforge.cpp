// zetaforge command-line front end.
//
// Exit status: 0 ok, 1 usage or precondition, 2 input parse, 3 numerical,
// 4 catalog verification mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <zetaforge/zetaforge.hpp>

namespace zf = zetaforge;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, numerical = 3, mismatch = 4 };

struct Common {
    std::string graph_file;
    std::string ade;
    bool loops = false;
    std::string dimer;
    double tol = 1e-12;
    double merge = 1e-8;
    std::size_t horizon = 6;
    std::string format = "text";
    std::string out;

    zf::RootOptions roots() const
    {
        zf::RootOptions o;
        o.tolerance = tol;
        o.merge = merge;
        return o;
    }
};

void add_input(CLI::App* cmd, Common& c)
{
    auto* file = cmd->add_option("graph", c.graph_file, "Graph file (JSON)");
    auto* ade = cmd->add_option("--ade", c.ade, "Affine ADE generator, e.g. A2, D5, E8");
    auto* dimer = cmd->add_option("--dimer", c.dimer, "Dimer valencies, e.g. 3,4");
    cmd->add_flag("--loops", c.loops, "Add two loops per node to an --ade graph");
    file->excludes(ade)->excludes(dimer);
    ade->excludes(dimer);
}

void add_numeric(CLI::App* cmd, Common& c)
{
    cmd->add_option("--tol", c.tol, "Root-finding tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--merge", c.merge, "Root merge distance")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_output(CLI::App* cmd, Common& c, std::vector<std::string> formats)
{
    cmd->add_option("--format", c.format, "Output format")->capture_default_str()->check(CLI::IsMember(formats));
    cmd->add_option("--out", c.out, "Write output to this path instead of stdout");
}

zf::PartiallyDirectedGraph input_graph(const Common& c)
{
    if (!c.ade.empty()) return zf::ade_graph(zf::parse_ade(c.ade, c.loops));
    if (!c.dimer.empty()) return zf::dimer_graph(zf::parse_dimer(c.dimer));
    if (!c.graph_file.empty()) return zf::load_graph(c.graph_file);
    throw zf::precondition_error("no input: give a graph file, --ade or --dimer");
}

std::string roots_text(const zf::ComplexRootSet& s)
{
    std::string out;
    for (const auto& r : s.roots) {
        out += "  " + zf::format_double(r.value.real()) + " " + zf::format_double(r.value.imag()) +
               "  |z|=" + zf::format_double(std::abs(r.value)) + "  x" + std::to_string(r.multiplicity) + "\n";
    }
    return out;
}

std::string optional_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; }

std::string cmd_zeta(const Common& c)
{
    const auto p = zf::zeta_inverse(input_graph(c));
    if (c.format == "json") return zf::coefficients_json(p).dump(2) + "\n";
    if (c.format == "csv") {
        std::string out = "power,coefficient\n";
        for (std::size_t k = 0; k < p.coefficients().size(); ++k) out += std::to_string(k) + "," + p.coeff(k).str() + "\n";
        return out;
    }
    return p.to_coefficient_string() + "\n";
}

std::string cmd_rh(const Common& c)
{
    const auto r = zf::analyze(input_graph(c), c.roots());
    if (c.format == "json") return zf::report_json(r).dump(2) + "\n";
    std::ostringstream o;
    o << "zeta_inverse: " << r.zeta_inverse.to_string() << "\n"
      << "coefficients: " << r.zeta_inverse.to_coefficient_string() << "\n"
      << "R_G: " << zf::format_double(r.radius) << "\n"
      << "q: " << r.q << "\n"
      << "p: " << r.p << "\n"
      << "classification: " << zf::rh_letter(r.classification) << "\n"
      << "kotani_sunada: " << (r.kotani_sunada_ok ? "ok" : "violated") << "\n"
      << "ramanujan: " << optional_bool(r.ramanujan) << "\n"
      << "xi_functional: " << optional_bool(r.xi_functional_ok) << "\n"
      << "poles:\n"
      << roots_text(r.poles);
    return o.str();
}

std::string cmd_primes(const Common& c)
{
    const auto g = zf::normalize(input_graph(c));
    const auto census = zf::enumerate_primes(g, c.horizon);
    const auto zinv = zf::zeta_inverse(g);
    // the census is a brute-force oracle; the series must agree with it
    if (zf::log_derivative_series(zinv, c.horizon) != census.closed || zf::count_closed_paths(g, c.horizon) != census.closed)
        throw zf::inconsistency_error("primes: enumeration disagrees with the zeta series");
    double radius = std::numeric_limits<double>::infinity();
    if (!zinv.is_constant()) {
        for (const auto& r : zf::roots(zinv, c.roots()).roots) radius = std::min(radius, std::abs(r.value));
    }
    if (c.format == "json") return zf::census_json(census, radius).dump(2) + "\n";
    const auto rows = zf::census_table(census, radius);
    std::ostringstream o;
    if (c.format == "csv") {
        o << "m,N,pi,ratio\n";
        for (const auto& r : rows) o << r.m << "," << r.closed << "," << r.primes << "," << (r.ratio ? zf::format_double(*r.ratio) : "") << "\n";
        return o.str();
    }
    o << "delta: " << census.delta << "\n"
      << "R_G: " << zf::format_double(radius) << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%4s %22s %22s %14s\n", "m", "N_m", "pi(m)", "ratio");
    o << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%4zu %22s %22s %14s\n", r.m, r.closed.str().c_str(), r.primes.str().c_str(),
                      r.ratio ? zf::format_double(*r.ratio, 8).c_str() : "-");
        o << line;
    }
    return o.str();
}

std::string cmd_spectrum(const Common& c)
{
    const auto s = zf::spectrum(input_graph(c), c.roots());
    if (c.format == "json") return zf::roots_json(s).dump(2) + "\n";
    if (c.format == "csv") return "re,im,kind\n" + zf::plot_csv_rows(s, "eigenvalue");
    return "eigenvalues:\n" + roots_text(s);
}

std::string cmd_generate(const zf::PartiallyDirectedGraph& g) { return zf::graph_to_json(g).dump(2) + "\n"; }

std::string cmd_catalog_verify(const std::string& path, const Common& c, bool& failed)
{
    const auto records = zf::load_catalog(path);
    const auto rep = zf::verify_catalog(records, c.roots());
    failed = !rep.passed();
    std::ostringstream o;
    if (c.format == "json") {
        nlohmann::json j;
        j["rows"] = nlohmann::json::array();
        for (const auto& row : rep.rows) {
            nlohmann::json r;
            r["id"] = row.id;
            r["clean"] = row.clean();
            for (const auto& chk : row.checks) {
                r["checks"].push_back({{"field", chk.field},
                                       {"expected", chk.expected},
                                       {"actual", chk.actual},
                                       {"match", chk.match},
                                       {"erratum", chk.erratum}});
            }
            j["rows"].push_back(r);
        }
        j["failures"] = rep.failures().size();
        j["errata"] = rep.errata().size();
        j["passed"] = rep.passed();
        return j.dump(2) + "\n";
    }
    for (const auto& row : rep.rows) {
        o << "row " << row.id << ":";
        for (const auto& chk : row.checks) {
            o << " " << chk.field << "=" << (chk.match ? "ok" : chk.erratum ? "erratum" : "MISMATCH");
        }
        o << "\n";
        for (const auto& chk : row.checks) {
            if (chk.match) continue;
            o << "  " << chk.field << ": printed " << chk.expected << ", computed " << chk.actual
              << (chk.erratum ? " (known erratum)" : "") << "\n";
        }
    }
    o << "rows: " << rep.rows.size() << ", failures: " << rep.failures().size() << ", known errata: "
      << rep.errata().size() << "\n"
      << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return o.str();
}

struct Labelled {
    std::string label;
    zf::PartiallyDirectedGraph graph;
};

std::vector<Labelled> family_graphs(const std::string& family, const std::string& catalog)
{
    std::vector<Labelled> out;
    auto ade = [&](bool loops) {
        std::vector<zf::AdeSpec> specs;
        for (unsigned n : {0u, 1u, 2u, 3u, 4u, 5u}) specs.push_back({'A', n, loops});
        for (unsigned n : {4u, 5u, 6u, 7u, 8u}) specs.push_back({'D', n, loops});
        for (unsigned n : {6u, 7u, 8u}) specs.push_back({'E', n, loops});
        for (const auto& s : specs) out.push_back({s.name() + (loops ? "+loops" : ""), zf::ade_graph(s)});
    };
    if (family == "ade") {
        ade(false);
    } else if (family == "ade-loops") {
        ade(true);
    } else if (family == "dimers" || family == "quivers") {
        for (const auto& rec : zf::load_catalog(catalog)) {
            out.push_back({(family == "dimers" ? "dimer-" : "quiver-") + std::to_string(rec.id),
                           family == "dimers" ? rec.dimer() : rec.quiver_graph()});
        }
    } else {
        throw zf::precondition_error("export-plot: unknown family '" + family + "'");
    }
    return out;
}

std::string cmd_export_plot(const Common& c, const std::string& family, const std::string& catalog)
{
    auto rows = [&](const zf::PartiallyDirectedGraph& g, const std::string& label) {
        std::string s;
        const auto zinv = zf::zeta_inverse(g);
        if (!zinv.is_constant()) s += zf::plot_csv_rows(zf::roots(zinv, c.roots()), "pole", label);
        s += zf::plot_csv_rows(zf::spectrum(g, c.roots()), "eigenvalue", label);
        return s;
    };
    if (family.empty()) return "re,im,kind\n" + rows(input_graph(c), {});
    std::string out = "re,im,kind,graph\n";
    for (const auto& item : family_graphs(family, catalog)) out += rows(item.graph, item.label);
    return out;
}

void emit(const Common& c, const std::string& text)
{
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw zf::precondition_error("cannot write '" + c.out + "'");
    f << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ihara zeta functions of partially directed graphs"};
    app.require_subcommand(1, 1);
    Common c;
    std::string spec_arg;
    std::string family;
    std::string catalog = zf::default_catalog_path();

    auto* zeta = app.add_subcommand("zeta", "Print the coefficients of 1/zeta, constant term first");
    add_input(zeta, c);
    add_output(zeta, c, {"text", "json", "csv"});

    auto* rh = app.add_subcommand("rh", "Poles, R_G and Riemann Hypothesis classification");
    add_input(rh, c);
    add_numeric(rh, c);
    add_output(rh, c, {"text", "json"});

    auto* primes = app.add_subcommand("primes", "Closed geodesic and prime counts up to length L");
    add_input(primes, c);
    add_numeric(primes, c);
    primes->add_option("-L", c.horizon, "Horizon")->capture_default_str()->check(CLI::Range(1, 12));
    add_output(primes, c, {"text", "json", "csv"});

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the adjacency matrix");
    add_input(spectrum, c);
    add_numeric(spectrum, c);
    add_output(spectrum, c, {"text", "json", "csv"});

    auto* ade = app.add_subcommand("ade", "Write an affine ADE graph as JSON");
    ade->add_option("spec", spec_arg, "e.g. A2, D5, E8")->required();
    ade->add_flag("--loops", c.loops, "Add two loops per node");
    ade->add_option("--out", c.out, "Write output to this path instead of stdout");

    auto* dimer = app.add_subcommand("dimer", "Write a dimer graph as JSON");
    dimer->add_option("valencies", spec_arg, "e.g. 3,4")->required();
    dimer->add_option("--out", c.out, "Write output to this path instead of stdout");

    auto* verify = app.add_subcommand("catalog-verify", "Recompute every row of the bundled catalog");
    verify->add_option("--catalog", catalog, "Catalog file")->capture_default_str();
    add_numeric(verify, c);
    add_output(verify, c, {"text", "json"});

    auto* plot = app.add_subcommand("export-plot", "Write poles and eigenvalues as re,im,kind CSV");
    add_input(plot, c);
    add_numeric(plot, c);
    plot->add_option("--family", family, "ade, ade-loops, dimers or quivers instead of a single graph");
    plot->add_option("--catalog", catalog, "Catalog file for the dimers and quivers families");
    plot->add_option("--out", c.out, "Write output to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        bool failed = false;
        std::string text;
        if (app.got_subcommand(zeta)) {
            text = cmd_zeta(c);
        } else if (app.got_subcommand(rh)) {
            text = cmd_rh(c);
        } else if (app.got_subcommand(primes)) {
            text = cmd_primes(c);
        } else if (app.got_subcommand(spectrum)) {
            text = cmd_spectrum(c);
        } else if (app.got_subcommand(ade)) {
            text = cmd_generate(zf::ade_graph(zf::parse_ade(spec_arg, c.loops)));
        } else if (app.got_subcommand(dimer)) {
            text = cmd_generate(zf::dimer_graph(zf::parse_dimer(spec_arg)));
        } else if (app.got_subcommand(verify)) {
            text = cmd_catalog_verify(catalog, c, failed);
        } else if (app.got_subcommand(plot)) {
            text = cmd_export_plot(c, family, catalog);
        }
        emit(c, text);
        return failed ? Exit::mismatch : Exit::ok;
    } catch (const zf::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::parse;
    } catch (const zf::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    } catch (const zf::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::numerical;
    }
}
