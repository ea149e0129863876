#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dentedhex/formulas.hpp"
#include "dentedhex/json_io.hpp"
#include "dentedhex/render.hpp"
#include "dentedhex/verify.hpp"

namespace {

using namespace dhx;

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

struct SpecInput {
    std::string spec_file;
    int a = 0, b = 0, c = 0, t = 0;
    std::string u_csv, v_csv;

    void attach(CLI::App* cmd) {
        cmd->add_option("--spec", spec_file, "spec JSON file ({\"a\":..,\"u\":[..],..})");
        cmd->add_option("-a", a, "north side");
        cmd->add_option("-b", b, "southwest side");
        cmd->add_option("-c", c, "southeast side");
        cmd->add_option("-t", t, "long/short side difference");
        cmd->add_option("-u", u_csv, "northeast dent indices, e.g. 2,5");
        cmd->add_option("-v", v_csv, "northwest dent indices, e.g. 3");
    }

    DentedHexParams resolve() const {
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw std::invalid_argument("cannot open spec file: " + spec_file);
            std::stringstream buf;
            buf << in.rdbuf();
            return params_from_json(buf.str());
        }
        DentedHexParams p{a, b, c, t, parse_csv_ints(u_csv), parse_csv_ints(v_csv)};
        if (std::string err = p.validate(); !err.empty()) throw std::invalid_argument(err);
        return p;
    }
};

void write_output(const std::string& out_file, const std::string& text) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out) throw std::runtime_error("cannot write: " + out_file);
    out << text;
}

bool has_closed_form(const DentedHexParams& p) {
    auto is_block = [](const std::vector<int>& w) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1] != w[i] + 1) return false;
        return true;
    };
    if (p.m() == 0 || p.n() == 0) return true;
    if (p.u.front() == 1 && p.v.front() == 1) return false;
    return is_block(p.u) && is_block(p.v);
}

int run_count(const SpecInput& input, const std::string& method) {
    DentedHexParams p = input.resolve();
    if (!p.balanced()) {
        CountReport rep;
        rep.params = p;
        rep.counts.emplace_back("balance", BigInt(0));
        rep.notes.push_back("unbalanced: t != m + n, count is 0");
        std::cout << count_report_to_json(rep, false);
        return 0;
    }
    bool tileable = is_tileable(p);
    std::vector<CountMethod> methods;
    if (method == "auto")
        methods = {has_closed_form(p) ? CountMethod::Formula : CountMethod::Lgv};
    else if (method == "brute")
        methods = {CountMethod::Brute};
    else if (method == "lgv")
        methods = {CountMethod::Lgv};
    else
        methods = {CountMethod::Formula};
    CountReport rep = cross_check(p, methods);
    if (rep.counts.empty()) {  // formula inapplicable; fall back
        rep = cross_check(p, {CountMethod::Lgv});
        rep.notes.push_back("fell back to lgv");
    }
    std::cout << count_report_to_json(rep, tileable);
    return 0;
}

int run_tileable(const SpecInput& input) {
    DentedHexParams p = input.resolve();
    int witness = tileability_witness(p);  // throws if unbalanced
    std::cout << tileable_report_to_json(p, witness == 0, witness);
    return 0;
}

int run_render(const SpecInput& input, const std::string& format, const std::string& which,
               const std::string& out_file) {
    DentedHexParams p = input.resolve();
    RenderKind kind = which == "region"         ? RenderKind::Region
                      : which == "first_tiling" ? RenderKind::FirstTiling
                                                : RenderKind::Paths;
    std::string text;
    try {
        text = format == "svg" ? render_svg(p, kind) : render_ascii(p, kind);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    write_output(out_file, text);
    return 0;
}

VerifyBounds parse_bounds(const std::string& spec) {
    VerifyBounds b;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--bounds expects key=value pairs (a,b,c,dents)");
        std::string key = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (key == "a")
            b.max_a = value;
        else if (key == "b")
            b.max_b = value;
        else if (key == "c")
            b.max_c = value;
        else if (key == "dents")
            b.max_dents = value;
        else
            throw std::invalid_argument("--bounds: unknown key '" + key + "'");
    }
    return b;
}

int run_verify(const std::string& suite, const std::string& bounds_csv, std::uint64_t seed,
               const std::string& out_file, const std::string& inject_fault) {
    VerifyBounds bounds = bounds_csv.empty() ? VerifyBounds{} : parse_bounds(bounds_csv);
    if (inject_fault == "ubar-off-by-one") bounds.fault_ubar_offset = 1;
    std::vector<SuiteResult> results;
    if (suite == "cross" || suite == "all") results.push_back(cross_suite(bounds));
    if (suite == "kuo" || suite == "all") results.push_back(kuo_suite(20, seed));
    if (suite == "monotone" || suite == "all") results.push_back(monotonicity_suite(bounds));
    if (suite == "poly" || suite == "all") results.push_back(polynomiality_suite(bounds, bounds.max_a));
    std::ostringstream report;
    bool all_pass = true;
    for (const SuiteResult& r : results) {
        report << r.to_text();
        all_pass = all_pass && r.passed;
    }
    report << (all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n");
    write_output(out_file, report.str());
    if (!out_file.empty()) std::cout << report.str();
    return all_pass ? 0 : 1;
}

int run_sweep(int max_a, int max_b, int max_c, int max_dents, const std::string& bounds_csv,
              const std::string& method, const std::string& out_file) {
    if (!bounds_csv.empty()) {
        VerifyBounds b = parse_bounds(bounds_csv);
        max_a = b.max_a;
        max_b = b.max_b;
        max_c = b.max_c;
        max_dents = b.max_dents;
    }
    std::ostringstream csv;
    csv << "a,b,c,t,u,v,tileable,count,method,ms\n";
    for (int a = 0; a <= max_a; ++a) {
        for (int b = 0; b <= max_b; ++b) {
            for (int c = 0; c <= max_c; ++c) {
                for (const DentedHexParams& p : enumerate_shapes(a, b, c, max_dents)) {
                    std::vector<CountMethod> methods;
                    if (method == "auto")
                        methods = {has_closed_form(p) ? CountMethod::Formula : CountMethod::Lgv};
                    else if (method == "brute")
                        methods = {CountMethod::Brute};
                    else if (method == "lgv")
                        methods = {CountMethod::Lgv};
                    else
                        methods = {CountMethod::Formula};
                    CountReport rep = cross_check(p, methods);
                    if (rep.counts.empty()) rep = cross_check(p, {CountMethod::Lgv});
                    auto join = [](const std::vector<int>& w) {
                        std::string s;
                        for (std::size_t i = 0; i < w.size(); ++i)
                            s += (i ? " " : "") + std::to_string(w[i]);
                        return s;
                    };
                    csv << p.a << ',' << p.b << ',' << p.c << ',' << p.t << ",\"" << join(p.u)
                        << "\",\"" << join(p.v) << "\"," << (is_tileable(p) ? 1 : 0) << ','
                        << rep.counts.front().second.str() << ',' << rep.counts.front().first
                        << ',' << rep.timings_ms.front().second << "\n";
                }
            }
        }
    }
    write_output(out_file, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lozenge tiling counts for dented hexagons"};
    app.require_subcommand(1);

    SpecInput count_spec, tileable_spec, render_spec;
    std::string method = "auto", format = "svg", which = "region", out_file;
    std::string suite = "all", bounds_csv, inject_fault;
    std::uint64_t seed = 20240811;
    int max_a = 2, max_b = 2, max_c = 2, max_dents = 2;

    CLI::App* cmd_count = app.add_subcommand("count", "count tilings of a dented hexagon");
    count_spec.attach(cmd_count);
    cmd_count->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "brute", "lgv", "formula"}));

    CLI::App* cmd_tileable = app.add_subcommand("tileable", "decide tileability (mu_N criterion)");
    tileable_spec.attach(cmd_tileable);

    CLI::App* cmd_render = app.add_subcommand("render", "render region, tiling, or paths");
    render_spec.attach(cmd_render);
    cmd_render->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));
    cmd_render->add_option("--which", which)
        ->check(CLI::IsMember({"region", "first_tiling", "paths"}));
    cmd_render->add_option("--out", out_file);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run cross-method verification suites");
    cmd_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"cross", "kuo", "monotone", "poly", "all"}));
    cmd_verify->add_option("--bounds", bounds_csv, "e.g. a=2,b=3,c=3,dents=2");
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--out", out_file);
    cmd_verify->add_option("--inject-fault", inject_fault)->group("");  // harness self-test

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "Cartesian parameter grid to CSV");
    cmd_sweep->add_option("--max-a", max_a);
    cmd_sweep->add_option("--max-b", max_b);
    cmd_sweep->add_option("--max-c", max_c);
    cmd_sweep->add_option("--max-dents", max_dents);
    cmd_sweep->add_option("--bounds", bounds_csv, "e.g. a=2,b=3,c=3,dents=2");
    cmd_sweep->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "brute", "lgv", "formula"}));
    cmd_sweep->add_option("--out", out_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_count->parsed()) return run_count(count_spec, method);
        if (cmd_tileable->parsed()) return run_tileable(tileable_spec);
        if (cmd_render->parsed()) return run_render(render_spec, format, which, out_file);
        if (cmd_verify->parsed()) return run_verify(suite, bounds_csv, seed, out_file, inject_fault);
        if (cmd_sweep->parsed())
            return run_sweep(max_a, max_b, max_c, max_dents, bounds_csv, method, out_file);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
