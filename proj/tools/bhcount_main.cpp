// bhcount command line driver. All functionality goes through the shared
// library's C API (bhcount.h); this file owns argument parsing, CSV and
// plot-script emission, and exit-code mapping (0 ok, 2 input, 3 internal).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bhcount.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { bhc_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
    void operator()(bhc_poly* p) const { bhc_poly_free(p); }
};
using Poly = std::unique_ptr<bhc_poly, PolyDeleter>;

struct ReportDeleter {
    void operator()(bhc_report* r) const { bhc_report_free(r); }
};
using Report = std::unique_ptr<bhc_report, ReportDeleter>;

[[noreturn]] void die(bhc_status st) {
    std::cerr << "error: " << bhc_last_error() << "\n";
    std::exit(st == BHC_OK ? 3 : static_cast<int>(st));
}

Poly parse_poly_or_die(const std::string& text, const std::string& vars) {
    bhc_poly* p = nullptr;
    bhc_status st = bhc_poly_parse(text.c_str(), vars.c_str(), &p);
    if (st != BHC_OK) die(st);
    return Poly(p);
}

std::vector<int64_t> parse_int_list(const std::string& s) {
    std::vector<int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (...) {
            std::cerr << "error: bad integer list entry '" << item << "'\n";
            std::exit(2);
        }
    }
    if (out.empty()) {
        std::cerr << "error: empty integer list\n";
        std::exit(2);
    }
    return out;
}

std::string field(const bhc_report* r, const char* name) {
    CStr s(bhc_report_field(r, name));
    return s ? std::string(s.get()) : std::string("0");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) {
        std::cerr << "error: cannot open output file " << path << "\n";
        std::exit(2);
    }
    return file;
}

const char* kCsvHeader = "B,count,irreducible,reducible,zero,degree_drop,elapsed_ms";

// elapsed_ms carries the deterministic work counter so that identical
// configurations give byte-identical CSVs; wall-clock time goes to text mode.
void csv_row(std::ostream& os, int64_t B, const bhc_report* r) {
    CStr value(bhc_report_value(r));
    os << B << "," << value.get() << "," << field(r, "irreducible") << ","
       << field(r, "reducible") << "," << field(r, "zero") << "," << field(r, "degree_drop")
       << "," << field(r, "work") << "\n";
}

void text_report(std::ostream& os, const bhc_report* r, double wall_ms) {
    CStr value(bhc_report_value(r));
    os << "count: " << value.get() << "\n";
    if (bhc_report_has_breakdown(r)) {
        os << "irreducible: " << field(r, "irreducible") << "\n";
        os << "reducible: " << field(r, "reducible") << "\n";
        os << "zero: " << field(r, "zero") << "\n";
        os << "degree_drop: " << field(r, "degree_drop") << "\n";
    }
    os << "work: " << field(r, "work") << "\n";
    os << "elapsed_ms: " << static_cast<long long>(wall_ms) << "\n";
}

struct CounterArgs {
    std::string kind;
    const bhc_poly* poly = nullptr;
    int64_t B = 0;
    size_t svars = 0;  // reducible-special only
    bool include_zero = false;
    bool relax_leading = false;
};

// run one counter at a single height; aux reports the interpolated points
Report run_counter(const CounterArgs& a) {
    bhc_report* r = nullptr;
    bhc_status st = BHC_OK;
    if (a.kind == "affine") {
        std::vector<int64_t> box(bhc_poly_num_vars(a.poly), a.B);
        st = bhc_count_affine(a.poly, box.data(), box.size(), &r);
    } else if (a.kind == "proj") {
        st = bhc_count_projective(a.poly, a.B, &r);
    } else if (a.kind == "biproj") {
        st = bhc_count_biprojective(a.poly, a.B, a.B, &r);
    } else if (a.kind == "reducible-special") {
        std::vector<int64_t> box(a.svars, a.B);
        st = bhc_count_reducible_special(a.poly, box.data(), box.size(),
                                         a.include_zero ? 1 : 0, &r);
    } else if (a.kind == "root-special") {
        st = bhc_count_root_special(a.poly, a.B, a.include_zero ? 1 : 0,
                                    a.relax_leading ? 1 : 0, &r);
    } else {
        std::cerr << "error: unknown counter kind '" << a.kind << "'\n";
        std::exit(2);
    }
    if (st != BHC_OK) die(st);
    return Report(r);
}

int cmd_fit(const std::string& in_path, const std::string& out_path);
int cmd_plot_script(const std::string& in_path, const std::string& out_path);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact bounded-height point counting and Hilbert-irreducibility experiments"};
    app.require_subcommand(1);

    std::string poly_text, vars, heights, schedule, counter, out_path, in_path, format = "text";
    int64_t seed = 0;
    int kk = 0, jj = 0, dim = 0;
    size_t svars = 0;
    bool include_zero = false, relax_leading = false;

    auto add_common = [&](CLI::App* sub, bool needs_poly) {
        if (needs_poly) {
            sub->add_option("--poly", poly_text, "polynomial text")->required();
            sub->add_option("--vars", vars, "comma separated variable order")->required();
        }
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
        sub->add_option("--seed", seed, "seed echoed into derived experiment configs");
    };

    auto* c_aff = app.add_subcommand("count-affine", "N_Q(f, B_1..B_n)");
    add_common(c_aff, true);
    c_aff->add_option("--height", heights, "B or B1,..,Bn")->required();

    auto* c_proj = app.add_subcommand("count-proj", "N_proj(f, B)");
    add_common(c_proj, true);
    c_proj->add_option("--height", heights, "B")->required();

    auto* c_bi = app.add_subcommand("count-biproj", "N_{P1xP1}(f, B1, B2)");
    add_common(c_bi, true);
    c_bi->add_option("--height", heights, "B1,B2 (or a single B)")->required();

    auto* c_hil = app.add_subcommand("hilbert-count", "S(f, B_1..B_s); first s vars specialised");
    add_common(c_hil, true);
    c_hil->add_option("--height", heights, "B1,..,Bs")->required();
    c_hil->add_flag("--include-zero-fibres", include_zero, "count zero specialisations");

    auto* c_root = app.add_subcommand("root-count", "R(f, B); first variable is the root variable");
    add_common(c_root, true);
    c_root->add_option("--height", heights, "B")->required();
    c_root->add_flag("--include-zero-fibres", include_zero, "count zero specialisations");
    c_root->add_flag("--relax-leading", relax_leading,
                     "allow a non-constant leading coefficient (prints a warning)");

    auto* c_res = app.add_subcommand("resolvent", "(k,j)-resolvent; last variable is the main one");
    add_common(c_res, true);
    c_res->add_option("--k", kk, "subset size")->required();
    c_res->add_option("--j", jj, "symmetric function index")->required();

    auto* c_pom = app.add_subcommand("pomega", "irreducible resolvent factors of Z-degree >= 2");
    add_common(c_pom, true);

    auto* c_aux = app.add_subcommand("aux-poly", "auxiliary polynomial via the determinant method");
    add_common(c_aux, true);
    c_aux->add_option("--height", heights, "B1,B2 (or a single B)")->required();

    auto* c_enum = app.add_subcommand("enumerate", "rationals (or projective points) of height <= B");
    add_common(c_enum, false);
    c_enum->add_option("--height", heights, "B")->required();
    c_enum->add_option("--dim", dim, "projective dimension (0 = rationals)");

    auto* c_exp = app.add_subcommand("experiment", "counter sweep over a height schedule, CSV out");
    add_common(c_exp, true);
    c_exp->add_option("--counter", counter, "affine|proj|biproj|reducible-special|root-special|aux")
        ->required();
    c_exp->add_option("--schedule", schedule, "comma separated strictly increasing heights")
        ->required();
    c_exp->add_option("--svars", svars, "specialised variables for reducible-special (default n-1)");
    c_exp->add_flag("--include-zero-fibres", include_zero, "count zero specialisations");

    auto* c_fit = app.add_subcommand("fit", "least-squares exponent of a CSV series");
    c_fit->add_option("--in", in_path, "CSV with B,count columns")->required();
    c_fit->add_option("--out", out_path, "output path (default stdout)");

    auto* c_plot = app.add_subcommand("plot-script", "emit a python plot script for a CSV");
    c_plot->add_option("--in", in_path, "CSV with the experiment schema")->required();
    c_plot->add_option("--out", out_path, "script path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ofstream file;

    if (c_enum->parsed()) {
        auto hs = parse_int_list(heights);
        CStr text(dim > 0 ? bhc_enumerate_projective_text(hs[0], dim)
                          : bhc_enumerate_rationals_text(hs[0]));
        if (!text) die(BHC_ERR_INPUT);
        std::ostream& os = open_out(file, out_path);
        os << text.get() << "\n";
        return 0;
    }

    if (c_fit->parsed()) return cmd_fit(in_path, out_path);
    if (c_plot->parsed()) return cmd_plot_script(in_path, out_path);

    Poly poly = parse_poly_or_die(poly_text, vars);

    if (c_res->parsed()) {
        bhc_poly* r = nullptr;
        bhc_status st = bhc_resolvent(poly.get(), kk, jj, &r);
        if (st != BHC_OK) die(st);
        Poly res(r);
        CStr text(bhc_poly_to_string(res.get()));
        std::ostream& os = open_out(file, out_path);
        os << text.get() << "\n";
        return 0;
    }

    if (c_pom->parsed()) {
        bhc_pomega_list* pw = nullptr;
        bhc_status st = bhc_pomega(poly.get(), &pw);
        if (st != BHC_OK) die(st);
        std::ostream& os = open_out(file, out_path);
        for (size_t i = 0; i < bhc_pomega_size(pw); ++i) {
            CStr fct(bhc_pomega_factor(pw, i));
            os << "k=" << bhc_pomega_k(pw, i) << " j=" << bhc_pomega_j(pw, i) << " "
               << fct.get() << "\n";
        }
        bhc_pomega_free(pw);
        return 0;
    }

    if (c_aux->parsed()) {
        auto hs = parse_int_list(heights);
        int64_t b1 = hs[0], b2 = hs.size() > 1 ? hs[1] : hs[0];
        bhc_aux* aux = nullptr;
        bhc_status st = bhc_find_auxiliary(poly.get(), b1, b2, &aux);
        if (st != BHC_OK) die(st);
        CStr g(bhc_aux_poly(aux));
        std::ostream& os = open_out(file, out_path);
        os << "M1: " << bhc_aux_m1(aux) << "\n";
        os << "M2: " << bhc_aux_m2(aux) << "\n";
        os << "points: " << bhc_aux_points(aux) << "\n";
        os << "rank: " << bhc_aux_rank(aux) << "\n";
        os << "monomials: " << bhc_aux_cols(aux) << "\n";
        os << "g: " << g.get() << "\n";
        bhc_aux_free(aux);
        return 0;
    }

    if (c_exp->parsed()) {
        auto sched = parse_int_list(schedule);
        for (size_t i = 1; i < sched.size(); ++i) {
            if (sched[i] <= sched[i - 1]) {
                std::cerr << "error: schedule must be strictly increasing\n";
                return 2;
            }
        }
        std::ostream& os = open_out(file, out_path);
        if (counter == "aux") {
            os << kCsvHeader << "\n";
            for (int64_t B : sched) {
                bhc_aux* aux = nullptr;
                bhc_status st = bhc_find_auxiliary(poly.get(), B, B, &aux);
                if (st != BHC_OK) die(st);
                os << B << "," << bhc_aux_points(aux) << ",0,0,0,0,0\n";
                bhc_aux_free(aux);
            }
            return 0;
        }
        CounterArgs args;
        args.kind = counter;
        args.poly = poly.get();
        args.include_zero = include_zero;
        args.relax_leading = relax_leading;
        args.svars = svars ? svars : static_cast<size_t>(bhc_poly_num_vars(poly.get())) - 1;
        os << kCsvHeader << "\n";
        for (int64_t B : sched) {
            args.B = B;
            Report rep = run_counter(args);
            csv_row(os, B, rep.get());
        }
        return 0;
    }

    // single-height counters
    auto hs = parse_int_list(heights);
    bhc_report* r = nullptr;
    bhc_status st = BHC_OK;
    auto t0 = std::chrono::steady_clock::now();
    if (c_aff->parsed()) {
        std::vector<int64_t> box = hs;
        if (box.size() == 1) box.assign(bhc_poly_num_vars(poly.get()), hs[0]);
        st = bhc_count_affine(poly.get(), box.data(), box.size(), &r);
    } else if (c_proj->parsed()) {
        st = bhc_count_projective(poly.get(), hs[0], &r);
    } else if (c_bi->parsed()) {
        st = bhc_count_biprojective(poly.get(), hs[0], hs.size() > 1 ? hs[1] : hs[0], &r);
    } else if (c_hil->parsed()) {
        st = bhc_count_reducible_special(poly.get(), hs.data(), hs.size(),
                                         include_zero ? 1 : 0, &r);
    } else if (c_root->parsed()) {
        if (relax_leading)
            std::cerr << "warning: relaxed mode, the leading coefficient may vanish\n";
        st = bhc_count_root_special(poly.get(), hs[0], include_zero ? 1 : 0,
                                    relax_leading ? 1 : 0, &r);
    }
    if (st != BHC_OK) die(st);
    Report rep(r);
    double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::ostream& os = open_out(file, out_path);
    if (format == "csv") {
        os << kCsvHeader << "\n";
        csv_row(os, hs[0], rep.get());
    } else {
        text_report(os, rep.get(), wall_ms);
    }
    return 0;
}

namespace {

// rows of a CSV with the experiment schema; only B and count are used
bool read_csv_series(const std::string& path, std::vector<std::pair<double, double>>& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return false;
    }
    std::string line;
    if (!std::getline(in, line)) {
        std::cerr << "error: empty CSV " << path << "\n";
        return false;
    }
    if (line.rfind("B,count", 0) != 0) {
        std::cerr << "error: unexpected CSV header in " << path << "\n";
        return false;
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string b, c;
        if (!std::getline(ss, b, ',') || !std::getline(ss, c, ',')) {
            std::cerr << "error: malformed CSV row '" << line << "'\n";
            return false;
        }
        try {
            out.emplace_back(std::stod(b), std::stod(c));
        } catch (...) {
            std::cerr << "error: malformed CSV row '" << line << "'\n";
            return false;
        }
    }
    return true;
}

int cmd_fit(const std::string& in_path, const std::string& out_path) {
    std::vector<std::pair<double, double>> series;
    if (!read_csv_series(in_path, series)) return 2;
    std::vector<double> bs, cs;
    for (auto& [b, c] : series) {
        bs.push_back(b);
        cs.push_back(c);
    }
    double slope = 0, intercept = 0, residual = 0;
    bhc_status st = bhc_fit_exponent(bs.data(), cs.data(), bs.size(), &slope, &intercept,
                                     &residual);
    if (st != BHC_OK) die(st);
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    os << "slope " << slope << "\n";
    os << "intercept " << intercept << "\n";
    os << "residual " << residual << "\n";
    return 0;
}

int cmd_plot_script(const std::string& in_path, const std::string& out_path) {
    std::vector<std::pair<double, double>> series;
    if (!read_csv_series(in_path, series)) return 2;
    if (series.empty()) {
        std::cerr << "error: no data rows in " << in_path << "\n";
        return 2;
    }
    size_t positive = 0;
    for (auto& [b, c] : series)
        if (c > 0) ++positive;

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return 2;
    }
    out << "#!/usr/bin/env python3\n";
    out << "# log-log plot of " << in_path << " with a least-squares overlay\n";
    if (positive < 2)
        out << "# warning: fewer than two positive counts, no fitted line\n";
    out << "import csv, math\n";
    out << "import matplotlib\n";
    out << "matplotlib.use('Agg')\n";
    out << "import matplotlib.pyplot as plt\n\n";
    out << "rows = []\n";
    out << "with open(" << std::quoted(in_path) << ") as f:\n";
    out << "    for row in csv.DictReader(f):\n";
    out << "        b, c = float(row['B']), float(row['count'])\n";
    out << "        if c > 0:\n";
    out << "            rows.append((b, c))\n\n";
    out << "xs = [b for b, _ in rows]\n";
    out << "ys = [c for _, c in rows]\n";
    out << "fig, ax = plt.subplots()\n";
    out << "ax.set_xscale('log')\n";
    out << "ax.set_yscale('log')\n";
    out << "ax.scatter(xs, ys, label='count')\n";
    if (positive >= 2) {
        out << "lx = [math.log(x) for x in xs]\n";
        out << "ly = [math.log(y) for y in ys]\n";
        out << "n = len(lx)\n";
        out << "sx, sy = sum(lx), sum(ly)\n";
        out << "sxx = sum(x * x for x in lx)\n";
        out << "sxy = sum(x * y for x, y in zip(lx, ly))\n";
        out << "slope = (n * sxy - sx * sy) / (n * sxx - sx * sx)\n";
        out << "inter = (sy - slope * sx) / n\n";
        out << "fit = [math.exp(inter) * x ** slope for x in xs]\n";
        out << "ax.plot(xs, fit, label='slope %.3f' % slope)\n";
    }
    out << "ax.set_xlabel('B')\n";
    out << "ax.set_ylabel('count')\n";
    out << "ax.legend()\n";
    out << "fig.savefig(" << std::quoted(out_path + ".png") << ", dpi=150)\n";
    return 0;
}

}  // namespace
