#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "focklab/deform.hpp"
#include "focklab/io.hpp"
#include "focklab/quantize.hpp"
#include "focklab/suites.hpp"
#include "focklab/toeplitz.hpp"

using namespace focklab;
using nlohmann::json;

namespace {

struct Flags {
    std::string model;
    std::string phi;
    std::string suite;
    std::string out;
    int max_d = -1;
    int n = -1;
    std::uint64_t seed = 0;
    double tol = 0.0;
    bool as_json = false;
};

void emit(const Flags& fl, const std::string& text) {
    if (fl.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(fl.out, std::ios::binary);
    if (!os) throw input_error("cannot write " + fl.out);
    os << text;
}

RadialSymbol resolve_phi(const std::string& arg) {
    std::size_t i = arg.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && arg[i] == '{') return parse_phi_spec(arg);
    return parse_phi_spec(read_file(arg));
}

RepModel resolve_model(const std::string& arg) {
    std::size_t i = arg.find_first_not_of(" \t\r\n");
    std::string text = (i != std::string::npos && arg[i] == '{') ? arg : read_file(arg);
    return build_model(parse_model_spec(text));
}

int cmd_cbnorm(const Flags& fl) {
    RadialNormReport r = radial_norm_report(resolve_phi(fl.phi));
    std::ostringstream os;
    if (fl.as_json) {
        json j{{"c1", r.c1}, {"c2", r.c2}, {"support", r.support},
               {"hankel_trace_norm", r.hankel_trace_norm}, {"total", r.total}};
        os << j.dump() << '\n';
    } else {
        os << "c1 " << format17(r.c1) << '\n'
           << "c2 " << format17(r.c2) << '\n'
           << "support " << r.support << '\n'
           << "hankel_trace_norm " << format17(r.hankel_trace_norm) << '\n'
           << "total " << format17(r.total) << '\n';
    }
    emit(fl, os.str());
    return 0;
}

int cmd_pdnorm(const Flags& fl) {
    if (fl.max_d < 0) throw input_error("pdnorm needs --max-d >= 0");
    std::vector<PdRow> table = pd_table(fl.max_d);
    std::ostringstream os;
    if (fl.as_json) {
        json arr = json::array();
        for (const PdRow& r : table) {
            json row{{"d", r.d}, {"norm", r.norm}, {"asymptote", r.asymptote},
                     {"circulant_dev", r.circulant_dev}};
            if (std::isfinite(r.ratio)) row["ratio"] = r.ratio;
            else row["ratio"] = nullptr;
            arr.push_back(row);
        }
        os << arr.dump() << '\n';
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const PdRow& r : table)
            rows.push_back({std::to_string(r.d), format17(r.norm), format17(r.asymptote),
                            format17(r.ratio), format17(r.circulant_dev)});
        write_csv(os, {"d", "norm", "asymptote", "ratio", "circulant_dev"}, rows);
    }
    emit(fl, os.str());
    return 0;
}

int cmd_cmap(const Flags& fl) {
    if (fl.n < 1) throw input_error("cmap needs --n >= 1");
    RepModel m = resolve_model(fl.model);
    HaagerupElement h = haagerup_net(fl.n);
    if (h.capped) {
        std::cerr << "net search hit the size cap at n " << fl.n << '\n';
        return 1;
    }
    std::vector<double> values(h.d + 1);
    for (int k = 0; k <= h.d; ++k) values[k] = std::exp(-h.t * k);
    RadialSymbol phi = rs_finite(values);

    std::vector<Vec> f;
    for (int j = 0; j < m.d; ++j) f.push_back(m.kr.col(j));
    ContractionSpec t = band_approximant(m, f, 1.0 / (fl.n + 1.0));
    CmapElement e = cmap_map(m, phi, t);

    std::vector<std::vector<int>> words{{}, {0}};
    if (m.L >= 2) words.push_back({0, 1 % m.d});
    if (m.L >= 3) words.push_back({0, 1 % m.d, 2 % m.d});
    std::vector<double> residuals;
    for (const auto& w : words) {
        SparseVec probe{{index_of_word(m.fock, w), cplx(1.0)}};
        SparseVec r = cmap_apply(m, e, probe);
        sv_axpy(r, cplx(-1.0), probe);
        residuals.push_back(sv_norm(r));
    }

    std::ostringstream os;
    if (fl.as_json) {
        json j{{"n", fl.n}, {"t", h.t}, {"d", h.d}, {"rank", e.rank},
               {"certificate", e.certificate}, {"telescope_bound", h.telescope_bound},
               {"probe_residuals", residuals}};
        os << j.dump() << '\n';
    } else {
        os << "n " << fl.n << '\n'
           << "t " << format17(h.t) << '\n'
           << "d " << h.d << '\n'
           << "rank " << format17(e.rank) << '\n'
           << "certificate " << format17(e.certificate) << '\n'
           << "telescope_bound " << format17(h.telescope_bound) << '\n';
        os << "probe_residuals";
        for (double r : residuals) os << ' ' << format17(r);
        os << '\n';
    }
    emit(fl, os.str());
    return 0;
}

int cmd_verify(const Flags& fl) {
    SuiteReport r = run_suite(fl.suite, fl.seed, fl.tol);
    std::ostringstream os;
    if (fl.as_json) {
        json j{{"suite", r.suite}, {"cases", r.cases}, {"max_residual", r.max_residual},
               {"tolerance", r.tolerance}, {"pass", r.pass}, {"diagnostics", r.diagnostics}};
        os << j.dump() << '\n';
    } else {
        os << "suite " << r.suite << '\n'
           << "cases " << r.cases << '\n'
           << "max_residual " << format17(r.max_residual) << '\n'
           << "tolerance " << format17(r.tolerance) << '\n'
           << "pass " << (r.pass ? "yes" : "no") << '\n';
        for (const std::string& d : r.diagnostics) os << "fail " << d << '\n';
    }
    emit(fl, os.str());
    return r.pass ? 0 : 1;
}

int cmd_moments(const Flags& fl) {
    if (fl.n < 1) throw input_error("moments needs --n >= 1");
    RepModel m = resolve_model(fl.model);
    if (m.L < 2 * fl.n) {
        std::ostringstream msg;
        msg << "truncation too small: k-max " << fl.n << " needs max_degree >= " << 2 * fl.n;
        throw input_error(msg.str());
    }
    Vec xi = m.kr.col(0);
    double catalan = 1.0;
    std::vector<std::vector<std::string>> rows;
    json arr = json::array();
    for (int k = 1; k <= fl.n; ++k) {
        catalan *= 2.0 * (2.0 * k - 1.0) / (k + 1.0);
        double even = std::real(state_moment(m, xi, 2 * k));
        double err = std::abs(even - catalan);
        double odd = std::abs(state_moment(m, xi, 2 * k - 1));
        if (fl.as_json) {
            arr.push_back(json{{"k", k}, {"moment", even}, {"catalan", catalan},
                               {"error", err}, {"odd_moment", odd}});
        } else {
            rows.push_back({std::to_string(k), format17(even), format17(catalan),
                            format17(err), format17(odd)});
        }
    }
    std::ostringstream os;
    if (fl.as_json) os << arr.dump() << '\n';
    else write_csv(os, {"k", "moment", "catalan", "error", "odd_moment"}, rows);
    emit(fl, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for truncated Fock spaces and radial multipliers"};
    app.require_subcommand(1);
    Flags fl;

    CLI::App* cb = app.add_subcommand("cbnorm", "completely bounded norm of a radial multiplier");
    cb->add_option("--phi", fl.phi, "phi JSON file or inline spec")->required();

    CLI::App* pd = app.add_subcommand("pdnorm", "norm table for degree cutoff projections");
    pd->add_option("--max-d", fl.max_d, "largest cutoff degree")->required();

    CLI::App* cm = app.add_subcommand("cmap", "approximation net element and certificate");
    cm->add_option("--model", fl.model, "model JSON file or inline spec")->required();
    cm->add_option("--n", fl.n, "net index")->required();

    CLI::App* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("suite", fl.suite, "suite name")->required();

    CLI::App* mo = app.add_subcommand("moments", "even moments against the Catalan numbers");
    mo->add_option("--model", fl.model, "model JSON file or inline spec")->required();
    mo->add_option("--n", fl.n, "largest k")->required();

    for (CLI::App* sub : {cb, pd, cm, ve, mo}) {
        sub->add_option("--seed", fl.seed, "rng seed");
        sub->add_option("--tol", fl.tol, "tolerance override");
        sub->add_option("--out", fl.out, "write the report to a file");
        sub->add_flag("--json", fl.as_json, "machine readable output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cb->parsed()) return cmd_cbnorm(fl);
        if (pd->parsed()) return cmd_pdnorm(fl);
        if (cm->parsed()) return cmd_cmap(fl);
        if (ve->parsed()) return cmd_verify(fl);
        if (mo->parsed()) return cmd_moments(fl);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
