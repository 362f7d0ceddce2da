// Batch interface: parse a complex document, run one operation, print a
// deterministic JSON report. Exit 0 on success, 1 when a mathematical check
// fails, 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "facelim/higher_limits.hpp"
#include "facelim/models.hpp"
#include "facelim/report.hpp"
#include "facelim/stanley_reisner.hpp"
#include "facelim/version.hpp"

using namespace facelim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open '" + file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

json summary_json(const ModuleSummary& s) {
    json out;
    out["free_rank"] = s.free_rank;
    json torsion = json::array();
    for (const auto& d : s.torsion) torsion.push_back(d.get_str());
    out["torsion"] = std::move(torsion);
    return out;
}

json check_json(const CheckResult& r) {
    json out;
    out["pass"] = r.pass;
    out["witness"] = r.witness;
    return out;
}

json faces_json(const SimplicialComplex& k, const std::vector<Face>& faces) {
    json out = json::array();
    for (const Face& f : faces) {
        json one = json::array();
        for (int v : f.vertices()) one.push_back(k.labels()[v]);
        out.push_back(std::move(one));
    }
    return out;
}

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json series_json(const HilbertSeries& s) {
    json out;
    json num = json::array();
    for (const auto& c : s.numerator) num.push_back(c.get_str());
    out["numerator"] = std::move(num);
    out["denominator_power"] = s.denominator_power;
    out["display"] = s.str();
    return out;
}

struct NamedCheck {
    std::string name;
    CheckResult result;
};

// The per-document verification battery; order is fixed so reports are
// byte-stable. Tasks are independent and may run on any number of threads.
std::vector<NamedCheck> run_verify_all(const SimplicialComplex& k, const std::vector<CoefficientDomain>& domains,
                                       int j_max, int i_max, int cutoff, int threads) {
    struct Task {
        std::string name;
        std::function<CheckResult()> run;
    };
    std::vector<Task> tasks;

    for (const auto& dom : domains) {
        tasks.push_back({"sharpness[" + dom.name() + "]",
                         [&k, dom, i_max, j_max] { return verify_sharpness(k, dom, i_max, j_max); }});
        tasks.push_back({"fat[" + dom.name() + "]", [&k, dom, j_max] {
                             for (int j = 0; j <= j_max; ++j) {
                                 CheckResult r = is_fat(exp_cohomology_diagram(k, j, dom).contra);
                                 if (!r.pass) return CheckResult::fail("degree " + std::to_string(j) + " at " + r.witness);
                             }
                             return CheckResult::ok();
                         }});
        tasks.push_back({"twin[" + dom.name() + "]", [&k, dom, j_max] {
                             for (int j = 0; j <= j_max; ++j) {
                                 TwinPair t = exp_cohomology_diagram(k, j, dom);
                                 CheckResult f = validate_functoriality(t.contra);
                                 if (!f.pass) return f;
                                 CheckResult r = validate_twin(t);
                                 if (!r.pass) return r;
                             }
                             return CheckResult::ok();
                         }});
        tasks.push_back({"edge-iso[" + dom.name() + "]",
                         [&k, dom, j_max] { return edge_iso_check(k, dom, j_max); }});
        tasks.push_back({"kan[" + dom.name() + "]", [&k, dom, i_max] {
                             for (const Face& mu : k.facets()) {
                                 SimplicialComplex j = delete_maximal(k, mu);
                                 for (int deg = 0; deg <= 2; ++deg) {
                                     FaceDiagram dj = exp_cohomology_diagram(j, deg, dom).contra;
                                     FaceDiagram ext = right_kan_extension(dj, k, mu);
                                     for (int n = 0; n <= i_max; ++n)
                                         if (higher_limit(ext, n) != higher_limit(dj, n))
                                             return CheckResult::fail("facet " + k.face_name(mu) + ", degree " +
                                                                      std::to_string(deg) + ", level " +
                                                                      std::to_string(n));
                                 }
                             }
                             return CheckResult::ok();
                         }});
    }
    tasks.push_back({"ci-classification", [&k, cutoff] {
                         auto p = ci_detect(k);
                         if (!p) return CheckResult::ok();  // nothing further to verify
                         CheckResult kz = koszul_cohomology_check(*p, cutoff);
                         if (!kz.pass) return kz;
                         return hilbert_ci_identity(*p, cutoff);
                     }});

    std::vector<NamedCheck> results(tasks.size());
    if (threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = {tasks[i].name, tasks[i].run()};
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = {tasks[i].name, tasks[i].run()};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

std::vector<CoefficientDomain> parse_domains(const std::string& csv) {
    std::vector<CoefficientDomain> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(CoefficientDomain::parse(item));
    if (out.empty()) throw InputError("empty domain list");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Stanley-Reisner / face-diagram limit calculator"};
    app.require_subcommand(1);

    std::string file;
    std::string coeffs = "Q";
    // i_max < 0 means "number of faces", the longest possible chain
    int degree = 1, j_max = 3, i_max = -1, max_degree = 6, cutoff = 10, threads = 1;
    std::string domains_csv = "Q,F2,F3,Z";

    auto add_input = [&](CLI::App* cmd) { cmd->add_option("--file", file, "read the document from a file"); };

    auto* c_faces = app.add_subcommand("faces", "list all faces and facets");
    add_input(c_faces);
    auto* c_nonfaces = app.add_subcommand("nonfaces", "list the minimal non-faces");
    add_input(c_nonfaces);
    auto* c_hilbert = app.add_subcommand("hilbert", "Hilbert function and series");
    add_input(c_hilbert);
    c_hilbert->add_option("--max-degree", max_degree, "largest polynomial degree reported");
    auto* c_basis = app.add_subcommand("sr-basis", "monomial basis in one degree");
    add_input(c_basis);
    c_basis->add_option("--degree", degree, "polynomial degree");
    auto* c_lim = app.add_subcommand("lim", "limit of the degree-j cohomology diagram");
    add_input(c_lim);
    c_lim->add_option("--coeffs", coeffs, "coefficient domain (Q, Z, F<p>)");
    c_lim->add_option("--degree", degree, "polynomial degree");
    auto* c_hlim = app.add_subcommand("higher-lim", "derived limits of the degree-j diagram");
    add_input(c_hlim);
    c_hlim->add_option("--coeffs", coeffs, "coefficient domain");
    c_hlim->add_option("--degree", degree, "polynomial degree");
    c_hlim->add_option("--imax", i_max, "largest derived level");
    auto* c_bk = app.add_subcommand("bk-table", "derived-limit table of the cohomology diagrams");
    add_input(c_bk);
    c_bk->add_option("--coeffs", coeffs, "coefficient domain");
    c_bk->add_option("--jmax", j_max, "largest polynomial degree");
    c_bk->add_option("--imax", i_max, "largest derived level");
    auto* c_fat = app.add_subcommand("fat-check", "fatness of the cohomology diagrams");
    add_input(c_fat);
    c_fat->add_option("--coeffs", coeffs, "coefficient domain");
    c_fat->add_option("--jmax", j_max, "largest polynomial degree");
    auto* c_twin = app.add_subcommand("twin-check", "twin identities of the cohomology diagrams");
    add_input(c_twin);
    c_twin->add_option("--coeffs", coeffs, "coefficient domain");
    c_twin->add_option("--jmax", j_max, "largest polynomial degree");
    auto* c_kan = app.add_subcommand("kan-check", "right Kan extension preserves derived limits");
    add_input(c_kan);
    c_kan->add_option("--coeffs", coeffs, "coefficient domain");
    c_kan->add_option("--jmax", j_max, "largest polynomial degree");
    c_kan->add_option("--imax", i_max, "largest derived level");
    auto* c_edge = app.add_subcommand("edge-check", "ring isomorphism onto the limit algebra");
    add_input(c_edge);
    c_edge->add_option("--coeffs", coeffs, "coefficient domain");
    c_edge->add_option("--jmax", j_max, "largest polynomial degree");
    auto* c_ci = app.add_subcommand("ci", "complete-intersection classification");
    add_input(c_ci);
    auto* c_model = app.add_subcommand("model", "minimal model of a complete-intersection complex");
    add_input(c_model);
    auto* c_koszul = app.add_subcommand("koszul-check", "acyclicity of the model against the face ring");
    add_input(c_koszul);
    c_koszul->add_option("--cutoff", cutoff, "largest topological degree checked");
    auto* c_aut = app.add_subcommand("aut-gens", "automorphism generators of the face ring");
    add_input(c_aut);
    auto* c_all = app.add_subcommand("verify-all", "full verification battery on one document");
    add_input(c_all);
    c_all->add_option("--domains", domains_csv, "comma-separated coefficient domains");
    c_all->add_option("--jmax", j_max, "largest polynomial degree");
    c_all->add_option("--imax", i_max, "largest derived level");
    c_all->add_option("--cutoff", cutoff, "largest topological degree for model checks");
    c_all->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    ComplexDocument doc = parse_document(read_input(file));
    SimplicialComplex k = to_complex(doc);
    if (i_max < 0) i_max = (c_all->parsed() || c_kan->parsed()) ? 4 : k.face_count();

    json result;
    std::string command;
    int exit_code = kExitOk;

    if (c_faces->parsed()) {
        command = "faces";
        result["vertices"] = k.labels();
        result["face_count"] = k.face_count();
        result["dim"] = k.dim();
        result["faces"] = faces_json(k, k.faces());
        result["facets"] = faces_json(k, k.facets());
    } else if (c_nonfaces->parsed()) {
        command = "nonfaces";
        result["minimal_nonfaces"] = faces_json(k, minimal_nonfaces(k));
    } else if (c_hilbert->parsed()) {
        command = "hilbert";
        StanleyReisnerAlgebra a{k, CoefficientDomain::rationals()};
        json values = json::array();
        for (int j = 0; j <= max_degree; ++j) values.push_back(hilbert_function(a, j));
        result["values"] = std::move(values);
        HilbertSeries s = hilbert_series(a, std::min(max_degree, 8));
        result["series"] = series_json(s);
        result["series_reduced"] = series_json(s.reduced());
    } else if (c_basis->parsed()) {
        command = "sr-basis";
        StanleyReisnerAlgebra a{k, CoefficientDomain::rationals()};
        json monomials = json::array();
        for (const MultiSet& ms : basis(a, degree)) monomials.push_back(ms.monomial(k.labels()));
        result["degree"] = degree;
        result["monomials"] = std::move(monomials);
    } else if (c_lim->parsed()) {
        command = "lim";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        LimitModule lm = limit(exp_cohomology_diagram(k, degree, dom).contra);
        result["degree"] = degree;
        result["coeffs"] = dom.name();
        result["rank"] = lm.rank();
    } else if (c_hlim->parsed()) {
        command = "higher-lim";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        FaceDiagram d = exp_cohomology_diagram(k, degree, dom).contra;
        json levels = json::array();
        for (int i = 0; i <= i_max; ++i) {
            json one = summary_json(higher_limit(d, i));
            one["i"] = i;
            levels.push_back(std::move(one));
        }
        result["degree"] = degree;
        result["coeffs"] = dom.name();
        result["levels"] = std::move(levels);
    } else if (c_bk->parsed()) {
        command = "bk-table";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        E2Table table = bk_e2_table(k, dom, i_max, j_max);
        json cells = json::array();
        for (const auto& [key, value] : table.entries) {
            json cell = summary_json(value);
            cell["i"] = key.first;
            cell["j"] = key.second;
            cells.push_back(std::move(cell));
        }
        result["coeffs"] = dom.name();
        result["imax"] = i_max;
        result["jmax"] = j_max;
        result["cells"] = std::move(cells);
    } else if (c_fat->parsed()) {
        command = "fat-check";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        CheckResult r = CheckResult::ok();
        for (int j = 0; j <= j_max && r.pass; ++j) {
            r = is_fat(exp_cohomology_diagram(k, j, dom).contra);
            if (!r.pass) r.witness = "degree " + std::to_string(j) + " at " + r.witness;
        }
        result = check_json(r);
        result["coeffs"] = dom.name();
        if (!r.pass) exit_code = kExitCheckFailed;
    } else if (c_twin->parsed()) {
        command = "twin-check";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        CheckResult r = CheckResult::ok();
        for (int j = 0; j <= j_max && r.pass; ++j) {
            TwinPair t = exp_cohomology_diagram(k, j, dom);
            r = validate_functoriality(t.contra);
            if (r.pass) r = validate_twin(t);
        }
        result = check_json(r);
        result["coeffs"] = dom.name();
        if (!r.pass) exit_code = kExitCheckFailed;
    } else if (c_kan->parsed()) {
        command = "kan-check";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        CheckResult r = CheckResult::ok();
        for (const Face& mu : k.facets()) {
            SimplicialComplex j = delete_maximal(k, mu);
            for (int deg = 0; deg <= j_max && r.pass; ++deg) {
                FaceDiagram dj = exp_cohomology_diagram(j, deg, dom).contra;
                FaceDiagram ext = right_kan_extension(dj, k, mu);
                for (int n = 0; n <= i_max; ++n)
                    if (higher_limit(ext, n) != higher_limit(dj, n)) {
                        r = CheckResult::fail("facet " + k.face_name(mu) + ", degree " + std::to_string(deg) +
                                              ", level " + std::to_string(n));
                        break;
                    }
            }
            if (!r.pass) break;
        }
        result = check_json(r);
        result["coeffs"] = dom.name();
        if (!r.pass) exit_code = kExitCheckFailed;
    } else if (c_edge->parsed()) {
        command = "edge-check";
        CoefficientDomain dom = CoefficientDomain::parse(coeffs);
        CheckResult r = edge_iso_check(k, dom, j_max);
        result = check_json(r);
        result["coeffs"] = dom.name();
        if (!r.pass) exit_code = kExitCheckFailed;
    } else if (c_ci->parsed()) {
        command = "ci";
        std::string why;
        auto p = ci_detect(k, &why);
        result["is_ci"] = p.has_value();
        if (p) {
            result["lambdas"] = faces_json(k, p->lambdas);
            result["n_total"] = p->n_total();
        } else {
            result["reason"] = why;
        }
    } else if (c_model->parsed()) {
        command = "model";
        std::string why;
        auto p = ci_detect(k, &why);
        if (!p) {
            result["pass"] = false;
            result["witness"] = "not a complete intersection: " + why;
            exit_code = kExitCheckFailed;
        } else {
            SullivanModel model = minimal_model(*p);
            json gens = json::array();
            for (const auto& g : model.generators)
                gens.push_back(json{{"name", g.name}, {"degree", g.degree}, {"parity", g.odd ? "odd" : "even"}});
            json diffs = json::array();
            for (size_t i = 0; i < model.differentials.size(); ++i) {
                MultiSet ms(k.vertex_count());
                for (int v : model.differentials[i].vertices()) ms.exponents[v] = 1;
                diffs.push_back("d w(" + std::to_string(i + 1) + ") = " + ms.monomial(k.labels()));
            }
            result["generators"] = std::move(gens);
            result["differentials"] = std::move(diffs);
            result["d_squared_zero"] = model.d_squared_zero();
        }
    } else if (c_koszul->parsed()) {
        command = "koszul-check";
        std::string why;
        auto p = ci_detect(k, &why);
        if (!p) {
            result["pass"] = false;
            result["witness"] = "not a complete intersection: " + why;
            exit_code = kExitCheckFailed;
        } else {
            CheckResult r = koszul_cohomology_check(*p, cutoff);
            CheckResult h = hilbert_ci_identity(*p, cutoff);
            result = check_json(r.pass ? h : r);
            result["cutoff"] = cutoff;
            if (!r.pass || !h.pass) exit_code = kExitCheckFailed;
        }
    } else if (c_aut->parsed()) {
        command = "aut-gens";
        std::string why;
        auto p = ci_detect(k, &why);
        if (!p) {
            result["pass"] = false;
            result["witness"] = "not a complete intersection: " + why;
            exit_code = kExitCheckFailed;
        } else {
            AutGeneratorSet gens = automorphism_generators(*p);
            json free_part = json::array();
            for (int v : gens.free_vertices) free_part.push_back(k.labels()[v]);
            result["gl_block_vertices"] = std::move(free_part);
            result["lambda_blocks"] = faces_json(k, gens.lambda_blocks);
            result["sigma_group_order"] = gens.sigma_group_order;
            json sample = json::array();
            for (const auto& [name, mat] : gens.generators)
                sample.push_back(json{{"name", name}, {"matrix", matrix_json(mat)}});
            result["generators"] = std::move(sample);
        }
    } else if (c_all->parsed()) {
        command = "verify-all";
        auto checks = run_verify_all(k, parse_domains(domains_csv), j_max, i_max, cutoff, threads);
        bool all_pass = true;
        json list = json::array();
        for (const auto& [name, r] : checks) {
            all_pass = all_pass && r.pass;
            json one = check_json(r);
            one["name"] = name;
            list.push_back(std::move(one));
        }
        result["checks"] = std::move(list);
        result["pass"] = all_pass;
        if (!all_pass) exit_code = kExitCheckFailed;
    }

    std::cout << make_report(command, doc, std::move(result)).dump(2) << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
