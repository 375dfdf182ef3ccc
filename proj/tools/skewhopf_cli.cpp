#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "skewhopf/expr.hpp"
#include "skewhopf/fileformat.hpp"

using namespace skewhopf;
using json = nlohmann::ordered_json;

namespace {

struct Run {
    std::string command;
    std::string input;  // hashed: file bytes and positional arguments
    Report report;
    std::optional<uint64_t> seed;
    std::vector<std::string> lines;
    json info = json::object();
};

std::string fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream o;
    o << std::hex << std::setw(16) << std::setfill('0') << h;
    return o.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

struct Input {
    std::string text;
    TomlDoc doc;
};

Input read_input(Run& run, const std::string& path) {
    Input in{slurp(path), {}};
    run.input += in.text;
    in.doc = toml_parse(in.text);
    return in;
}

Presentation need_presentation(const TomlDoc& d) {
    if (!has_presentation(d)) throw FormatError("file has no presentation ([variables] or catalog = ...)");
    return load_presentation(d);
}

HopfData need_finite_hopf(const TomlDoc& d, const std::string& name) {
    if (!name.empty()) return load_finite_hopf(d, name);
    auto names = finite_hopf_names(d);
    if (names.empty()) throw FormatError("file has no [finite_hopf.<name>] section");
    if (names.size() > 1) throw FormatError("several finite Hopf algebras in file; pick one with --name");
    return load_finite_hopf(d, names[0]);
}

json matrix_json(const LinMap& m) {
    json cols = json::array();
    const size_t n = m.cod().size();
    for (const auto& c : m.cols()) {
        std::vector<std::string> dense(n, "0");
        for (const auto& [i, v] : c.entries()) dense[i] = v.str();
        cols.push_back(dense);
    }
    return cols;
}

json hopf_json(const HopfData& H) {
    const size_t n = H.dim();
    LinMap mul(H.alg.field(), Space{n, n}, Space{n});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) mul.cols()[i * n + j] = H.alg.product(i, j);
    return json{{"basis", H.alg.labels()},
                {"columns", "one column per domain basis element"},
                {"mul", matrix_json(mul)},
                {"delta", matrix_json(H.delta)},
                {"epsilon", matrix_json(H.eps)},
                {"antipode", matrix_json(H.S)}};
}

std::vector<std::string> vectors_text(const std::vector<std::string>& labels, const std::vector<SVec>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(write_combination({&labels}, Space{labels.size()}, v));
    return out;
}

// Delta(ab) = Delta(a)Delta(b) on random integer combinations.
void random_multiplicative(Run& run, const HopfData& H, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    const size_t n = H.dim();
    FinDimAlg HH = tensor_alg(H.alg, H.alg);
    auto random_vec = [&] {
        SVec v;
        for (size_t i = 0; i < n; ++i) v.add(i, Scalar(coef(rng)));
        return v;
    };
    const int samples = 8;
    for (int s = 0; s < samples; ++s) {
        SVec a = random_vec(), b = random_vec();
        if (H.delta.apply(H.alg.mul(a, b)) != HH.mul(H.delta.apply(a), H.delta.apply(b))) {
            run.report.add("random_multiplicative", false, "sample " + std::to_string(s));
            return;
        }
    }
    run.report.add("random_multiplicative", true).dims = {samples};
}

void print_human(const Run& run, std::ostream& o) {
    for (const auto& l : run.lines) o << l << "\n";
    for (const auto& c : run.report.checks) {
        o << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (c.rank) o << "  rank " << *c.rank;
        if (!c.dims.empty()) {
            o << "  dims ";
            for (size_t i = 0; i < c.dims.size(); ++i) o << (i ? "x" : "") << c.dims[i];
        }
        if (!c.pass && !c.witness.empty()) o << "  witness: " << c.witness;
        o << "\n";
    }
    if (run.report.degree_bound) o << "degree bound " << *run.report.degree_bound << "\n";
    if (run.seed) o << "seed " << *run.seed << "\n";
    if (!run.report.checks.empty()) {
        size_t bad = 0;
        for (const auto& c : run.report.checks) bad += !c.pass;
        if (bad) o << bad << " of " << run.report.checks.size() << " checks failed\n";
        else o << "all " << run.report.checks.size() << " checks passed\n";
    }
}

void print_json(const Run& run, std::ostream& o) {
    json j;
    j["command"] = run.command;
    j["input_hash"] = fnv1a(run.input);
    j["checks"] = json::array();
    for (const auto& c : run.report.checks) {
        json cj{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.empty()) cj["witness"] = c.witness;
        if (c.rank) cj["rank"] = *c.rank;
        if (!c.dims.empty()) cj["dims"] = c.dims;
        j["checks"].push_back(cj);
    }
    if (run.report.degree_bound) j["degree_bound"] = *run.report.degree_bound;
    if (run.seed) j["seed"] = *run.seed;
    if (!run.info.empty()) j["info"] = run.info;
    o << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew PBW extensions, finite Hopf algebras, Hopf Galois objects and quantum torsors"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::optional<uint64_t> seed;
    int degree = 3;
    std::string name;
    app.add_flag("--json", as_json, "emit the JSON report");
    app.add_option("--seed", seed, "seed for randomized checks");

    std::string file, a1, a2;
    std::vector<std::string> params;
    Run run;
    std::function<void()> action;

    auto with_file = [&](CLI::App* sc) { sc->add_option("file", file, "input file")->required(); };

    auto* nf = app.add_subcommand("nf", "normal form of a word expression");
    with_file(nf);
    nf->add_option("expr", a1)->required();
    nf->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            run.input += "\n" + a1;
            auto r = normal_form(need_presentation(in.doc), a1).str();
            run.lines.push_back(r);
            run.info["result"] = r;
        };
    });

    auto* mul = app.add_subcommand("mul", "product of two expressions");
    with_file(mul);
    mul->add_option("e1", a1)->required();
    mul->add_option("e2", a2)->required();
    mul->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            run.input += "\n" + a1 + "\n" + a2;
            auto p = need_presentation(in.doc);
            auto r = multiply(normal_form(p, a1), normal_form(p, a2)).str();
            run.lines.push_back(r);
            run.info["result"] = r;
        };
    });

    auto* pbw = app.add_subcommand("pbw", "overlap (diamond) check of a presentation");
    with_file(pbw);
    pbw->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            run.report = pbw_check(need_presentation(in.doc)).to_report();
        };
    });

    auto* hopf = app.add_subcommand("hopf", "Hopf algebra checks");
    hopf->require_subcommand(1);
    auto* hcheck = hopf->add_subcommand("check", "Hopf axioms");
    with_file(hcheck);
    hcheck->add_option("--degree", degree, "degree bound for presented algebras")->check(CLI::NonNegativeNumber);
    hcheck->add_option("--name", name, "finite Hopf algebra to use");
    hcheck->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            if (has_presentation(in.doc) && has_gen_hopf(in.doc)) {
                auto p = load_presentation(in.doc);
                run.report = check_hopf_on_generators(load_gen_hopf(in.doc, p), degree);
                return;
            }
            HopfData H = need_finite_hopf(in.doc, name);
            run.report = check_hopf(H);
            if (auto o = antipode_order(H)) run.info["antipode_order"] = *o;
            if (run.seed) random_multiplicative(run, H, *run.seed);
        };
    });
    auto* hint = hopf->add_subcommand("integrals", "left and right integrals");
    with_file(hint);
    hint->add_option("--name", name, "finite Hopf algebra to use");
    hint->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            HopfData H = need_finite_hopf(in.doc, name);
            auto r = integrals(H);
            run.report = r.report;
            const auto& L = H.alg.labels();
            run.info["left"] = vectors_text(L, r.left);
            run.info["right"] = vectors_text(L, r.right);
            run.info["unimodular"] = r.unimodular;
            run.info["semisimple"] = r.semisimple;
            for (const auto& v : vectors_text(L, r.left)) run.lines.push_back("left integral: " + v);
            for (const auto& v : vectors_text(L, r.right)) run.lines.push_back("right integral: " + v);
            run.lines.push_back(std::string("unimodular: ") + (r.unimodular ? "yes" : "no"));
            run.lines.push_back(std::string("semisimple: ") + (r.semisimple ? "yes" : "no"));
        };
    });
    auto* hdual = hopf->add_subcommand("dual", "dual Hopf algebra");
    with_file(hdual);
    hdual->add_option("--name", name, "finite Hopf algebra to use");
    hdual->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            HopfData H = need_finite_hopf(in.doc, name);
            HopfData D = dual_hopf(H);
            run.report = check_hopf(D);
            std::string text = write_finite_hopf(D, H.name + "_dual");
            if (!as_json) run.lines.push_back(text);
            run.info["hopf"] = hopf_json(D);
        };
    });

    auto* comod = app.add_subcommand("comodule", "comodule algebra checks");
    comod->require_subcommand(1);
    auto* ccheck = comod->add_subcommand("check", "comodule algebra axioms");
    with_file(ccheck);
    ccheck->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            run.report = check_comodule_algebra(load_comodule(in.doc).C);
        };
    });

    auto* coinv = app.add_subcommand("coinvariants", "coinvariant subalgebra");
    with_file(coinv);
    coinv->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            auto C = load_comodule(in.doc).C;
            run.report = check_comodule_algebra(C);
            auto B = coinvariants(C);
            run.report.add("coinvariants_subalgebra", is_subalgebra(C.A, B)).dims = {static_cast<long>(B.size()),
                                                                                      static_cast<long>(C.A.dim())};
            auto text = vectors_text(C.A.labels(), B);
            run.info["basis"] = text;
            for (const auto& v : text) run.lines.push_back("coinvariant: " + v);
        };
    });

    auto* galois = app.add_subcommand("galois", "Hopf Galois checks");
    galois->require_subcommand(1);
    auto* gcheck = galois->add_subcommand("check", "bijectivity of the canonical maps");
    with_file(gcheck);
    gcheck->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            auto ci = load_comodule(in.doc);
            auto g = galois_check(ci.C);
            run.report = g.report;
            if (ci.group) run.report.merge(strongly_graded_check(ci.C.A, *ci.group, ci.degrees), "graded");
            run.info["coinvariants"] = vectors_text(ci.C.A.labels(), g.coinvariants);
            run.info["rank_beta"] = g.rank_beta;
            run.info["rank_beta_prime"] = g.rank_beta_prime;
        };
    });

    auto* cleft = app.add_subcommand("cleft", "cleft extensions");
    cleft->require_subcommand(1);
    auto* clcheck = cleft->add_subcommand("check", "convolution-invertible comodule map");
    with_file(clcheck);
    clcheck->add_option("gamma", a1, "'label = expr; ...' or the name of a [cleft.<name>] section")->required();
    clcheck->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            run.input += "\n" + a1;
            auto C = load_comodule(in.doc).C;
            run.report = cleft_check(C, load_gamma(in.doc, C, a1));
        };
    });

    auto* torsor = app.add_subcommand("torsor", "quantum torsors");
    torsor->require_subcommand(1);
    auto* tcheck = torsor->add_subcommand("check", "torsor laws, Grunspan map and descent datum");
    with_file(tcheck);
    tcheck->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            auto t = load_torsor(in.doc);
            auto gr = grunspan_map(t);
            run.report = gr.report;
            run.report.merge(descent_datum(t).report, "descent");
            run.info["theta"] = matrix_json(gr.theta);
            run.info["autonomous"] = gr.autonomous;
        };
    });
    auto* trec = torsor->add_subcommand("reconstruct", "Hopf algebra from a torsor");
    with_file(trec);
    trec->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            auto t = load_torsor(in.doc);
            auto r = reconstruct_hopf(t);
            run.report = r.report;
            if (r.report.find("hopf.coassociativity")) {
                if (!as_json) run.lines.push_back(write_finite_hopf(r.H, t.name + "_hopf"));
                run.info["hopf"] = hopf_json(r.H);
            }
        };
    });

    auto* hgs = app.add_subcommand("hgs", "Hopf Galois systems");
    hgs->require_subcommand(1);
    auto* hgcheck = hgs->add_subcommand("check", "system axioms");
    with_file(hgcheck);
    hgcheck->add_option("--degree", degree, "degree bound for presented systems")->check(CLI::NonNegativeNumber);
    hgcheck->callback([&] {
        action = [&] {
            auto in = read_input(run, file);
            auto s = load_hgs(in.doc);
            run.report = s.finite ? check_hgs(*s.finite) : check_hgs(*s.generated, degree);
        };
    });

    auto* cat = app.add_subcommand("catalog", "built-in examples");
    cat->require_subcommand(1);
    auto* clist = cat->add_subcommand("list", "list entries");
    clist->callback([&] {
        action = [&] {
            for (const auto& e : catalog_entries()) {
                run.lines.push_back("presentation  " + e.name + "  " + e.summary);
                run.info["presentations"].push_back(e.name);
            }
            for (const auto& e : builtin_hopf_entries()) {
                run.lines.push_back("finite_hopf   " + e.name + "  " + e.summary);
                run.info["finite_hopf"].push_back(e.name);
            }
        };
    });
    auto* cshow = cat->add_subcommand("show", "print an entry as an input file");
    cshow->add_option("name", a1)->required();
    cshow->add_option("--param", params, "key=value parameter");
    cshow->callback([&] {
        action = [&] {
            std::map<std::string, std::string> pm;
            for (const auto& p : params) {
                auto eq = p.find('=');
                if (eq == std::string::npos) throw FormatError("--param expects key=value");
                pm[p.substr(0, eq)] = p.substr(eq + 1);
            }
            run.input = a1;
            for (const auto& [k, v] : pm) run.input += "\n" + k + "=" + v;
            std::string text;
            bool in_catalog = false;
            for (const auto& e : catalog_entries()) in_catalog |= e.name == a1;
            if (in_catalog) {
                auto p = catalog(a1, pm);
                text = write_presentation(p);
                try {
                    auto h = catalog_hopf(a1, pm);
                    text += write_gen_hopf(h);
                } catch (const PresentationError&) {
                }
            } else {
                text = write_finite_hopf(builtin_hopf(a1, pm), a1);
                if (text.front() == '\n') text.erase(0, 1);
            }
            if (as_json) run.info["toml"] = text;
            else run.lines.push_back(text);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    run.seed = seed;
    {
        std::string cmd;
        for (CLI::App* sc = &app; !sc->get_subcommands().empty();) {
            sc = sc->get_subcommands().front();
            cmd += (cmd.empty() ? "" : " ") + sc->get_name();
        }
        run.command = cmd;
    }
    try {
        action();
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const skewhopf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AxiomError& e) {
        run.report = e.report;
        if (run.report.pass()) run.report.add("input_structure", false, e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (as_json) print_json(run, std::cout);
    else print_human(run, std::cout);
    return run.report.pass() ? 0 : 1;
}
