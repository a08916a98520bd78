// Batch front end: load algebra / morphism / extension documents, run the
// verifiers and constructors, emit exact-rational reports.
//
// Exit codes: 0 all checks pass, 1 a verified check or precondition failed,
// 2 structural error (bad file, bad shapes, unsupported case).

#include "lie2/fixture_morphisms.hpp"
#include "lie2/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using namespace lie2;

struct Output {
    bool as_json = false;
    Json json = Json::object();
    std::ostringstream text;

    void kv(const std::string& key, const Json& value) { json[key] = value; }
    void line(const std::string& s) { text << s << "\n"; }

    int finish(int code) {
        if (as_json) {
            json["exit"] = code;
            std::cout << json.dump(2) << "\n";
        } else {
            std::cout << text.str();
        }
        return code;
    }
};

std::string rat_vec_str(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

std::string tuple_str(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

void render_report(Output& out, const std::string& label, const AxiomReport& rep) {
    out.line("report: " + label);
    for (const auto& r : rep.results()) {
        std::string ln = std::string("  [") + (r.passed ? "pass" : "FAIL") + "] " + r.name +
                         " (" + std::to_string(r.cases) + " cases)";
        if (!r.passed && r.witness)
            ln += " at " + tuple_str(r.witness->tuple) + " residual " +
                  rat_vec_str(r.witness->residual);
        out.line(ln);
    }
    out.line("summary: " + rep.summary());
    out.kv("label", label);
    out.kv("report", report_to_json(rep));
}

int cmd_verify(Output& out, const std::string& path) {
    const Json doc = load_json_file(path);
    if (doc.contains("ghat")) {
        const Extension E = extension_from_json(doc);
        const AxiomReport rep = check_extension(E);
        render_report(out, "extension " + path, rep);
        return rep.ok() ? 0 : 1;
    }
    const Lie2Algebra L = algebra_from_json(doc);
    const AxiomReport rep = check_lie2_axioms(L);
    render_report(out, "algebra " + path, rep);
    long pass = 0;
    for (const auto& r : rep.results())
        if (r.passed)
            ++pass;
    out.line(std::to_string(pass) + "/" + std::to_string(rep.results().size()) +
             " axioms pass");
    return rep.ok() ? 0 : 1;
}

int cmd_derive(Output& out, const std::string& path, const std::string& out_path) {
    const Lie2Algebra L = algebra_from_json(load_json_file(path));
    const std::vector<Derivation0> basis = derivation_space(L);
    out.line("Der^0 dimension: " + std::to_string(basis.size()));
    Json jb = Json::array();
    for (const auto& c : basis)
        jb.push_back(derivation_to_json(c));
    out.kv("dimension", basis.size());
    out.kv("basis", jb);
    out.line("basis (normalized kernel order):");
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.line("  #" + std::to_string(i) + ": " + derivation_to_json(basis[i]).dump());
    if (!out_path.empty())
        save_json_file(out_path, Json{{"dimension", basis.size()}, {"basis", jb}});
    return 0;
}

int cmd_der2(Output& out, const std::string& path, const std::string& out_path) {
    const Lie2Algebra L = algebra_from_json(load_json_file(path));
    const Lie2Algebra D2 = build_der2(L);
    const AxiomReport rep = check_lie2_axioms(D2);
    render_report(out, "Der(g) of " + path, rep);
    if (!out_path.empty())
        save_json_file(out_path, algebra_to_json(D2));
    return rep.ok() ? 0 : 1;
}

int cmd_der3(Output& out, const std::string& path, const std::string& out_path) {
    const Lie2Algebra L = algebra_from_json(load_json_file(path));
    const Lie3Algebra T = build_der3(L);
    const AxiomReport rep = check_lie3_axioms(T);
    render_report(out, "DER(g) of " + path, rep);
    if (!out_path.empty())
        save_json_file(out_path, lie3_to_json(T));
    return rep.ok() ? 0 : 1;
}

int cmd_check_morphism(Output& out, const std::string& path) {
    const MorphismDoc doc = morphism_doc_from_json(load_json_file(path));
    const AxiomReport rep = check_morphism_to_der3(doc.g, doc.h, doc.f);
    render_report(out, "morphism " + path, rep);
    return rep.ok() ? 0 : 1;
}

int cmd_check_equiv(Output& out, const std::string& path, bool solve) {
    const EquivJob job = equiv_job_from_json(load_json_file(path));
    if (solve) {
        const RestrictedSolveInfo info =
            solve_equivalence_restricted_info(job.g, job.h, job.f, job.fprime);
        out.kv("unknowns", info.unknowns);
        out.kv("rank_system", info.rank_system);
        out.kv("rank_augmented", info.rank_augmented);
        out.line("restricted solve: " + std::to_string(info.unknowns) + " unknowns, rank " +
                 std::to_string(info.rank_system) + ", augmented rank " +
                 std::to_string(info.rank_augmented));
        if (!info.witness) {
            out.line("no witness: system inconsistent (rank certificate above)");
            out.kv("witness", nullptr);
            return 1;
        }
        out.kv("witness", witness_to_json(*info.witness));
        out.line("witness found: " + witness_to_json(*info.witness).dump());
        const AxiomReport rep =
            check_equivalence_witness(job.g, job.h, job.f, job.fprime, *info.witness);
        render_report(out, "solved witness " + path, rep);
        return rep.ok() ? 0 : 1;
    }
    if (!job.witness)
        throw StructuralError("check-equiv: document carries no witness (use --solve)");
    const AxiomReport rep =
        check_equivalence_witness(job.g, job.h, job.f, job.fprime, *job.witness);
    render_report(out, "witness " + path, rep);
    return rep.ok() ? 0 : 1;
}

int cmd_extend(Output& out, const std::string& path, const std::string& out_path) {
    const MorphismDoc doc = morphism_doc_from_json(load_json_file(path));
    const Extension E = extension_from_morphism(doc.g, doc.h, doc.f);
    const AxiomReport rep = check_extension(E);
    render_report(out, "extension from " + path, rep);
    if (!out_path.empty())
        save_json_file(out_path, extension_to_json(E));
    return rep.ok() ? 0 : 1;
}

int cmd_extract(Output& out, const std::string& path, const std::string& splitting_path,
                const std::string& out_path) {
    const Extension E = extension_from_json(load_json_file(path));
    Splitting s = canonical_splitting(E);
    if (!splitting_path.empty())
        s = splitting_from_json(load_json_file(splitting_path), E);
    const MorphismToDer3 f = morphism_from_splitting(E, s);
    const AxiomReport rep = check_morphism_to_der3(E.g, E.h, f);
    render_report(out, "morphism from " + path, rep);
    if (!out_path.empty())
        save_json_file(out_path, morphism_doc_to_json(MorphismDoc{E.g, E.h, f}));
    return rep.ok() ? 0 : 1;
}

// Deterministic second splitting used by the round-trip driver.
Splitting perturbed_splitting(const Extension& E) {
    Splitting s = canonical_splitting(E);
    for (int u = 0; u < E.h.n0; ++u)
        for (int x = 0; x < E.g.n0; ++x)
            s.s0.at(E.off0() + u, x) = Rational(u + x + 1);
    for (int m = 0; m < E.h.n1; ++m)
        for (int a = 0; a < E.g.n1; ++a)
            s.s1.at(E.off1() + m, a) = Rational(m + 2 * a + 1);
    return s;
}

int cmd_roundtrip(Output& out, const std::string& morphism_path) {
    const MorphismDoc doc = morphism_doc_from_json(load_json_file(morphism_path));
    bool ok = true;

    // A: morphism -> extension -> morphism is the identity on components.
    const Extension E = extension_from_morphism(doc.g, doc.h, doc.f);
    const MorphismToDer3 back = morphism_from_splitting(E, canonical_splitting(E));
    const bool a_ok = (back == doc.f);
    ok = ok && a_ok;
    out.line(std::string("A: ") + (a_ok ? "exact equality" : "MISMATCH"));
    out.kv("A", a_ok ? "exact equality" : "mismatch");

    // B: two splittings give equivalent morphisms.
    const Splitting s = canonical_splitting(E), sp = perturbed_splitting(E);
    const MorphismToDer3 f1 = morphism_from_splitting(E, s);
    const MorphismToDer3 f2 = morphism_from_splitting(E, sp);
    const EquivalenceWitness w = splitting_difference_witness(E, s, sp);
    const bool b_ok = check_equivalence_witness(doc.g, doc.h, f1, f2, w).ok();
    ok = ok && b_ok;
    out.line(std::string("B: ") + (b_ok ? "witness verified" : "WITNESS REJECTED"));
    out.kv("B", b_ok ? "witness verified" : "witness rejected");

    // C: witness -> iso -> witness.
    const IsoTriple tri = witness_to_iso(doc.g, doc.h, f1, f2, w);
    bool c_ok = check_extension_iso(tri.e, tri.eprime, tri.iso).ok();
    const EquivalenceWitness w2 = iso_to_witness(tri.e, tri.eprime, tri.iso,
                                                 canonical_splitting(tri.e),
                                                 canonical_splitting(tri.eprime));
    c_ok = c_ok && w2.b0 == w.b0 && w2.b1 == w.b1 && w2.b2 == w.b2;
    ok = ok && c_ok;
    out.line(std::string("C: ") + (c_ok ? "iso verified" : "ISO REJECTED"));
    out.kv("C", c_ok ? "iso verified" : "iso rejected");

    return ok ? 0 : 1;
}

std::string slug(std::string name) {
    for (auto& c : name) {
        if (c == '(' || c == ',')
            c = '_';
        else
            c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    std::string outname;
    for (char c : name)
        if (c != ')')
            outname += c;
    return outname;
}

int cmd_fixtures(Output& out, const std::string& name, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    auto write_algebra = [&](const std::string& n) {
        const std::string path = out_dir + "/" + slug(n) + ".json";
        save_json_file(path, algebra_to_json(fixtures(n)));
        out.line("wrote " + path);
    };
    auto write_morphism = [&](const std::string& n) {
        const MorphismFixture fx = morphism_fixture(n);
        const std::string path = out_dir + "/" + slug(n) + ".json";
        save_json_file(path, morphism_doc_to_json(MorphismDoc{fx.g, fx.h, fx.f}));
        out.line("wrote " + path);
    };
    if (!name.empty()) {
        const auto mn = morphism_fixture_names();
        if (std::find(mn.begin(), mn.end(), name) != mn.end())
            write_morphism(name);
        else
            write_algebra(name);
        return 0;
    }
    for (const auto& n : fixture_names())
        write_algebra(n);
    for (const auto& n : morphism_fixture_names())
        write_morphism(n);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lie2tool: exact verifiers and constructors for Lie 2-algebras,\n"
                 "their derivation Lie 3-algebras, and non-abelian extensions"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit a machine-readable JSON report");

    std::string in_path, out_path, splitting_path, fixture_name, morphism_path;
    bool solve = false;

    auto* verify = app.add_subcommand("verify", "check algebra or extension axioms");
    verify->add_option("file", in_path, "algebra or extension JSON document")->required();

    auto* derive = app.add_subcommand("derive", "basis of Der^0 of an algebra");
    derive->add_option("file", in_path)->required();
    derive->add_option("--out", out_path, "write the basis as JSON");

    auto* der2 = app.add_subcommand("der2", "structure constants of Der(g)");
    der2->add_option("file", in_path)->required();
    der2->add_option("--out", out_path);

    auto* der3 = app.add_subcommand("der3", "structure constants of DER(g)");
    der3->add_option("file", in_path)->required();
    der3->add_option("--out", out_path);

    auto* chk_m = app.add_subcommand("check-morphism", "seven-equation morphism report");
    chk_m->add_option("file", in_path, "morphism document (g, h, f)")->required();

    auto* chk_e = app.add_subcommand("check-equiv", "verify or solve an equivalence witness");
    chk_e->add_option("file", in_path, "equivalence document (g, h, f, fprime[, witness])")
        ->required();
    chk_e->add_flag("--solve", solve, "restricted solver (abelian h)");

    auto* extend = app.add_subcommand("extend", "build the extension of a morphism");
    extend->add_option("file", in_path, "morphism document")->required();
    extend->add_option("--out", out_path);

    auto* extract = app.add_subcommand("extract", "morphism induced by a splitting");
    extract->add_option("file", in_path, "extension document")->required();
    extract->add_option("--splitting", splitting_path, "splitting JSON (default canonical)");
    extract->add_option("--out", out_path);

    auto* roundtrip = app.add_subcommand("roundtrip", "run round trips A, B, C");
    roundtrip->add_option("--morphism", morphism_path, "morphism document")->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "write named fixture files");
    fixtures_cmd->add_option("--fixture", fixture_name, "single fixture name");
    fixtures_cmd->add_option("--out", out_path, "output directory (default: fixtures)");

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.as_json = as_json;
    try {
        int code = 2;
        if (*verify)
            code = cmd_verify(out, in_path);
        else if (*derive)
            code = cmd_derive(out, in_path, out_path);
        else if (*der2)
            code = cmd_der2(out, in_path, out_path);
        else if (*der3)
            code = cmd_der3(out, in_path, out_path);
        else if (*chk_m)
            code = cmd_check_morphism(out, in_path);
        else if (*chk_e)
            code = cmd_check_equiv(out, in_path, solve);
        else if (*extend)
            code = cmd_extend(out, in_path, out_path);
        else if (*extract)
            code = cmd_extract(out, in_path, splitting_path, out_path);
        else if (*roundtrip)
            code = cmd_roundtrip(out, morphism_path);
        else if (*fixtures_cmd)
            code = cmd_fixtures(out, fixture_name, out_path.empty() ? "fixtures" : out_path);
        return out.finish(code);
    } catch (const PreconditionError& e) {
        out.line(std::string("precondition failed: ") + e.what());
        out.kv("error", e.what());
        return out.finish(1);
    } catch (const StructuralError& e) {
        out.line(std::string("error: ") + e.what());
        out.kv("error", e.what());
        return out.finish(2);
    } catch (const UnsupportedError& e) {
        out.line(std::string("unsupported: ") + e.what());
        out.kv("error", e.what());
        return out.finish(2);
    } catch (const std::exception& e) {
        out.line(std::string("error: ") + e.what());
        out.kv("error", e.what());
        return out.finish(2);
    }
}
