#include "lie2/io.hpp"

#include <fstream>
#include <set>

namespace lie2 {

namespace {

Json rat_json(const Rational& r) { return Json(r.str()); }

Rational rat_parse(const Json& j, const char* what) {
    if (!j.is_string())
        throw StructuralError(std::string(what) + ": rationals must be strings like \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::domain_error& e) {
        throw StructuralError(std::string(what) + ": " + e.what());
    }
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw StructuralError(std::string("missing or non-integer field '") + key + "'");
    return j.at(key).get<int>();
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(rat_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, int rows, int cols, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw StructuralError(std::string(what) + ": expected " + std::to_string(rows) +
                              " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw StructuralError(std::string(what) + ": row " + std::to_string(i) +
                                  " must have " + std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = rat_parse(row.at(static_cast<std::size_t>(c)), what);
    }
    return m;
}

Vec vec_from_json(const Json& j, int n, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw StructuralError(std::string(what) + ": expected vector of length " +
                              std::to_string(n));
    Vec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = rat_parse(j.at(static_cast<std::size_t>(i)), what);
    return v;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(rat_json(x));
    return out;
}

void check_index(int i, int dim, const char* what) {
    if (i < 0 || i >= dim)
        throw StructuralError(std::string(what) + ": index " + std::to_string(i) +
                              " out of range [0, " + std::to_string(dim) + ")");
}

// Sparse order-3 tensor. sym: -1 antisymmetric closure in the first two
// indices, +1 symmetric closure, 0 none.
Tensor3 tensor3_from_json(const Json& j, int d0, int d1, int d2, int sym, const char* what) {
    Tensor3 t(d0, d1, d2);
    if (j.is_null())
        return t;
    if (!j.is_array())
        throw StructuralError(std::string(what) + ": expected a sparse entry list");
    std::set<std::tuple<int, int, int>> seen;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 4)
            throw StructuralError(std::string(what) + ": entries must be [i, j, k, \"p/q\"]");
        const int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
        check_index(i, d0, what);
        check_index(jj, d1, what);
        check_index(k, d2, what);
        if (!seen.insert({i, jj, k}).second)
            throw StructuralError(std::string(what) + ": duplicate entry");
        t.at(i, jj, k) = rat_parse(e.at(3), what);
    }
    if (sym != 0) {
        for (const auto& [i, jj, k] : std::set<std::tuple<int, int, int>>(seen)) {
            if (i == jj)
                continue;
            if (!seen.count({jj, i, k})) {
                t.at(jj, i, k) = (sym < 0) ? -t.at(i, jj, k) : t.at(i, jj, k);
                seen.insert({jj, i, k});
            }
        }
        const bool ok = (sym < 0) ? t.antisym01() : t.sym01();
        if (!ok)
            throw StructuralError(std::string(what) + ((sym < 0)
                                      ? ": inconsistent antisymmetric entries"
                                      : ": inconsistent symmetric entries"));
    }
    return t;
}

Json tensor3_to_json(const Tensor3& t, int sym) {
    Json out = Json::array();
    for (int i = 0; i < t.dim0(); ++i)
        for (int j = (sym != 0 ? i : 0); j < t.dim1(); ++j) {
            if (sym < 0 && j == i)
                continue;
            for (int k = 0; k < t.dim2(); ++k)
                if (!t.at(i, j, k).is_zero())
                    out.push_back(Json::array({i, j, k, rat_json(t.at(i, j, k))}));
        }
    return out;
}

Tensor4 tensor4_from_json(const Json& j, int d0, int d1, int d2, int d3, bool antisym,
                          const char* what) {
    Tensor4 t(d0, d1, d2, d3);
    if (j.is_null())
        return t;
    if (!j.is_array())
        throw StructuralError(std::string(what) + ": expected a sparse entry list");
    std::set<std::tuple<int, int, int, int>> seen;
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 5)
            throw StructuralError(std::string(what) +
                                  ": entries must be [i, j, k, l, \"p/q\"]");
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>(), c = e.at(2).get<int>(),
                  l = e.at(3).get<int>();
        check_index(a, d0, what);
        check_index(b, d1, what);
        check_index(c, d2, what);
        check_index(l, d3, what);
        if (!seen.insert({a, b, c, l}).second)
            throw StructuralError(std::string(what) + ": duplicate entry");
        t.at(a, b, c, l) = rat_parse(e.at(4), what);
    }
    if (antisym) {
        const auto base = seen;
        for (const auto& [a, b, c, l] : base) {
            if (a == b || b == c || a == c)
                continue;
            const int perm[6][3] = {{a, b, c}, {b, c, a}, {c, a, b},
                                    {b, a, c}, {a, c, b}, {c, b, a}};
            const int sgn[6] = {1, 1, 1, -1, -1, -1};
            for (int p = 0; p < 6; ++p) {
                const std::tuple<int, int, int, int> key{perm[p][0], perm[p][1], perm[p][2], l};
                if (!seen.count(key)) {
                    t.at(perm[p][0], perm[p][1], perm[p][2], l) =
                        (sgn[p] > 0) ? t.at(a, b, c, l) : -t.at(a, b, c, l);
                    seen.insert(key);
                }
            }
        }
        if (!t.antisym012())
            throw StructuralError(std::string(what) + ": inconsistent antisymmetric entries");
    }
    return t;
}

Json tensor4_to_json(const Tensor4& t) {
    Json out = Json::array();
    for (int i = 0; i < t.dim0(); ++i)
        for (int j = i + 1; j < t.dim1(); ++j)
            for (int k = j + 1; k < t.dim2(); ++k)
                for (int l = 0; l < t.dim3(); ++l)
                    if (!t.at(i, j, k, l).is_zero())
                        out.push_back(Json::array({i, j, k, l, rat_json(t.at(i, j, k, l))}));
    return out;
}

Json der1_to_json(const DerDegree1& e) {
    Json j;
    j["D"] = matrix_to_json(e.d);
    j["x0"] = vec_to_json(e.x);
    return j;
}

DerDegree1 der1_from_json(const Json& j, int n0, int n1, const char* what) {
    if (!j.is_object() || !j.contains("D") || !j.contains("x0"))
        throw StructuralError(std::string(what) + ": expected {\"D\": ..., \"x0\": ...}");
    return DerDegree1{matrix_from_json(j.at("D"), n1, n0, what),
                      vec_from_json(j.at("x0"), n0, what)};
}

} // namespace

Json algebra_to_json(const Lie2Algebra& L) {
    Json j;
    j["n0"] = L.n0;
    j["n1"] = L.n1;
    j["d"] = matrix_to_json(L.d);
    j["b00"] = tensor3_to_json(L.b00, -1);
    j["b01"] = tensor3_to_json(L.b01, 0);
    j["l3"] = tensor4_to_json(L.l3);
    return j;
}

Lie2Algebra algebra_from_json(const Json& j) {
    const int n0 = int_field(j, "n0"), n1 = int_field(j, "n1");
    if (n0 < 0 || n1 < 0)
        throw StructuralError("algebra: dimensions must be nonnegative");
    Lie2Algebra L = Lie2Algebra::zero(n0, n1);
    L.d = matrix_from_json(j.value("d", matrix_to_json(L.d)), n0, n1, "d");
    L.b00 = tensor3_from_json(j.value("b00", Json()), n0, n0, n0, -1, "b00");
    L.b01 = tensor3_from_json(j.value("b01", Json()), n0, n1, n1, 0, "b01");
    L.l3 = tensor4_from_json(j.value("l3", Json()), n0, n0, n0, n1, true, "l3");
    validate_structure(L);
    return L;
}

Json lie3_to_json(const Lie3Algebra& T) {
    Json j;
    j["m0"] = T.m0;
    j["m1"] = T.m1;
    j["m2"] = T.m2;
    j["l1_10"] = matrix_to_json(T.l1_10);
    j["l1_21"] = matrix_to_json(T.l1_21);
    j["c00"] = tensor3_to_json(T.c00, -1);
    j["c01"] = tensor3_to_json(T.c01, 0);
    j["c02"] = tensor3_to_json(T.c02, 0);
    j["c11"] = tensor3_to_json(T.c11, +1);
    return j;
}

Lie3Algebra lie3_from_json(const Json& j) {
    const int m0 = int_field(j, "m0"), m1 = int_field(j, "m1"), m2 = int_field(j, "m2");
    Lie3Algebra T = Lie3Algebra::zero(m0, m1, m2);
    T.l1_10 = matrix_from_json(j.at("l1_10"), m0, m1, "l1_10");
    T.l1_21 = matrix_from_json(j.at("l1_21"), m1, m2, "l1_21");
    T.c00 = tensor3_from_json(j.value("c00", Json()), m0, m0, m0, -1, "c00");
    T.c01 = tensor3_from_json(j.value("c01", Json()), m0, m1, m1, 0, "c01");
    T.c02 = tensor3_from_json(j.value("c02", Json()), m0, m2, m2, 0, "c02");
    T.c11 = tensor3_from_json(j.value("c11", Json()), m1, m1, m2, +1, "c11");
    validate_structure(T);
    return T;
}

Json derivation_to_json(const Derivation0& c) {
    Json j;
    j["X0"] = matrix_to_json(c.x0);
    j["X1"] = matrix_to_json(c.x1);
    j["lX"] = tensor3_to_json(c.lx, -1);
    return j;
}

Derivation0 derivation_from_json(const Json& j, int n0, int n1) {
    Derivation0 c = Derivation0::zero(n0, n1);
    c.x0 = matrix_from_json(j.at("X0"), n0, n0, "X0");
    c.x1 = matrix_from_json(j.at("X1"), n1, n1, "X1");
    c.lx = tensor3_from_json(j.value("lX", Json()), n0, n0, n1, -1, "lX");
    return c;
}

Json morphism_doc_to_json(const MorphismDoc& doc) {
    Json j;
    j["g"] = algebra_to_json(doc.g);
    j["h"] = algebra_to_json(doc.h);
    Json f;
    Json f0 = Json::array();
    for (const auto& c : doc.f.f0)
        f0.push_back(derivation_to_json(c));
    f["f0"] = std::move(f0);
    Json f1d = Json::array(), f1x = Json::array();
    for (const auto& e : doc.f.f1) {
        f1d.push_back(matrix_to_json(e.d));
        f1x.push_back(vec_to_json(e.x));
    }
    f["f1"] = Json{{"D", std::move(f1d)}, {"x0", std::move(f1x)}};
    Json f20 = Json::array();
    for (int i = 0; i < doc.g.n0; ++i)
        for (int jx = i + 1; jx < doc.g.n0; ++jx) {
            const DerDegree1& e = doc.f.f2_0[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(jx)];
            if (!e.is_zero())
                f20.push_back(Json::array({i, jx, der1_to_json(e)}));
        }
    f["f2_0"] = std::move(f20);
    f["f2_1"] = tensor3_to_json(doc.f.f2_1, 0);
    f["f3"] = tensor4_to_json(doc.f.f3);
    j["f"] = std::move(f);
    return j;
}

MorphismDoc morphism_doc_from_json(const Json& j) {
    MorphismDoc doc;
    doc.g = algebra_from_json(j.at("g"));
    doc.h = algebra_from_json(j.at("h"));
    doc.f = MorphismToDer3::zero(doc.g, doc.h);
    const Json& f = j.at("f");

    const Json& f0 = f.at("f0");
    if (!f0.is_array() || static_cast<int>(f0.size()) != doc.g.n0)
        throw StructuralError("morphism: f0 must list one derivation per g0 basis vector");
    for (int i = 0; i < doc.g.n0; ++i)
        doc.f.f0[static_cast<std::size_t>(i)] =
            derivation_from_json(f0.at(static_cast<std::size_t>(i)), doc.h.n0, doc.h.n1);

    const Json& f1 = f.at("f1");
    const Json& f1d = f1.at("D");
    const Json& f1x = f1.at("x0");
    if (static_cast<int>(f1d.size()) != doc.g.n1 || static_cast<int>(f1x.size()) != doc.g.n1)
        throw StructuralError("morphism: f1 arity mismatch");
    for (int p = 0; p < doc.g.n1; ++p)
        doc.f.f1[static_cast<std::size_t>(p)] =
            DerDegree1{matrix_from_json(f1d.at(static_cast<std::size_t>(p)), doc.h.n1,
                                        doc.h.n0, "f1.D"),
                       vec_from_json(f1x.at(static_cast<std::size_t>(p)), doc.h.n0, "f1.x0")};

    if (f.contains("f2_0") && !f.at("f2_0").is_null()) {
        std::set<std::pair<int, int>> seen;
        for (const Json& e : f.at("f2_0")) {
            if (!e.is_array() || e.size() != 3)
                throw StructuralError("morphism: f2_0 entries must be [i, j, value]");
            const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
            check_index(a, doc.g.n0, "f2_0");
            check_index(b, doc.g.n0, "f2_0");
            if (a == b)
                throw StructuralError("morphism: f2_0 diagonal entries must be omitted");
            if (!seen.insert({a, b}).second || seen.count({b, a}))
                throw StructuralError("morphism: duplicate f2_0 entry");
            const DerDegree1 v = der1_from_json(e.at(2), doc.h.n0, doc.h.n1, "f2_0");
            doc.f.f2_0[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
            doc.f.f2_0[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] =
                Rational(-1) * v;
        }
    }
    doc.f.f2_1 =
        tensor3_from_json(f.value("f2_1", Json()), doc.g.n0, doc.g.n1, doc.h.n1, 0, "f2_1");
    doc.f.f3 = tensor4_from_json(f.value("f3", Json()), doc.g.n0, doc.g.n0, doc.g.n0,
                                 doc.h.n1, true, "f3");
    return doc;
}

Json extension_to_json(const Extension& E) {
    Json j;
    j["g"] = algebra_to_json(E.g);
    j["h"] = algebra_to_json(E.h);
    j["ghat"] = algebra_to_json(E.ghat);
    j["blocks"] = Json::array({"g", "h"});
    return j;
}

Extension extension_from_json(const Json& j) {
    Extension E;
    E.g = algebra_from_json(j.at("g"));
    E.h = algebra_from_json(j.at("h"));
    E.ghat = algebra_from_json(j.at("ghat"));
    if (j.contains("blocks")) {
        const Json want = Json::array({"g", "h"});
        if (j.at("blocks") != want)
            throw StructuralError("extension: blocks must be [\"g\", \"h\"]");
    }
    if (E.ghat.n0 != E.g.n0 + E.h.n0 || E.ghat.n1 != E.g.n1 + E.h.n1)
        throw StructuralError("extension: ghat dimensions must be the block sums");
    return E;
}

Json splitting_to_json(const Splitting& s) {
    Json j;
    j["s0"] = matrix_to_json(s.s0);
    j["s1"] = matrix_to_json(s.s1);
    return j;
}

Splitting splitting_from_json(const Json& j, const Extension& E) {
    return Splitting{matrix_from_json(j.at("s0"), E.ghat.n0, E.g.n0, "s0"),
                     matrix_from_json(j.at("s1"), E.ghat.n1, E.g.n1, "s1")};
}

Json witness_to_json(const EquivalenceWitness& w) {
    Json j;
    j["b0"] = matrix_to_json(w.b0);
    j["b1"] = matrix_to_json(w.b1);
    j["b2"] = tensor3_to_json(w.b2, -1);
    return j;
}

EquivalenceWitness witness_from_json(const Json& j, const Lie2Algebra& g,
                                     const Lie2Algebra& h) {
    EquivalenceWitness w = EquivalenceWitness::zero(g, h);
    w.b0 = matrix_from_json(j.at("b0"), h.n0, g.n0, "b0");
    w.b1 = matrix_from_json(j.at("b1"), h.n1, g.n1, "b1");
    w.b2 = tensor3_from_json(j.value("b2", Json()), g.n0, g.n0, h.n1, -1, "b2");
    return w;
}

Json iso_to_json(const ExtensionIso& F) {
    Json j;
    j["F0"] = matrix_to_json(F.f0);
    j["F1"] = matrix_to_json(F.f1);
    j["F2"] = tensor3_to_json(F.f2, -1);
    return j;
}

ExtensionIso iso_from_json(const Json& j, const Extension& E) {
    ExtensionIso F;
    F.f0 = matrix_from_json(j.at("F0"), E.ghat.n0, E.ghat.n0, "F0");
    F.f1 = matrix_from_json(j.at("F1"), E.ghat.n1, E.ghat.n1, "F1");
    F.f2 = tensor3_from_json(j.value("F2", Json()), E.ghat.n0, E.ghat.n0, E.h.n1, -1, "F2");
    return F;
}

Json equiv_job_to_json(const EquivJob& job) {
    Json j;
    j["g"] = algebra_to_json(job.g);
    j["h"] = algebra_to_json(job.h);
    j["f"] = morphism_doc_to_json(MorphismDoc{job.g, job.h, job.f}).at("f");
    j["fprime"] = morphism_doc_to_json(MorphismDoc{job.g, job.h, job.fprime}).at("f");
    if (job.witness)
        j["witness"] = witness_to_json(*job.witness);
    return j;
}

EquivJob equiv_job_from_json(const Json& j) {
    EquivJob job;
    job.g = algebra_from_json(j.at("g"));
    job.h = algebra_from_json(j.at("h"));
    Json fdoc{{"g", j.at("g")}, {"h", j.at("h")}, {"f", j.at("f")}};
    job.f = morphism_doc_from_json(fdoc).f;
    Json fpdoc{{"g", j.at("g")}, {"h", j.at("h")}, {"f", j.at("fprime")}};
    job.fprime = morphism_doc_from_json(fpdoc).f;
    if (j.contains("witness") && !j.at("witness").is_null())
        job.witness = witness_from_json(j.at("witness"), job.g, job.h);
    return job;
}

Json report_to_json(const AxiomReport& rep) {
    Json checks = Json::array();
    for (const auto& r : rep.results()) {
        Json c;
        c["name"] = r.name;
        c["passed"] = r.passed;
        c["precondition"] = r.precondition;
        c["cases"] = r.cases;
        if (r.witness) {
            c["violation"] = Json{{"tuple", r.witness->tuple},
                                  {"residual", vec_to_json(r.witness->residual)}};
        }
        checks.push_back(std::move(c));
    }
    Json j;
    j["ok"] = rep.ok();
    j["checks"] = std::move(checks);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw StructuralError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw StructuralError("parse error in '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw StructuralError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace lie2
