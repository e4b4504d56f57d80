#include "radgauge/io.hpp"

#include <cstdio>
#include <fstream>

#include "radgauge/error.hpp"
#include "radgauge/rng.hpp"

namespace rg {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    json re = json::array(), im = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json rr = json::array(), ri = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            rr.push_back(m(i, j).real());
            ri.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"dim", n}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
    try {
        const std::size_t n = j.at("dim").get<std::size_t>();
        if (n == 0 || n > 64) throw Error(Errc::BadParameters, "matrix dim must lie in [1, 64]");
        const json& re = j.at("re");
        const json* im = j.contains("im") ? &j.at("im") : nullptr;
        if (re.size() != n || (im && im->size() != n)) throw Error(Errc::BadParameters, "row count differs from dim");
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (re[i].size() != n || (im && (*im)[i].size() != n))
                throw Error(Errc::BadParameters, "column count differs from dim");
            for (std::size_t k = 0; k < n; ++k) m(i, k) = cplx(re[i][k].get<double>(), im ? (*im)[i][k].get<double>() : 0.0);
        }
        if (!m.is_finite()) throw Error(Errc::NotFinite, "matrix has non-finite entries");
        return m;
    } catch (const json::exception& e) {
        throw Error(Errc::BadParameters, std::string("malformed matrix JSON: ") + e.what());
    }
}

json vector_to_json(const CVector& v) {
    json re = json::array(), im = json::array();
    for (const auto& c : v) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return {{"re", re}, {"im", im}};
}

CVector vector_from_json(const json& j) {
    const json& re = j.at("re");
    const json& im = j.at("im");
    if (re.size() != im.size()) throw Error(Errc::BadParameters, "vector parts differ in length");
    CVector v(re.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = cplx(re[i].get<double>(), im[i].get<double>());
    return v;
}

json function_to_json(const ScalarFunction& f) {
    switch (f.kind()) {
        case ScalarFunction::Kind::Power: return {{"kind", "power"}, {"exponent", f.exponent()}};
        case ScalarFunction::Kind::AffinePower:
            return {{"kind", "affine-power"}, {"a", f.coefficient()}, {"exponent", f.exponent()}, {"b", f.offset()}};
        case ScalarFunction::Kind::Table: {
            const auto& fl = f.flags();
            return {{"kind", "table"},
                    {"t", f.nodes()},
                    {"f", f.values()},
                    {"flags",
                     {{"nonnegative", fl.nonnegative},
                      {"increasing", fl.increasing},
                      {"convex", fl.convex},
                      {"superquadratic", fl.superquadratic},
                      {"zero_at_zero", fl.zero_at_zero}}}};
        }
    }
    return {};
}

ScalarFunction function_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") return ScalarFunction::power(j.at("exponent").get<double>());
    if (kind == "affine-power")
        return ScalarFunction::affine_power(j.at("a").get<double>(), j.at("exponent").get<double>(),
                                            j.at("b").get<double>());
    if (kind == "table") {
        const json& fl = j.at("flags");
        ScalarFunction::Flags flags{fl.at("nonnegative").get<bool>(), fl.at("increasing").get<bool>(),
                                    fl.at("convex").get<bool>(), fl.at("superquadratic").get<bool>(),
                                    fl.at("zero_at_zero").get<bool>()};
        return ScalarFunction::table(j.at("t").get<std::vector<double>>(), j.at("f").get<std::vector<double>>(), flags);
    }
    throw Error(Errc::BadParameters, "unknown function kind '" + kind + "'");
}

namespace {

void put_optional(json& j, const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
}

std::optional<double> get_optional(const json& j, const char* key) {
    if (j.contains(key) && !j.at(key).is_null()) return j.at(key).get<double>();
    return std::nullopt;
}

}  // namespace

json case_to_json(const InequalityCase& c) {
    const CaseParams& p = c.params;
    json params = {{"r", p.r},           {"p", p.p},         {"q", p.q},       {"k", p.k},
                   {"m", p.m},           {"n_ops", p.n_ops}, {"nu", p.nu},     {"lambda", p.lambda},
                   {"alpha", p.alpha},   {"beta", p.beta},   {"mu", p.mu},     {"r1", p.r1},
                   {"r2", p.r2}};
    put_optional(params, "delta", p.delta);
    put_optional(params, "Delta", p.Delta);
    put_optional(params, "m_prime", p.m_lo);
    put_optional(params, "M_prime", p.M_hi);
    put_optional(params, "m_outer", p.m_outer);
    put_optional(params, "M_outer", p.M_outer);

    json ops = json::object();
    for (const auto& [name, m] : c.ops) ops[name] = matrix_to_json(m);
    json fams = json::object();
    for (const auto& [name, fam] : c.families) {
        json arr = json::array();
        for (const auto& m : fam) arr.push_back(matrix_to_json(m));
        fams[name] = std::move(arr);
    }
    json vecs = json::object();
    for (const auto& [name, v] : c.vectors) vecs[name] = vector_to_json(v);
    return {{"dim", c.dim()},
            {"operators", ops},
            {"families", fams},
            {"vectors", vecs},
            {"params", params},
            {"functions", {{"psi", function_to_json(c.psi)}, {"phi", function_to_json(c.phi)}, {"f", function_to_json(c.f)}}}};
}

InequalityCase case_from_json(const json& j) {
    try {
        InequalityCase c;
        if (j.contains("operators"))
            for (const auto& [name, m] : j.at("operators").items()) c.ops[name] = matrix_from_json(m);
        if (j.contains("families"))
            for (const auto& [name, arr] : j.at("families").items())
                for (const auto& m : arr) c.families[name].push_back(matrix_from_json(m));
        if (j.contains("vectors"))
            for (const auto& [name, v] : j.at("vectors").items()) c.vectors[name] = vector_from_json(v);
        if (j.contains("params")) {
            const json& p = j.at("params");
            CaseParams& q = c.params;
            q.r = p.value("r", q.r);
            q.p = p.value("p", q.p);
            q.q = p.value("q", q.q);
            q.k = p.value("k", q.k);
            q.m = p.value("m", q.m);
            q.n_ops = p.value("n_ops", q.n_ops);
            q.nu = p.value("nu", q.nu);
            q.lambda = p.value("lambda", q.lambda);
            q.alpha = p.value("alpha", q.alpha);
            q.beta = p.value("beta", q.beta);
            q.mu = p.value("mu", q.mu);
            q.r1 = p.value("r1", q.r1);
            q.r2 = p.value("r2", q.r2);
            q.delta = get_optional(p, "delta");
            q.Delta = get_optional(p, "Delta");
            q.m_lo = get_optional(p, "m_prime");
            q.M_hi = get_optional(p, "M_prime");
            q.m_outer = get_optional(p, "m_outer");
            q.M_outer = get_optional(p, "M_outer");
        }
        if (j.contains("functions")) {
            const json& f = j.at("functions");
            if (f.contains("psi")) c.psi = function_from_json(f.at("psi"));
            if (f.contains("phi")) c.phi = function_from_json(f.at("phi"));
            if (f.contains("f")) c.f = function_from_json(f.at("f"));
        }
        return c;
    } catch (const json::exception& e) {
        throw Error(Errc::BadParameters, std::string("malformed case JSON: ") + e.what());
    }
}

std::string case_digest(const InequalityCase& c) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(case_to_json(c).dump())));
    return buf;
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::Io, "cannot open " + path);
    try {
        return matrix_from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw Error(Errc::BadParameters, std::string("cannot parse ") + path + ": " + e.what());
    }
}

}  // namespace rg
