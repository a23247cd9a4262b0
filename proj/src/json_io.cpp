#include "amoeba/json_io.hpp"

namespace amoeba {

Json to_json(const Rational &x) { return to_string(x); }

Json to_json(const RatVector &v) {
    Json out = Json::array();
    for (const auto &x : v)
        out.push_back(to_string(x));
    return out;
}

Json to_json(const IntVector &v) {
    Json out = Json::array();
    for (const auto &x : v)
        out.push_back(to_string(x));
    return out;
}

Json to_json(const IntMatrix &m) {
    Json out = Json::array();
    for (const auto &row : m)
        out.push_back(to_json(row));
    return out;
}

Json to_json(const Place &p) { return p.to_string(); }

Json to_json(const LaurentPoly &f) {
    Json terms = Json::array();
    for (const auto &t : f.terms())
        terms.push_back({{"exp", t.exponent}, {"coeff", t.coefficient.to_string()}});
    return {{"rank", f.rank()}, {"field", field_name(f.field())}, {"terms", terms}, {"text", f.to_string()}};
}

Json to_json(const Constraint &c) { return {{"row", to_json(c.row)}, {"rhs", to_json(c.rhs)}}; }

Json to_json(const Polyhedron &p) {
    Json eqs = Json::array(), ineqs = Json::array();
    for (const auto &c : p.equalities())
        eqs.push_back(to_json(c));
    for (const auto &c : p.inequalities())
        ineqs.push_back(to_json(c));
    return {{"rank", p.rank()}, {"equalities", eqs}, {"inequalities", ineqs}};
}

Json to_json(const Cell &c) {
    return {{"polyhedron", to_json(c.polyhedron)},
            {"tie_sets", c.tie_sets},
            {"multiplicity", c.multiplicity},
            {"dimension", c.dimension}};
}

Json to_json(const PolyhedralComplex &c) {
    Json cells = Json::array();
    for (const auto &cell : c.cells)
        cells.push_back(to_json(cell));
    return {{"rank", c.rank}, {"cells", cells}};
}

Json to_json(const AdelicAmoeba &a) {
    Json special = Json::array();
    for (const auto &[place, complex] : a.special)
        special.push_back({{"place", to_json(place)}, {"complex", to_json(complex)}});
    return {{"rank", a.rank}, {"field", field_name(a.field)}, {"generic", to_json(a.generic)}, {"special", special}};
}

namespace {

Json complex_vector(const std::vector<std::complex<double>> &z) {
    Json out = Json::array();
    for (const auto &c : z)
        out.push_back({c.real(), c.imag()});
    return out;
}

template <class T>
Json optional_json(const std::optional<T> &x) {
    return x ? Json(*x) : Json(nullptr);
}

} // namespace

Json to_json(const ArchResult &r) {
    Json certificate = {{"method", r.method}};
    if (r.dominant)
        certificate["lopsided_index"] = *r.dominant;
    if (!r.witness.empty()) {
        certificate["witness"] = complex_vector(r.witness);
        certificate["residual"] = r.residual;
    }
    return {{"verdict", verdict_name(r.verdict)}, {"certificate", certificate}};
}

Json to_json(const Halfspace &h) {
    return {{"boundary", to_json(h.boundary)}, {"direction", to_json(h.direction)}};
}

Json to_json(const MeetResult &m) {
    Json out = {{"meets", m.meets}};
    if (m.meets) {
        out["cell"] = optional_json(m.cell);
        out["witness"] = to_json(m.witness);
    }
    return out;
}

Json to_json(const AdelicReport &r) {
    Json special = Json::array();
    for (const auto &pr : r.special)
        special.push_back({{"place", to_json(pr.place)}, {"result", to_json(pr.result)}});
    Json points = Json::array();
    for (const auto &p : r.arch_points) {
        Json entry = {{"point", to_json(p.point)},
                      {"grid", p.grid},
                      {"verdict", verdict_name(p.verdict)},
                      {"method", p.method},
                      {"constraint", optional_json(p.constraint)},
                      {"dominant", optional_json(p.dominant)}};
        if (!p.witness.empty())
            entry["witness"] = complex_vector(p.witness);
        points.push_back(std::move(entry));
    }
    Json crossing = nullptr;
    if (r.component_crossing)
        crossing = {r.component_crossing->first, r.component_crossing->second};
    return {{"generic", to_json(r.generic.result)},
            {"special", special},
            {"nonarchimedean", r.nonarchimedean_disjoint ? "disjoint" : "meets"},
            {"archimedean", {{"status", arch_status_name(r.archimedean)}, {"points", points},
                             {"component_crossing", crossing}}},
            {"verdict", r.disjoint ? "disjoint" : "meets"}};
}

Json to_json(const Theorem1Report &r) {
    Json hypothesis = to_json(r.hypothesis);
    return {{"status", theorem1_status_name(r.status)},
            {"hypothesis", hypothesis},
            {"quotient_map", to_json(r.quotient.phi)},
            {"conclusion_case", optional_json(r.conclusion_case)},
            {"certificates", r.certificates},
            {"archimedean_caveat", r.archimedean_caveat}};
}

Json to_json(const EklReport &r) {
    Json cones = Json::array();
    for (const auto &c : r.cones) {
        cones.push_back({{"vertex", c.vertex},
                         {"direction", to_json(c.direction)},
                         {"uniform_minimal", c.uniform_minimal},
                         {"meets_at", c.meets_at ? Json(c.meets_at->to_string()) : Json(nullptr)},
                         {"archimedean", arch_status_name(c.archimedean)},
                         {"disjoint", c.disjoint()}});
    }
    Json zero = Json::array();
    for (const auto &[place, contains] : r.zero_by_place)
        zero.push_back({{"place", to_json(place)}, {"contains_zero", contains}});
    return {{"cones", cones},
            {"disjoint_half_line", optional_json(r.disjoint_vertex)},
            {"contains_zero", zero},
            {"all_contain_zero", r.all_contain_zero},
            {"consistent", r.consistent}};
}

LaurentPoly laurent_from_json(const Json &j) {
    const std::size_t rank = j.at("rank").get<std::size_t>();
    const Field field = parse_field(j.at("field").get<std::string>());
    std::vector<Term> terms;
    for (const auto &t : j.at("terms")) {
        Exponent u = t.at("exp").get<Exponent>();
        terms.push_back({std::move(u), parse_scalar(t.at("coeff").get<std::string>(), field)});
    }
    return LaurentPoly(rank, field, std::move(terms));
}

namespace {

std::vector<Constraint> constraints_from_json(const Json &j) {
    std::vector<Constraint> out;
    for (const auto &c : j) {
        RatVector row;
        for (const auto &x : c.at("row"))
            row.push_back(parse_rational(x.get<std::string>()));
        out.push_back({std::move(row), parse_rational(c.at("rhs").get<std::string>())});
    }
    return out;
}

} // namespace

Polyhedron polyhedron_from_json(const Json &j) {
    return Polyhedron(j.at("rank").get<std::size_t>(), constraints_from_json(j.at("equalities")),
                      constraints_from_json(j.at("inequalities")));
}

PolyhedralComplex complex_from_json(const Json &j) {
    PolyhedralComplex out;
    out.rank = j.at("rank").get<std::size_t>();
    for (const auto &c : j.at("cells")) {
        Cell cell;
        cell.polyhedron = polyhedron_from_json(c.at("polyhedron"));
        cell.tie_sets = c.at("tie_sets").get<std::vector<TieSet>>();
        cell.multiplicity = c.at("multiplicity").get<std::int64_t>();
        cell.dimension = c.at("dimension").get<int>();
        out.cells.push_back(std::move(cell));
    }
    return out;
}

} // namespace amoeba
