#include "amoeba/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "parallel.hpp"

namespace amoeba::cli {

namespace {

const std::set<std::string> kCommands = {"trop",       "adelic",  "check-halfspace", "classify",
                                         "prevariety", "ekl-check", "product-formula", "plot"};

[[noreturn]] void usage(const std::string &message) { throw Error(ErrorCode::InvalidArgument, message); }

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

IntVector parse_int_csv(std::string_view text) {
    IntVector out;
    for (const auto &item : split(text, ',')) {
        const bool digits = !item.empty() &&
                            std::all_of(item.begin() + (item[0] == '-' || item[0] == '+'), item.end(),
                                        [](char c) { return c >= '0' && c <= '9'; }) &&
                            item.find_first_of("0123456789") != std::string::npos;
        if (!digits)
            usage("expected an integer, got '" + item + "'");
        out.emplace_back(item[0] == '+' ? item.substr(1) : item);
    }
    return out;
}

IntMatrix parse_rows(std::string_view text) {
    IntMatrix rows;
    for (const auto &row : split(text, ';'))
        rows.push_back(parse_int_csv(row));
    return rows;
}

bool mentions_z(std::string_view text) { return infer_field(text) == Field::Qz; }

Execution execution(const JobSpec &job) { return job.serial ? Execution::Serial : Execution::Parallel; }

struct ParsedConstraint {
    std::string poly;
    std::optional<IntMatrix> map;
};

ParsedConstraint split_constraint(const std::string &text) {
    const auto at = text.find('@');
    if (at == std::string::npos)
        return {trim(text), std::nullopt};
    return {trim(std::string_view(text).substr(0, at)), parse_rows(std::string_view(text).substr(at + 1))};
}

std::vector<std::string> system_texts(const JobSpec &job) {
    if (job.f)
        return {*job.f};
    return job.constraints;
}

Field job_field(const JobSpec &job, const std::vector<std::string> &texts) {
    if (job.field)
        return parse_field(*job.field);
    for (const auto &t : texts)
        if (mentions_z(t))
            return Field::Qz;
    return Field::Q;
}

std::vector<PullbackConstraint> build_system(const JobSpec &job) {
    const auto texts = system_texts(job);
    const Field field = job_field(job, texts);
    std::vector<ParsedConstraint> parsed;
    for (const auto &t : texts)
        parsed.push_back(split_constraint(t));

    std::optional<std::size_t> n = job.rank;
    for (const auto &c : parsed) {
        if (!c.map)
            continue;
        if (c.map->empty() || c.map->front().empty())
            usage("empty pullback map");
        const std::size_t cols = c.map->front().size();
        if (n && *n != cols)
            throw Error(ErrorCode::DimensionMismatch, "pullback maps disagree on the ambient rank");
        n = cols;
    }
    if (!n) {
        std::size_t inferred = 0;
        for (const auto &c : parsed)
            inferred = std::max(inferred, infer_rank(c.poly));
        n = inferred;
    }
    if (*n == 0)
        usage("cannot infer the rank; pass --rank");

    std::vector<PullbackConstraint> system;
    for (const auto &c : parsed) {
        if (c.map) {
            LaurentPoly f = parse_laurent(c.poly, c.map->size(), field);
            system.push_back({std::move(f), *c.map});
        } else {
            system.push_back(identity_pullback(parse_laurent(c.poly, *n, field)));
        }
    }
    system_shape(system);
    return system;
}

LaurentPoly single_polynomial(const JobSpec &job) {
    const Field field = job_field(job, {*job.f});
    const std::size_t n = job.rank ? *job.rank : infer_rank(*job.f);
    if (n == 0)
        usage("cannot infer the rank; pass --rank");
    return parse_laurent(*job.f, n, field);
}

ArchScanOptions scan_options(const JobSpec &job) {
    ArchScanOptions options;
    options.points = job.points;
    options.sampling = {job.trials, job.tol, job.seed};
    return options;
}

Json with_header(const JobSpec &job, Json body) {
    body["schema_version"] = 1;
    body["command"] = job.command;
    return body;
}

// Exact vertices of a planar polyhedron clipped to a box, in boundary order.
std::vector<std::pair<double, double>> clipped_vertices(const Polyhedron &p, const Rational &r) {
    Polyhedron box(2);
    box.add_inequality({1, 0}, r).add_inequality({-1, 0}, r).add_inequality({0, 1}, r).add_inequality({0, -1}, r);
    const Polyhedron clipped = p.intersect(box);
    std::vector<Constraint> lines = clipped.equalities();
    lines.insert(lines.end(), clipped.inequalities().begin(), clipped.inequalities().end());

    std::vector<RatVector> points;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto &a = lines[i].row;
            const auto &b = lines[j].row;
            const Rational det = a[0] * b[1] - a[1] * b[0];
            if (det == 0)
                continue;
            RatVector x = {(lines[i].rhs * b[1] - a[1] * lines[j].rhs) / det,
                           (a[0] * lines[j].rhs - lines[i].rhs * b[0]) / det};
            if (clipped.contains(x) && std::find(points.begin(), points.end(), x) == points.end())
                points.push_back(std::move(x));
        }
    }
    std::vector<std::pair<double, double>> out;
    for (const auto &x : points)
        out.emplace_back(x[0].get_d(), x[1].get_d());
    if (out.size() > 2) {
        double cx = 0, cy = 0;
        for (const auto &[x, y] : out) {
            cx += x;
            cy += y;
        }
        cx /= out.size();
        cy /= out.size();
        std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) {
            return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
        });
    }
    return out;
}

struct Canvas {
    double r;
    double size = 480;

    double sx(double x) const { return (x + r) / (2 * r) * size; }
    double sy(double y) const { return (r - y) / (2 * r) * size; }
};

std::string svg_open(const Canvas &c, const std::string &title) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.size << "\" height=\""
      << c.size << "\" viewBox=\"0 0 " << c.size << ' ' << c.size << "\">\n"
      << "<title>" << title << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << c.size << "\" height=\"" << c.size << "\" fill=\"white\"/>\n";
    return s.str();
}

std::string svg_axes(const Canvas &c) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << "<line x1=\"" << c.sx(-c.r) << "\" y1=\"" << c.sy(0) << "\" x2=\"" << c.sx(c.r) << "\" y2=\"" << c.sy(0)
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n"
      << "<line x1=\"" << c.sx(0) << "\" y1=\"" << c.sy(-c.r) << "\" x2=\"" << c.sx(0) << "\" y2=\"" << c.sy(c.r)
      << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    return s.str();
}

std::string xml_escape(const std::string &text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

std::string plot_complex(const PolyhedralComplex &complex, const Rational &r, const std::string &title) {
    const Canvas canvas{r.get_d()};
    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << svg_open(canvas, xml_escape(title)) << svg_axes(canvas);
    for (const auto &cell : complex.cells) {
        const auto v = clipped_vertices(cell.polyhedron, r);
        if (v.empty())
            continue;
        if (v.size() == 1) {
            s << "<circle cx=\"" << canvas.sx(v[0].first) << "\" cy=\"" << canvas.sy(v[0].second)
              << "\" r=\"4\" fill=\"#1f4e79\"/>\n";
        } else if (v.size() == 2) {
            s << "<line x1=\"" << canvas.sx(v[0].first) << "\" y1=\"" << canvas.sy(v[0].second) << "\" x2=\""
              << canvas.sx(v[1].first) << "\" y2=\"" << canvas.sy(v[1].second)
              << "\" stroke=\"#1f4e79\" stroke-width=\"2.5\"/>\n";
            if (cell.multiplicity > 1) {
                s << "<text x=\"" << canvas.sx((v[0].first + v[1].first) / 2) + 4 << "\" y=\""
                  << canvas.sy((v[0].second + v[1].second) / 2) - 4 << "\" font-size=\"12\">" << cell.multiplicity
                  << "</text>\n";
            }
        } else {
            s << "<polygon points=\"";
            for (std::size_t k = 0; k < v.size(); ++k)
                s << (k ? " " : "") << canvas.sx(v[k].first) << ',' << canvas.sy(v[k].second);
            s << "\" fill=\"#9ec5e8\" stroke=\"#1f4e79\" stroke-width=\"1.5\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

ArchVerdict heat_verdict(const LaurentPoly &f, const RatVector &v, const SampleOptions &options) {
    if (lopsided_term(f, v))
        return ArchVerdict::Outside;
    if (f.size() == 3) {
        const auto t = triangle_exact_membership(f, v);
        if (t.verdict == ArchVerdict::Inside || t.verdict == ArchVerdict::Outside)
            return t.verdict;
    }
    try {
        return sampled_inside(f, v, options).verdict;
    } catch (const Error &e) {
        if (e.code() == ErrorCode::DegenerateSlice)
            return ArchVerdict::Unknown;
        throw;
    }
}

std::string plot_heat(const LaurentPoly &f, const Rational &r, int grid, const SampleOptions &options,
                      Execution exec, const std::string &title) {
    const Canvas canvas{r.get_d()};
    const std::size_t n = static_cast<std::size_t>(grid);
    std::vector<ArchVerdict> verdicts(n * n, ArchVerdict::Unknown);
    detail::for_each_index(n * n, exec, [&](std::size_t k) {
        const std::size_t i = k % n, j = k / n;
        // Cell centers -r + (2i+1) r / grid.
        const RatVector v = {-r + make_rational(2 * i + 1, grid) * r, -r + make_rational(2 * j + 1, grid) * r};
        verdicts[k] = heat_verdict(f, v, options);
    });
    const double w = canvas.size / grid;
    std::ostringstream s;
    s << std::fixed << std::setprecision(3);
    s << svg_open(canvas, xml_escape(title));
    for (std::size_t k = 0; k < n * n; ++k) {
        const std::size_t i = k % n, j = k / n;
        const char *fill = verdicts[k] == ArchVerdict::Inside    ? "#1f4e79"
                           : verdicts[k] == ArchVerdict::Outside ? "#f4f4f4"
                                                                 : "#c8c8c8";
        s << "<rect x=\"" << i * w << "\" y=\"" << (n - 1 - j) * w << "\" width=\"" << w << "\" height=\"" << w
          << "\" fill=\"" << fill << "\"/>\n";
    }
    s << svg_axes(canvas) << "</svg>\n";
    return s.str();
}

std::string run_plot(const JobSpec &job) {
    const Rational r = job.range ? parse_rational(*job.range) : Rational(4);
    if (r <= 0)
        usage("--range must be positive");
    const Place place = Place::parse(job.place);
    if (place.kind() == Place::Kind::Archimedean) {
        if (!job.f)
            usage("the archimedean heat-scan needs a single --f");
        const LaurentPoly f = single_polynomial(job);
        if (f.rank() != 2)
            throw Error(ErrorCode::DimensionMismatch, "plot needs rank 2");
        if (f.field() != Field::Q)
            throw Error(ErrorCode::PlaceFieldMismatch, "the archimedean place needs f over Q");
        require_hypersurface(f);
        return plot_heat(f, r, job.grid, scan_options(job).sampling, execution(job),
                         "archimedean amoeba of " + f.to_string());
    }
    const auto system = build_system(job);
    if (system_shape(system).second != 2)
        throw Error(ErrorCode::DimensionMismatch, "plot needs rank 2");
    const auto complex = prevariety(system, place, execution(job));
    return plot_complex(complex, r, "tropical complex at " + place.to_string());
}

Json run_json(const JobSpec &job) {
    const Execution exec = execution(job);
    if (job.command == "trop") {
        const LaurentPoly f = single_polynomial(job);
        const Place place = Place::parse(job.place);
        const auto complex = trop_hypersurface(f, place, exec);
        const auto balance = check_balancing(complex);
        return {{"polynomial", to_json(f)},
                {"place", to_json(place)},
                {"complex", to_json(complex)},
                {"contains_zero", contains_zero(complex)},
                {"balancing", {{"balanced", balance.balanced}, {"codim2_cells", balance.codim2_cells},
                               {"failures", balance.failures}}}};
    }
    if (job.command == "prevariety") {
        const auto system = build_system(job);
        const Place place = Place::parse(job.place);
        const auto complex = prevariety(system, place, exec);
        return {{"place", to_json(place)}, {"complex", to_json(complex)}, {"contains_zero", contains_zero(complex)}};
    }
    if (job.command == "adelic")
        return to_json(adelic_amoeba(build_system(job), exec));
    if (job.command == "check-halfspace") {
        const Halfspace h = parse_halfspace(*job.halfspace);
        const auto amoeba = adelic_amoeba(build_system(job), exec);
        Json out = to_json(adelic_disjoint(amoeba, h, scan_options(job), exec));
        out["halfspace"] = to_json(h);
        return out;
    }
    if (job.command == "classify") {
        const Halfspace h = parse_halfspace(*job.halfspace);
        Presentation x;
        x.system = build_system(job);
        x.codim_gt_one = job.codim_gt_one;
        if (job.image) {
            const std::size_t m = quotient_map(h).phi.size();
            const Field field = job.field ? parse_field(*job.field) : infer_field(*job.image);
            x.image = parse_laurent(*job.image, m, field);
        }
        Json out = to_json(theorem1_report(x, h, scan_options(job), exec));
        out["halfspace"] = to_json(h);
        return out;
    }
    if (job.command == "ekl-check")
        return to_json(ekl_consistency_check(single_polynomial(job), exec));
    if (job.command == "product-formula") {
        const Field field = job.field ? parse_field(*job.field) : infer_field(*job.a);
        const Scalar a = parse_scalar(*job.a, field);
        if (a.is_zero())
            throw Error(ErrorCode::ZeroInput, "the product formula needs a nonzero element");
        if (field == Field::Qz) {
            return {{"a", a.to_string()}, {"field", field_name(field)}, {"exact", true},
                    {"residual", product_formula_residual(a.function())}};
        }
        const double residual = product_formula_residual(a.rational());
        return {{"a", a.to_string()},
                {"field", field_name(field)},
                {"exact", false},
                {"residual", residual},
                {"within_tolerance", std::abs(residual) < job.tol}};
    }
    throw Error(ErrorCode::InvariantFailure, "unhandled command " + job.command);
}

void emit(const JobSpec &job, const std::string &text, std::ostream &out) {
    if (!job.output) {
        out << text;
        return;
    }
    std::ofstream file(*job.output);
    if (!file)
        usage("cannot open output file " + *job.output);
    file << text;
}

void report(std::ostream &err, std::string_view code, const std::string &message) {
    err << Json{{"code", code}, {"message", message}}.dump() << '\n';
}

std::uint64_t env_seed() {
    const char *text = std::getenv("AMOEBA_SEED");
    if (!text || !*text)
        return 0;
    try {
        std::size_t used = 0;
        const auto seed = std::stoull(text, &used);
        if (used == std::string(text).size())
            return seed;
    } catch (const std::exception &) {
    }
    usage("AMOEBA_SEED must be a nonnegative integer");
}

} // namespace

Halfspace parse_halfspace(const std::string &text) {
    std::optional<IntVector> direction;
    IntMatrix boundary;
    std::istringstream words(text);
    std::string word;
    while (words >> word) {
        if (word.rfind("dir:", 0) == 0) {
            if (direction)
                usage("halfspace has two dir: parts");
            direction = parse_int_csv(word.substr(4));
        } else if (word.rfind("bnd:", 0) == 0) {
            if (word.size() > 4)
                for (auto &row : parse_rows(word.substr(4)))
                    boundary.push_back(std::move(row));
        } else {
            usage("halfspace parts are dir:<csv> and bnd:<csv>;<csv>..., got '" + word + "'");
        }
    }
    if (!direction)
        usage("halfspace needs dir:<csv>");
    return make_halfspace(std::move(boundary), std::move(*direction));
}

void validate(const JobSpec &job) {
    if (!kCommands.contains(job.command))
        usage("unknown command '" + job.command + "'");
    if (job.trials <= 0 || job.points <= 0)
        usage("--trials and --points must be positive");
    if (!(job.tol > 0))
        usage("--tol must be positive");
    if (job.grid < 2 || job.grid > 400)
        usage("--grid must lie in [2, 400]");
    if (job.field)
        parse_field(*job.field);

    const std::string &c = job.command;
    const bool system_command = c == "adelic" || c == "prevariety" || c == "check-halfspace" ||
                                c == "classify" || c == "plot";
    if (c == "product-formula") {
        if (!job.a)
            usage("product-formula needs --a");
    } else if (job.a) {
        usage("--a only applies to product-formula");
    }
    if (c == "trop" || c == "ekl-check") {
        if (!job.f)
            usage(c + " needs --f");
        if (!job.constraints.empty())
            usage(c + " takes a single --f, not --constraint");
    }
    if (system_command) {
        if (job.f && !job.constraints.empty())
            usage("--f and --constraint are exclusive");
        if (!job.f && job.constraints.empty())
            usage(c + " needs --f or at least one --constraint");
    }
    if (c == "product-formula" && (job.f || !job.constraints.empty()))
        usage("product-formula takes only --a");
    const bool needs_halfspace = c == "check-halfspace" || c == "classify";
    if (needs_halfspace && !job.halfspace)
        usage(c + " needs --halfspace");
    if (!needs_halfspace && job.halfspace)
        usage("--halfspace only applies to check-halfspace and classify");
    if (c != "classify" && (job.image || job.codim_gt_one))
        usage("--image and --codim-gt-one only apply to classify");
    if (job.image && job.codim_gt_one)
        usage("--image and --codim-gt-one are exclusive");
    if (c != "plot" && job.range)
        usage("--range only applies to plot");

    const Place place = Place::parse(job.place);
    const bool place_command = c == "trop" || c == "prevariety" || c == "plot";
    if (!place_command && job.place != "generic")
        usage("--place only applies to trop, prevariety and plot");
    if ((c == "trop" || c == "prevariety") && place.kind() == Place::Kind::Archimedean)
        throw Error(ErrorCode::ArchimedeanNotSupported,
                    "tropicalization is defined at nonarchimedean places only");
    if (needs_halfspace)
        parse_halfspace(*job.halfspace);
}

JobSpec job_from_json(const Json &j) {
    if (!j.is_object())
        usage("job file must hold a JSON object");
    static const std::set<std::string> keys = {"command", "f",       "rank",   "field", "place",  "halfspace",
                                               "constraints", "image", "codim_gt_one", "seed", "tol",
                                               "trials",  "points",  "a",      "range", "grid",   "serial",
                                               "output"};
    for (const auto &[key, value] : j.items())
        if (!keys.contains(key))
            usage("unknown job key '" + key + "'");
    JobSpec job;
    job.seed = env_seed();
    job.command = j.at("command").get<std::string>();
    if (j.contains("f"))
        job.f = j["f"].get<std::string>();
    if (j.contains("rank"))
        job.rank = j["rank"].get<std::size_t>();
    if (j.contains("field"))
        job.field = j["field"].get<std::string>();
    job.place = j.value("place", job.place);
    if (j.contains("halfspace"))
        job.halfspace = j["halfspace"].get<std::string>();
    job.constraints = j.value("constraints", job.constraints);
    if (j.contains("image"))
        job.image = j["image"].get<std::string>();
    job.codim_gt_one = j.value("codim_gt_one", job.codim_gt_one);
    job.seed = j.value("seed", job.seed);
    job.tol = j.value("tol", job.tol);
    job.trials = j.value("trials", job.trials);
    job.points = j.value("points", job.points);
    if (j.contains("a"))
        job.a = j["a"].get<std::string>();
    if (j.contains("range"))
        job.range = j["range"].get<std::string>();
    job.grid = j.value("grid", job.grid);
    job.serial = j.value("serial", job.serial);
    if (j.contains("output"))
        job.output = j["output"].get<std::string>();
    return job;
}

std::optional<JobSpec> parse_args(int argc, const char *const *argv, std::ostream &out) {
    CLI::App app{"Tropicalizations and adelic amoebas of Laurent hypersurfaces over Q and Q(z)"};
    JobSpec job;
    job.seed = env_seed();
    std::string command;
    std::optional<std::string> input;
    std::size_t rank = 0;

    app.add_option("command", command,
                   "trop | adelic | check-halfspace | classify | prevariety | ekl-check | product-formula | plot");
    app.add_option("--input", input, "job file (JSON object keyed by flag names)");
    auto *f = app.add_option("--f", job.f, "Laurent polynomial, e.g. \"z*x1+(z-1)*x2+(z-2)\"");
    auto *r = app.add_option("--rank", rank, "number of variables (inferred from x<i> if omitted)");
    auto *field = app.add_option("--field", job.field, "Q or Q(z) (inferred from z if omitted)");
    auto *place = app.add_option("--place", job.place, "p:<prime>, q:<poly>, inf, arch or generic");
    auto *h = app.add_option("--halfspace", job.halfspace, "dir:<csv> bnd:<csv>;<csv>...");
    auto *cons = app.add_option("--constraint", job.constraints, "\"poly\" or \"poly @ row;row;...\" (repeatable)");
    auto *image = app.add_option("--image", job.image, "image hypersurface in quotient coordinates");
    auto *codim = app.add_flag("--codim-gt-one", job.codim_gt_one, "declare the image has codimension > 1");
    auto *seed = app.add_option("--seed", job.seed, "sampling seed (default $AMOEBA_SEED or 0)");
    auto *tol = app.add_option("--tol", job.tol, "sampling tolerance");
    auto *trials = app.add_option("--trials", job.trials, "phase-search trials per point");
    auto *points = app.add_option("--points", job.points, "archimedean grid points along H");
    auto *a = app.add_option("--a", job.a, "element of Q or Q(z) for product-formula");
    auto *range = app.add_option("--range", job.range, "plot half-width (rational, default 4)");
    auto *grid = app.add_option("--grid", job.grid, "heat-scan cells per axis");
    auto *serial = app.add_flag("--serial", job.serial, "run the serial reference kernels");
    app.add_option("--output", job.output, "write the result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        usage(e.what());
    }
    if (r->count())
        job.rank = rank;

    if (input) {
        for (auto *opt : {f, r, field, place, h, cons, image, codim, seed, tol, trials, points, a, range, grid, serial})
            if (opt->count())
                usage("--input cannot be combined with " + opt->get_name());
        std::ifstream file(*input);
        if (!file)
            usage("cannot open job file " + *input);
        Json j;
        try {
            j = Json::parse(file);
        } catch (const Json::exception &e) {
            usage(std::string("job file: ") + e.what());
        }
        if (!command.empty()) {
            if (j.contains("command") && j["command"] != command)
                usage("command disagrees with the job file");
            j["command"] = command;
        }
        auto output = job.output;
        job = job_from_json(j);
        if (output)
            job.output = output;
        return job;
    }
    if (command.empty())
        usage("missing command (see --help)");
    job.command = command;
    return job;
}

int run(const JobSpec &job, std::ostream &out, std::ostream &err) {
    try {
        validate(job);
        if (job.command == "plot") {
            emit(job, run_plot(job), out);
        } else {
            emit(job, with_header(job, run_json(job)).dump(2) + "\n", out);
        }
        return 0;
    } catch (const Error &e) {
        report(err, error_code_name(e.code()), e.what());
        return e.code() == ErrorCode::InvariantFailure ? 3 : 2;
    } catch (const Json::exception &e) {
        report(err, error_code_name(ErrorCode::InvalidArgument), e.what());
        return 2;
    } catch (const std::exception &e) {
        report(err, error_code_name(ErrorCode::InvariantFailure), e.what());
        return 3;
    }
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    std::optional<JobSpec> job;
    try {
        job = parse_args(argc, argv, out);
    } catch (const Error &e) {
        report(err, error_code_name(e.code()), e.what());
        return 2;
    } catch (const Json::exception &e) {
        report(err, error_code_name(ErrorCode::InvalidArgument), e.what());
        return 2;
    }
    if (!job)
        return 0;
    return run(*job, out, err);
}

} // namespace amoeba::cli
