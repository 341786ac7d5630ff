#include "qtg/io.hpp"

#include "qtg/errors.hpp"
#include "qtg/toric.hpp"

#include "json.hpp"

#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace qtg {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json json_from_int(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
    return x.str(); // decimal string once past 64 bits
}

Int int_from_json(const ordered_json& j, const std::string& field) {
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            Rat r = parse_rational(j.get<std::string>());
            if (is_integer(r)) return numerator(r);
        } catch (const SyntaxError&) {
        }
    }
    throw SchemaError(field, field + ": expected an exact integer");
}

int small_int_from_json(const ordered_json& j, const std::string& field) {
    Int value = int_from_json(j, field);
    if (value < -(1 << 30) || value > (1 << 30))
        throw SchemaError(field, field + ": value out of range");
    return static_cast<int>(value);
}

ordered_json json_from_rat(const Rat& x) {
    if (is_integer(x)) return json_from_int(numerator(x));
    return to_string(x);
}

Rat rat_from_json(const ordered_json& j, const std::string& field) {
    if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const SyntaxError& e) {
            throw SyntaxError(field + ": " + e.what());
        }
    }
    throw SchemaError(field, field + ": expected an integer or a \"p/q\" string");
}

IntVector int_vector_from_json(const ordered_json& j, const std::string& field) {
    if (!j.is_array())
        throw SchemaError(field, field + ": expected an array of integers");
    IntVector out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(int_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

ordered_json json_from_int_vector(const IntVector& v) {
    ordered_json out = ordered_json::array();
    for (const Int& x : v) out.push_back(json_from_int(x));
    return out;
}

void expect_keys(const ordered_json& j, const std::set<std::string>& allowed,
                 const std::string& where) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw SchemaError(item.key(), where + ": unexpected field \"" + item.key() + "\"");
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_longs(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_big(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out;
}

} // namespace

std::string to_string(Mode mode) {
    return mode == Mode::quasitoric ? "quasitoric" : "toric";
}

InputDocument parse_input(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(e.what());
    }
    if (!j.is_object())
        throw SchemaError("document", "top level must be a JSON object");
    expect_keys(j, {"mode", "dim", "facets", "lambda", "orientation", "nu"}, "document");

    InputDocument doc;

    if (!j.contains("mode") || !j["mode"].is_string())
        throw SchemaError("mode", "mode: expected \"quasitoric\" or \"toric\"");
    const std::string mode = j["mode"].get<std::string>();
    if (mode == "quasitoric")
        doc.mode = Mode::quasitoric;
    else if (mode == "toric")
        doc.mode = Mode::toric;
    else
        throw SchemaError("mode", "mode: expected \"quasitoric\" or \"toric\", got \"" + mode + "\"");

    if (!j.contains("dim"))
        throw SchemaError("dim", "dim: missing");
    doc.dim = small_int_from_json(j["dim"], "dim");
    if (doc.dim < 1)
        throw SchemaError("dim", "dim: must be at least 1");

    if (!j.contains("facets") || !j["facets"].is_array() || j["facets"].empty())
        throw SchemaError("facets", "facets: expected a nonempty array");
    for (std::size_t i = 0; i < j["facets"].size(); ++i) {
        const std::string where = "facets[" + std::to_string(i) + "]";
        const ordered_json& fj = j["facets"][i];
        if (!fj.is_object())
            throw SchemaError("facets", where + ": expected an object");
        expect_keys(fj, {"normal", "offset"}, where);
        if (!fj.contains("normal") || !fj.contains("offset"))
            throw SchemaError("facets", where + ": needs \"normal\" and \"offset\"");
        Facet f;
        f.normal = int_vector_from_json(fj["normal"], where + ".normal");
        if (f.normal.size() != static_cast<std::size_t>(doc.dim))
            throw DimensionMismatchError(where + ".normal: length " +
                                         std::to_string(f.normal.size()) + " differs from dim " +
                                         std::to_string(doc.dim));
        f.offset = rat_from_json(fj["offset"], where + ".offset");
        doc.facets.push_back(std::move(f));
    }

    if (doc.mode == Mode::toric) {
        if (j.contains("lambda"))
            throw SchemaError("lambda", "lambda: forbidden in toric mode "
                                        "(derived from the facet normals)");
    } else {
        if (!j.contains("lambda"))
            throw SchemaError("lambda", "lambda: required in quasitoric mode");
    }
    if (j.contains("lambda")) {
        if (!j["lambda"].is_array())
            throw SchemaError("lambda", "lambda: expected an array of columns");
        std::vector<IntVector> columns;
        for (std::size_t i = 0; i < j["lambda"].size(); ++i) {
            const std::string where = "lambda[" + std::to_string(i) + "]";
            IntVector col = int_vector_from_json(j["lambda"][i], where);
            if (col.size() != static_cast<std::size_t>(doc.dim))
                throw DimensionMismatchError(where + ": column length " +
                                             std::to_string(col.size()) +
                                             " differs from dim " + std::to_string(doc.dim));
            columns.push_back(std::move(col));
        }
        if (columns.size() != doc.facets.size())
            throw DimensionMismatchError("lambda: " + std::to_string(columns.size()) +
                                         " columns for " + std::to_string(doc.facets.size()) +
                                         " facets");
        doc.lambda = std::move(columns);
    }

    if (j.contains("orientation")) {
        doc.orientation = small_int_from_json(j["orientation"], "orientation");
        if (doc.orientation != 1 && doc.orientation != -1)
            throw SchemaError("orientation", "orientation: expected 1 or -1");
    }

    if (j.contains("nu")) {
        IntVector nu = int_vector_from_json(j["nu"], "nu");
        if (nu.size() != static_cast<std::size_t>(doc.dim))
            throw DimensionMismatchError("nu: length " + std::to_string(nu.size()) +
                                         " differs from dim " + std::to_string(doc.dim));
        doc.nu = std::move(nu);
    }

    return doc;
}

std::string serialize_input(const InputDocument& doc) {
    ordered_json j;
    j["mode"] = to_string(doc.mode);
    j["dim"] = doc.dim;
    j["facets"] = ordered_json::array();
    for (const Facet& f : doc.facets) {
        ordered_json fj;
        fj["normal"] = json_from_int_vector(f.normal);
        fj["offset"] = json_from_rat(f.offset);
        j["facets"].push_back(std::move(fj));
    }
    if (doc.lambda) {
        j["lambda"] = ordered_json::array();
        for (const IntVector& col : *doc.lambda) j["lambda"].push_back(json_from_int_vector(col));
    }
    j["orientation"] = doc.orientation;
    if (doc.nu) j["nu"] = json_from_int_vector(*doc.nu);
    return j.dump(2) + "\n";
}

namespace {

struct Pipeline {
    PolytopeData data;
    CharMatrix lambda;
    std::vector<LocalFrame> frames;
    NuVector nu;
};

Pipeline build_pipeline(const InputDocument& doc) {
    PolytopeData data = analyze(HPolytope(doc.dim, doc.facets));

    CharMatrix lambda(doc.dim, {});
    if (doc.mode == Mode::toric) {
        if (doc.orientation != 1)
            throw SchemaError("orientation",
                              "orientation: toric mode fixes the complex orientation (+1); "
                              "use quasitoric mode with explicit lambda to reverse it");
        require_integral(data);
        lambda = lambda_from_normals(data);
    } else {
        if (!doc.lambda)
            throw SchemaError("lambda", "lambda: required in quasitoric mode");
        lambda = CharMatrix(doc.dim, *doc.lambda);
        require_valid(data, validate_characteristic(data, lambda));
    }

    std::vector<LocalFrame> frames = build_frames(data, lambda, doc.orientation);

    NuVector nu;
    if (doc.nu) {
        nu = *doc.nu;
        if (gcd_of(nu) != 1)
            throw NonGenericNuError("nu must be a primitive integer vector");
        require_generic(frames, nu);
    } else {
        nu = find_generic_nu(frames);
    }
    return Pipeline{std::move(data), std::move(lambda), std::move(frames), std::move(nu)};
}

} // namespace

ReportDocument run_report(const InputDocument& doc) {
    Pipeline p = build_pipeline(doc);

    ReportDocument report;
    report.mode = doc.mode;
    report.dim = doc.dim;
    report.num_facets = static_cast<int>(doc.facets.size());
    report.orientation = doc.orientation;

    GenusReport genus;
    if (doc.mode == Mode::toric) {
        ToricReport tr = toric_report(p.data, p.nu);
        genus = std::move(tr.genus);
        report.morse_counts = std::move(tr.morse_counts);
    } else {
        genus = genus_report(p.data, p.frames, p.nu);
    }

    report.nu_used = genus.nu_used;
    report.chi = genus.chi;
    report.signature = genus.signature;
    report.todd = genus.todd;
    report.top_chern = genus.top_chern;
    report.euler = genus.euler;
    report.f_vector = genus.f_vector;
    report.h_vector = genus.h_vector;

    for (const LocalFrame& frame : p.frames) {
        VertexRow row;
        row.coords = p.data.vertices[frame.vertex].coords;
        row.tight_facets = p.data.vertices[frame.vertex].tight_facets;
        row.ordered_facets = frame.ordered_facets;
        row.sigma = frame.sigma;
        row.index = index_mu(frame, report.nu_used);
        row.weights = weights(frame, report.nu_used);
        report.vertices.push_back(std::move(row));
    }

    report.validation = ValidationSummary{true, true, true, true};
    return report;
}

RigidityReport run_rigidity(const InputDocument& doc, const std::vector<Rat>& samples) {
    Pipeline p = build_pipeline(doc);
    return rigidity_check(p.frames, p.nu, samples);
}

std::string serialize_report(const ReportDocument& report) {
    ordered_json j;
    j["mode"] = to_string(report.mode);
    j["dim"] = report.dim;
    j["num_facets"] = report.num_facets;
    j["orientation"] = report.orientation;
    j["nu_used"] = json_from_int_vector(report.nu_used);
    ordered_json chi = ordered_json::array();
    for (const Int& c : report.chi.coefficients()) chi.push_back(json_from_int(c));
    j["chi_y"] = std::move(chi);
    j["signature"] = json_from_int(report.signature);
    j["todd"] = json_from_int(report.todd);
    j["top_chern"] = json_from_int(report.top_chern);
    j["euler"] = report.euler;
    j["f_vector"] = report.f_vector;
    j["h_vector"] = report.h_vector;
    if (report.morse_counts) j["morse_counts"] = *report.morse_counts;
    j["vertices"] = ordered_json::array();
    for (const VertexRow& row : report.vertices) {
        ordered_json vj;
        ordered_json coords = ordered_json::array();
        for (const Rat& c : row.coords) coords.push_back(to_string(c));
        vj["coords"] = std::move(coords);
        vj["tight_facets"] = row.tight_facets;
        vj["ordered_facets"] = row.ordered_facets;
        vj["sigma"] = row.sigma;
        vj["index"] = row.index;
        vj["weights"] = json_from_int_vector(row.weights);
        j["vertices"].push_back(std::move(vj));
    }
    j["validation"] = ordered_json{{"simple_and_bounded", report.validation.simple_and_bounded},
                                   {"columns_primitive", report.validation.columns_primitive},
                                   {"minors_unimodular", report.validation.minors_unimodular},
                                   {"nu_generic", report.validation.nu_generic}};
    return j.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(e.what());
    }
    ReportDocument report;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "quasitoric" && mode != "toric")
        throw SchemaError("mode", "mode: unknown value \"" + mode + "\"");
    report.mode = mode == "toric" ? Mode::toric : Mode::quasitoric;
    report.dim = small_int_from_json(j.at("dim"), "dim");
    report.num_facets = small_int_from_json(j.at("num_facets"), "num_facets");
    report.orientation = small_int_from_json(j.at("orientation"), "orientation");
    report.nu_used = int_vector_from_json(j.at("nu_used"), "nu_used");
    report.chi = YPolynomial(int_vector_from_json(j.at("chi_y"), "chi_y"));
    report.signature = int_from_json(j.at("signature"), "signature");
    report.todd = int_from_json(j.at("todd"), "todd");
    report.top_chern = int_from_json(j.at("top_chern"), "top_chern");
    report.euler = j.at("euler").get<long long>();
    report.f_vector = j.at("f_vector").get<std::vector<long long>>();
    report.h_vector = j.at("h_vector").get<std::vector<long long>>();
    if (j.contains("morse_counts"))
        report.morse_counts = j.at("morse_counts").get<std::vector<long long>>();
    for (const ordered_json& vj : j.at("vertices")) {
        VertexRow row;
        for (const ordered_json& c : vj.at("coords"))
            row.coords.push_back(parse_rational(c.get<std::string>()));
        row.tight_facets = vj.at("tight_facets").get<std::vector<int>>();
        row.ordered_facets = vj.at("ordered_facets").get<std::vector<int>>();
        row.sigma = small_int_from_json(vj.at("sigma"), "sigma");
        row.index = small_int_from_json(vj.at("index"), "index");
        row.weights = int_vector_from_json(vj.at("weights"), "weights");
        report.vertices.push_back(std::move(row));
    }
    const ordered_json& val = j.at("validation");
    report.validation.simple_and_bounded = val.at("simple_and_bounded").get<bool>();
    report.validation.columns_primitive = val.at("columns_primitive").get<bool>();
    report.validation.minors_unimodular = val.at("minors_unimodular").get<bool>();
    report.validation.nu_generic = val.at("nu_generic").get<bool>();
    return report;
}

std::string format_report_text(const ReportDocument& report) {
    std::ostringstream out;
    out << "mode:          " << to_string(report.mode) << "\n";
    out << "dimension:     " << report.dim << "\n";
    out << "facets:        " << report.num_facets << "\n";
    out << "orientation:   " << (report.orientation > 0 ? "+1" : "-1") << "\n";
    out << "nu:            (" << join_big(report.nu_used) << ")\n";
    out << "chi_y:         " << report.chi.str() << "\n";
    out << "signature:     " << report.signature.str() << "\n";
    out << "todd genus:    " << report.todd.str() << "\n";
    out << "top Chern:     " << report.top_chern.str() << "\n";
    out << "euler number:  " << report.euler << "\n";
    out << "f-vector:      (" << join_longs(report.f_vector) << ")\n";
    out << "h-vector:      (" << join_longs(report.h_vector) << ")\n";
    if (report.morse_counts)
        out << "morse counts:  (" << join_longs(*report.morse_counts) << ")\n";
    out << "vertices:\n";
    for (std::size_t i = 0; i < report.vertices.size(); ++i) {
        const VertexRow& row = report.vertices[i];
        out << "  [" << i << "] " << coords_to_string(row.coords)
            << "  facets {" << join_ints(row.tight_facets) << "}"
            << "  ordered (" << join_ints(row.ordered_facets) << ")"
            << "  sigma " << (row.sigma > 0 ? "+1" : "-1")
            << "  index " << row.index
            << "  weights (" << join_big(row.weights) << ")\n";
    }
    out << "validation:    polytope simple and bounded; columns primitive; "
           "minors unimodular; nu generic\n";
    return out.str();
}

} // namespace qtg
