#ifndef QTG_IO_HPP
#define QTG_IO_HPP

#include "qtg/char_pair.hpp"
#include "qtg/equivariant.hpp"
#include "qtg/genera.hpp"
#include "qtg/polytope.hpp"
#include "qtg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtg {

enum class Mode { quasitoric, toric };

std::string to_string(Mode mode);

/// A characteristic pair as serialized on disk (JSON). In quasitoric mode the
/// characteristic matrix is given explicitly as a list of columns; in toric
/// mode it is derived from the facet normals and the field must be absent.
struct InputDocument {
    Mode mode = Mode::quasitoric;
    int dim = 0;
    std::vector<Facet> facets;
    std::optional<std::vector<IntVector>> lambda;
    int orientation = 1;
    std::optional<IntVector> nu;

    bool operator==(const InputDocument&) const = default;
};

/// Parses and validates a JSON input document. Throws SyntaxError for
/// malformed JSON or number literals, SchemaError for missing, unexpected or
/// mistyped fields, DimensionMismatch for inconsistent lengths.
InputDocument parse_input(const std::string& text);

/// Deterministic serialization; parse_input(serialize_input(d)) == d.
std::string serialize_input(const InputDocument& doc);

/// Built-in fixtures: "cp2", "cp2-bar", "cp2-eta", "simplex-N", "cube-N",
/// and products of those joined with "x" (e.g. "cp2xsimplex-1").
InputDocument generate_example(const std::string& name);

std::vector<std::string> example_names();

/// One row of the per-vertex diagnostic table.
struct VertexRow {
    QVector coords;
    std::vector<int> tight_facets;
    std::vector<int> ordered_facets;
    int sigma = 0;
    int index = 0;
    std::vector<Int> weights;

    bool operator==(const VertexRow&) const = default;
};

struct ValidationSummary {
    bool simple_and_bounded = false;
    bool columns_primitive = false;
    bool minors_unimodular = false;
    bool nu_generic = false;

    bool operator==(const ValidationSummary&) const = default;
};

struct ReportDocument {
    Mode mode = Mode::quasitoric;
    int dim = 0;
    int num_facets = 0;
    int orientation = 1;
    NuVector nu_used;
    YPolynomial chi{std::vector<Int>{}};
    Int signature = 0;
    Int todd = 0;
    Int top_chern = 0;
    long long euler = 0;
    FVector f_vector;
    HVector h_vector;
    std::optional<std::vector<long long>> morse_counts; // toric mode only
    std::vector<VertexRow> vertices;
    ValidationSummary validation;

    bool operator==(const ReportDocument&) const = default;
};

/// Runs the whole pipeline on a parsed document. Deterministic: identical
/// documents produce byte-identical serialized reports.
ReportDocument run_report(const InputDocument& doc);

/// Equivariant rigidity for the same document at the given sample points.
RigidityReport run_rigidity(const InputDocument& doc, const std::vector<Rat>& samples);

std::string serialize_report(const ReportDocument& report);
ReportDocument report_from_json(const std::string& text);
std::string format_report_text(const ReportDocument& report);

} // namespace qtg

#endif
