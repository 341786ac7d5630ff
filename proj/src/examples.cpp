#include "qtg/errors.hpp"
#include "qtg/io.hpp"

#include <regex>
#include <string>
#include <vector>

namespace qtg {

namespace {

Facet make_facet(IntVector normal, long long offset) {
    return Facet{std::move(normal), Rat(offset)};
}

IntVector unit(int n, int k) {
    IntVector v(n, Int(0));
    v[k] = 1;
    return v;
}

// Standard simplex 0 <= x_i, sum x_i <= 1 with the slanted facet first, so
// the facet numbering of the cp2 fixtures matches simplex-2.
std::vector<Facet> simplex_facets(int n) {
    std::vector<Facet> facets;
    facets.push_back(make_facet(IntVector(n, Int(-1)), 1));
    for (int k = 0; k < n; ++k) facets.push_back(make_facet(unit(n, k), 0));
    return facets;
}

InputDocument cp2_with_lambda(std::vector<IntVector> lambda) {
    InputDocument doc;
    doc.mode = Mode::quasitoric;
    doc.dim = 2;
    doc.facets = simplex_facets(2);
    doc.lambda = std::move(lambda);
    return doc;
}

InputDocument simplex_example(int n) {
    InputDocument doc;
    doc.mode = Mode::toric;
    doc.dim = n;
    doc.facets = simplex_facets(n);
    return doc;
}

InputDocument cube_example(int n) {
    InputDocument doc;
    doc.mode = Mode::toric;
    doc.dim = n;
    for (int k = 0; k < n; ++k) doc.facets.push_back(make_facet(unit(n, k), 0));
    for (int k = 0; k < n; ++k) {
        IntVector normal(n, Int(0));
        normal[k] = -1;
        doc.facets.push_back(make_facet(std::move(normal), 1));
    }
    return doc;
}

IntVector padded(const IntVector& v, int left, int right) {
    IntVector out(left, Int(0));
    out.insert(out.end(), v.begin(), v.end());
    out.insert(out.end(), right, Int(0));
    return out;
}

// Characteristic columns of a factor: explicit in quasitoric mode, primitive
// inward normals in toric mode.
std::vector<IntVector> factor_columns(const InputDocument& doc) {
    if (doc.lambda) return *doc.lambda;
    std::vector<IntVector> columns;
    for (const Facet& f : doc.facets) columns.push_back(make_primitive(f.normal));
    return columns;
}

InputDocument product_example(const InputDocument& a, const InputDocument& b) {
    InputDocument doc;
    doc.dim = a.dim + b.dim;
    for (const Facet& f : a.facets)
        doc.facets.push_back(Facet{padded(f.normal, 0, b.dim), f.offset});
    for (const Facet& f : b.facets)
        doc.facets.push_back(Facet{padded(f.normal, a.dim, 0), f.offset});

    if (a.mode == Mode::toric && b.mode == Mode::toric) {
        doc.mode = Mode::toric;
    } else {
        doc.mode = Mode::quasitoric;
        std::vector<IntVector> columns;
        for (const IntVector& col : factor_columns(a)) columns.push_back(padded(col, 0, b.dim));
        for (const IntVector& col : factor_columns(b)) columns.push_back(padded(col, a.dim, 0));
        doc.lambda = std::move(columns);
    }
    doc.orientation = a.orientation * b.orientation;
    return doc;
}

int parse_size_suffix(const std::string& name, const std::string& prefix) {
    const std::string digits = name.substr(prefix.size());
    if (digits.empty() || digits.size() > 2)
        throw UnknownExampleError("unknown example \"" + name + "\"");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw UnknownExampleError("unknown example \"" + name + "\"");
    int n = std::stoi(digits);
    if (n < 1)
        throw UnknownExampleError("unknown example \"" + name + "\" (size must be >= 1)");
    return n;
}

InputDocument atom_example(const std::string& name) {
    if (name == "cp2")
        return cp2_with_lambda({{-1, -1}, {1, 0}, {0, 1}});
    if (name == "cp2-bar")
        return cp2_with_lambda({{1, -1}, {-1, 0}, {0, 1}});
    if (name == "cp2-eta")
        return cp2_with_lambda({{1, 1}, {1, 0}, {0, 1}});
    if (name.rfind("simplex-", 0) == 0)
        return simplex_example(parse_size_suffix(name, "simplex-"));
    if (name.rfind("cube-", 0) == 0)
        return cube_example(parse_size_suffix(name, "cube-"));
    throw UnknownExampleError("unknown example \"" + name + "\"");
}

} // namespace

// Splits "cube-2xsimplex-3" into factor names. A plain split on 'x' would
// cut "simplex" apart, so atoms are matched greedily instead.
std::vector<std::string> split_product_name(const std::string& name) {
    static const std::regex atom("^(cp2-bar|cp2-eta|cp2|simplex-[0-9]+|cube-[0-9]+)");
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::smatch match;
        const std::string rest = name.substr(pos);
        if (!std::regex_search(rest, match, atom))
            throw UnknownExampleError("unknown example \"" + name + "\"");
        parts.push_back(match[1]);
        pos += match[1].length();
        if (pos == name.size()) break;
        if (name[pos] != 'x')
            throw UnknownExampleError("unknown example \"" + name + "\"");
        ++pos;
    }
    return parts;
}

InputDocument generate_example(const std::string& name) {
    std::vector<std::string> parts = split_product_name(name);
    InputDocument doc = atom_example(parts.front());
    for (std::size_t i = 1; i < parts.size(); ++i)
        doc = product_example(doc, atom_example(parts[i]));
    return doc;
}

std::vector<std::string> example_names() {
    return {"cp2", "cp2-bar", "cp2-eta", "simplex-N", "cube-N",
            "products joined with 'x', e.g. cp2xsimplex-1"};
}

} // namespace qtg
