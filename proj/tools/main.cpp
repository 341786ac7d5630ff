#include "qtg/errors.hpp"
#include "qtg/io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 success, 1 validation failure, 2 parse/read error,
// 3 internal fault.
constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kParseError = 2;
constexpr int kInternalError = 3;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in.good())
        throw qtg::SyntaxError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

qtg::IntVector parse_nu_flag(const std::string& text) {
    qtg::IntVector nu;
    for (const std::string& part : split_commas(text)) {
        qtg::Rat r = qtg::parse_rational(part);
        if (!qtg::is_integer(r))
            throw qtg::SyntaxError("--nu entries must be integers");
        nu.push_back(numerator(r));
    }
    if (nu.empty())
        throw qtg::SyntaxError("--nu must list at least one integer");
    return nu;
}

std::vector<qtg::Rat> parse_samples_flag(const std::string& text) {
    std::vector<qtg::Rat> samples;
    for (const std::string& part : split_commas(text))
        samples.push_back(qtg::parse_rational(part));
    return samples;
}

std::vector<qtg::Rat> default_samples() {
    return {qtg::Rat(1, 2), qtg::Rat(2), qtg::Rat(-1, 3), qtg::Rat(3), qtg::Rat(5, 7)};
}

void print_rigidity(const qtg::RigidityReport& rigidity, std::ostream& out) {
    out << "equivariant rigidity (expected " << rigidity.expected.str() << "):\n";
    for (const qtg::RigiditySample& s : rigidity.samples)
        out << "  q = " << qtg::to_string(s.q) << ": "
            << (s.matches ? "ok" : "MISMATCH " + s.value.str()) << "\n";
    if (rigidity.samples.empty()) out << "  (no sample points)\n";
}

int run_compute(const std::string& input, const std::optional<std::string>& nu_flag,
                const std::string& format, const std::optional<std::string>& samples_flag,
                bool toric_verb) {
    qtg::InputDocument doc = qtg::parse_input(read_file(input));
    if (toric_verb && doc.mode != qtg::Mode::toric)
        throw qtg::SchemaError("mode", "the toric command needs a toric-mode document");
    if (nu_flag) doc.nu = parse_nu_flag(*nu_flag);

    qtg::ReportDocument report = qtg::run_report(doc);

    std::vector<qtg::Rat> samples =
        samples_flag ? parse_samples_flag(*samples_flag) : default_samples();
    qtg::RigidityReport rigidity = qtg::run_rigidity(doc, samples);

    if (format == "json") {
        std::cout << qtg::serialize_report(report);
        print_rigidity(rigidity, std::cerr);
    } else {
        std::cout << qtg::format_report_text(report);
        print_rigidity(rigidity, std::cout);
    }
    if (!rigidity.ok)
        throw std::logic_error("equivariant evaluation disagrees with the combinatorial genus");
    return kOk;
}

int run_check(const std::string& input) {
    qtg::InputDocument doc = qtg::parse_input(read_file(input));
    std::cout << "parsed: mode " << qtg::to_string(doc.mode) << ", dim " << doc.dim << ", "
              << doc.facets.size() << " facets\n";
    qtg::ReportDocument report = qtg::run_report(doc);
    std::cout << "polytope: simple and bounded, " << report.vertices.size() << " vertices\n";
    if (doc.mode == qtg::Mode::toric)
        std::cout << "toric: integral and smooth\n";
    else
        std::cout << "characteristic matrix: columns primitive, vertex minors unimodular\n";
    std::cout << "nu: (" << [&] {
        std::string s;
        for (std::size_t i = 0; i < report.nu_used.size(); ++i)
            s += (i ? ", " : "") + report.nu_used[i].str();
        return s;
    }() << ") generic\n";
    std::cout << "ok\n";
    return kOk;
}

int run_example(const std::string& name, const std::optional<std::string>& write_path) {
    qtg::InputDocument doc = qtg::generate_example(name);
    std::string text = qtg::serialize_input(doc);
    if (write_path) {
        std::ofstream out(*write_path, std::ios::binary | std::ios::trunc);
        if (!out.good())
            throw qtg::Error("cannot write file: " + *write_path);
        out << text;
    } else {
        std::cout << text;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hirzebruch genera of quasitoric manifolds from characteristic pairs"};
    app.require_subcommand(1);

    std::string input;
    std::string format = "text";
    std::optional<std::string> nu_flag;
    std::optional<std::string> samples_flag;
    std::string example_name;
    std::optional<std::string> write_path;

    CLI::App* compute = app.add_subcommand(
        "compute", "Full genus report plus the equivariant rigidity check");
    compute->add_option("--input", input, "Input document (JSON), or - for stdin")->required();
    compute->add_option("--nu", nu_flag, "Generic direction, e.g. \"1,2\"");
    compute->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--samples", samples_flag,
                        "Rigidity sample points, e.g. \"1/2,2,-1/3\" (default "
                        "\"1/2,2,-1/3,3,5/7\")");

    CLI::App* check = app.add_subcommand("check", "Validate a document without computing genera");
    check->add_option("--input", input, "Input document (JSON), or - for stdin")->required();

    CLI::App* example = app.add_subcommand("example", "Emit a built-in example document");
    example->add_option("name", example_name,
                        "cp2 | cp2-bar | cp2-eta | simplex-N | cube-N | products with 'x'")
        ->required();
    example->add_option("--write", write_path, "Write to a file instead of stdout");

    CLI::App* toric = app.add_subcommand("toric", "Genus report for a toric-mode document");
    toric->add_option("--input", input, "Input document (JSON), or - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed())
            return run_compute(input, nu_flag, format, samples_flag, false);
        if (check->parsed())
            return run_check(input);
        if (example->parsed())
            return run_example(example_name, write_path);
        if (toric->parsed())
            return run_compute(input, std::nullopt, "text", std::nullopt, true);
    } catch (const qtg::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const qtg::SchemaError& e) {
        std::cerr << "parse error [" << e.field << "]: " << e.what() << "\n";
        return kParseError;
    } catch (const qtg::DimensionMismatchError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const qtg::Error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInternalError;
}
