// Command-line front end for the sloped-width calculus: torus-knot
// surgery classification and atlases, decomposition transformations,
// width deductions, and closed-width bound checks.
//
// Exit codes: 0 success, 1 domain failure (failed validation, operation
// outside its domain, unwritable file), 2 usage error (bad flags,
// malformed input, input that an operation requires to be valid).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sloped_width/sloped_width.hpp"

namespace sw = sloped_width;

namespace {

bool color_enabled() { return std::getenv("SLOPED_WIDTH_NO_COLOR") == nullptr; }

void print_error(const std::string& message) {
    if (color_enabled())
        std::cerr << "\033[31merror:\033[0m " << message << '\n';
    else
        std::cerr << "error: " << message << '\n';
}

std::string read_input(const std::string& file) {
    std::ostringstream buffer;
    if (file.empty()) {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(file);
        if (!in) throw std::domain_error("cannot read file: " + file);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

int run_classify(long long p, long long q, const std::string& slope_text) {
    auto result = sw::classify(p, q, sw::parse_slope(slope_text));
    std::cout << sw::to_json(p, q, result).dump(2) << '\n';
    return 0;
}

void append_atlas_row(std::ostream& out, long long p, long long q,
                      const sw::SurgeryClassification& c, const std::string& slope_text) {
    std::vector<std::string> fields = {
        std::to_string(p),
        std::to_string(q),
        slope_text,
        c.delta ? std::to_string(*c.delta) : "",
        std::string(sw::surgery_class_name(c.surgery_class)),
        c.width.to_string(),
        c.filled_manifold.value_or(""),
        c.filled_width ? c.filled_width->to_string() : "",
    };
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

int run_atlas(long long p, long long q, long long rmax, long long smax,
              const std::string& out_path) {
    if (rmax < 0 || smax < 0) throw std::invalid_argument("atlas: rmax and smax must be >= 0");
    std::ostringstream csv;
    csv << "p,q,slope,delta,class,width,filled_manifold,filled_width\n";
    for (long long r = -rmax; r <= rmax; ++r) {
        for (long long s = 1; s <= smax; ++s) {
            if (std::gcd(r < 0 ? -r : r, s) != 1) continue;
            auto slope = sw::Slope::rational(r, s);
            append_atlas_row(csv, p, q, sw::classify(p, q, slope), slope.to_string());
        }
    }
    append_atlas_row(csv, p, q, sw::classify(p, q, sw::Slope::meridian()), "inf");
    append_atlas_row(csv, p, q, sw::classify(p, q, sw::Slope::closed()), "closed");

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::domain_error("cannot write file: " + out_path);
        out << csv.str();
        if (!out) throw std::domain_error("failed writing file: " + out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"width calculus for sloped generalized Heegaard splittings"};
    app.require_subcommand(1);

    long long p = 0, q = 0, rmax = 0, smax = 0;
    std::string slope_text, width_text, closed_text, sloped_text, file, out_path;
    std::size_t index = 1, component = 0;
    bool strict = false, planar = false;

    auto* classify_cmd = app.add_subcommand("classify", "classify one torus-knot surgery slope");
    classify_cmd->add_option("--p", p, "torus-knot parameter p")->required();
    classify_cmd->add_option("--q", q, "torus-knot parameter q")->required();
    classify_cmd->add_option("--slope", slope_text, "slope: r/s, n, inf, or closed")->required();

    auto* atlas_cmd = app.add_subcommand("atlas", "CSV width atlas over a slope grid");
    atlas_cmd->add_option("--p", p, "torus-knot parameter p")->required();
    atlas_cmd->add_option("--q", q, "torus-knot parameter q")->required();
    atlas_cmd->add_option("--rmax", rmax, "numerator range |r| <= rmax")->required();
    atlas_cmd->add_option("--smax", smax, "denominator range 1 <= s <= smax")->required();
    atlas_cmd->add_option("--out", out_path, "output file (default: stdout)");

    auto* decomp_cmd = app.add_subcommand("decomp", "operate on a decomposition JSON");
    decomp_cmd->require_subcommand(1);
    auto* validate_cmd = decomp_cmd->add_subcommand("validate", "check the data-model rules");
    validate_cmd->add_flag("--strict", strict, "also check thin-position necessary conditions");
    auto* stabilize_cmd =
        decomp_cmd->add_subcommand("stabilize", "alpha-stabilize one thick surface");
    stabilize_cmd->add_option("--slope", slope_text, "stabilization slope")->required();
    stabilize_cmd->add_option("--index", index, "thick surface index (1-based)");
    stabilize_cmd->add_option("--component", component, "component index (0-based)");
    auto* tube_cmd = decomp_cmd->add_subcommand("tube", "tube every surface closed");
    auto* fill_cmd = decomp_cmd->add_subcommand("fill", "Dehn fill along the slope");
    auto* width_cmd = decomp_cmd->add_subcommand("width", "width of the decomposition");
    for (auto* cmd : {validate_cmd, stabilize_cmd, tube_cmd, fill_cmd, width_cmd})
        cmd->add_option("--file", file, "decomposition JSON file (default: stdin)");

    auto* deduce_cmd = app.add_subcommand("deduce", "width-restriction deductions");
    deduce_cmd->add_option("--width", width_text, "width, e.g. 4,3")->required();
    deduce_cmd->add_option("--slope", slope_text, "slope the width was computed at")->required();
    deduce_cmd->add_flag("--planar", planar, "the width is realized by a single planar surface");

    auto* bounds_cmd = app.add_subcommand("bounds", "closed-width bound check");
    bounds_cmd->add_option("--closed", closed_text, "closed width")->required();
    bounds_cmd->add_option("--sloped", sloped_text, "sloped width")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(p, q, slope_text);
        if (atlas_cmd->parsed()) return run_atlas(p, q, rmax, smax, out_path);
        if (decomp_cmd->parsed()) {
            auto d = sw::parse_decomposition(read_input(file));
            if (validate_cmd->parsed()) {
                auto report = sw::validate(d, strict);
                std::cout << sw::to_json(report).dump(2) << '\n';
                return (strict ? report.strict_ok() : report.ok()) ? 0 : 1;
            }
            if (stabilize_cmd->parsed()) {
                auto result = sw::alpha_stabilize(d, sw::parse_slope(slope_text), index, component);
                std::cout << sw::serialize(result) << '\n';
                return 0;
            }
            if (tube_cmd->parsed()) {
                std::cout << sw::serialize(sw::tube_to_closed(d)) << '\n';
                return 0;
            }
            if (fill_cmd->parsed()) {
                std::cout << sw::serialize(sw::fill(d)) << '\n';
                return 0;
            }
            if (width_cmd->parsed()) {
                std::cout << sw::width_of(d).to_string() << '\n';
                return 0;
            }
        }
        if (deduce_cmd->parsed()) {
            auto groups =
                sw::deduce(sw::parse_width(width_text), sw::parse_slope(slope_text), planar);
            std::cout << sw::to_json(groups).dump(2) << '\n';
            return 0;
        }
        if (bounds_cmd->parsed()) {
            auto bounds = sw::check_theorem2_bounds(sw::parse_width(closed_text),
                                                    sw::parse_width(sloped_text));
            nlohmann::ordered_json j;
            j["lower_ok"] = bounds.lower_ok;
            j["upper_ok"] = bounds.upper_ok;
            std::cout << j.dump() << '\n';
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        print_error(e.what());
        return 2;
    } catch (const std::domain_error& e) {
        print_error(e.what());
        return 1;
    }
    return 0;
}
