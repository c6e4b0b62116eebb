#include "dihext/cli.hpp"

#include "dihext/category_o.hpp"
#include "dihext/dihedral.hpp"
#include "dihext/hecke.hpp"
#include "dihext/laurent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dihext::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { tsv, json, latex };

Format parse_format(const std::string& name) {
    if (name == "tsv")
        return Format::tsv;
    if (name == "json")
        return Format::json;
    return Format::latex;
}

// The ext subcommand double-computes its table; a mismatch is unreachable
// unless the library itself is broken, and maps to exit code 3.
struct InternalCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string json_payload(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string tsv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (size_t c = 0; c < header.size(); ++c) {
        if (c > 0)
            out += '\t';
        out += header[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += '\t';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

std::string latex_table(const std::string& colspec, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::string out = "\\begin{tabular}{" + colspec + "}\n";
    for (size_t c = 0; c < header.size(); ++c) {
        if (c > 0)
            out += " & ";
        out += header[c];
    }
    out += " \\\\\n\\hline\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += " & ";
            out += row[c];
        }
        out += " \\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

std::string element_latex(const DihedralElement& w) {
    if (w.is_longest())
        return "$w_0$";
    return "$" + w.to_string() + "$";
}

std::string poly_text(const LaurentPolynomial& p, std::string_view var, Format f) {
    return f == Format::latex ? to_latex(p, var) : to_string(p, var);
}

// ---- subcommand payloads ----------------------------------------------

std::string ext_payload(const DihedralElement& x, const DihedralElement& y, Format f) {
    const ExtTable table = ext_via_resolution(x, y);
    const ExtTable check = ext_closed_form(x, y);
    if (table.entries != check.entries)
        throw InternalCheckError("ext tables disagree for x = " + x.to_string() +
                                 ", y = " + y.to_string() + ", m = " + std::to_string(x.m()));

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = x.m();
        doc["x"] = x.to_string();
        doc["y"] = y.to_string();
        auto entries = ordered_json::array();
        for (const auto& [ji, dim] : table.entries)
            entries.push_back({{"j", ji.first}, {"i", ji.second}, {"dim", dim}});
        doc["entries"] = std::move(entries);
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& [ji, dim] : table.entries)
        rows.push_back({std::to_string(ji.first), std::to_string(ji.second),
                        std::to_string(dim)});
    if (f == Format::tsv)
        return tsv_table({"j", "i", "dim"}, rows);
    return latex_table("rrr", {"j", "i", "dim"}, rows);
}

std::string ext_table_payload(GroupParams params, Format f) {
    struct Row {
        DihedralElement x, y;
        BiLaurentPolynomial poly;
    };
    std::vector<Row> table;
    for (const auto& x : elements(params))
        for (const auto& y : elements(params)) {
            BiLaurentPolynomial e;
            if (bruhat_leq(y, x))
                e = e_generating_function(x, y);
            table.push_back({x, y, std::move(e)});
        }

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = params.m();
        auto rows = ordered_json::array();
        for (const auto& row : table)
            rows.push_back({{"x", row.x.to_string()},
                            {"y", row.y.to_string()},
                            {"poly", to_string(row.poly)}});
        doc["rows"] = std::move(rows);
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& row : table) {
        if (f == Format::tsv)
            rows.push_back({row.x.to_string(), row.y.to_string(), to_string(row.poly)});
        else
            rows.push_back({element_latex(row.x), element_latex(row.y),
                            "$" + to_latex(row.poly) + "$"});
    }
    if (f == Format::tsv)
        return tsv_table({"x", "y", "polynomial"}, rows);
    return latex_table("lll", {"x", "y", "polynomial"}, rows);
}

std::string hom_payload(const DihedralElement& x, const DihedralElement& y, Format f) {
    // The dimension sequence over k is finitely supported; zero entries are
    // omitted.
    std::vector<std::pair<int, int>> homs;
    const int k0 = x.length() - y.length();
    if (int dim = hom_verma_verma(x, y, k0); dim != 0)
        homs.emplace_back(k0, dim);

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = x.m();
        doc["x"] = x.to_string();
        doc["y"] = y.to_string();
        auto arr = ordered_json::array();
        for (const auto& [k, dim] : homs)
            arr.push_back({{"k", k}, {"dim", dim}});
        doc["homs"] = std::move(arr);
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, dim] : homs)
        rows.push_back({std::to_string(k), std::to_string(dim)});
    if (f == Format::tsv)
        return tsv_table({"k", "dim"}, rows);
    return latex_table("rr", {"k", "dim"}, rows);
}

std::string resolution_payload(const DihedralElement& x, Format f) {
    const Resolution res = proj_resolution(x);

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = x.m();
        doc["x"] = x.to_string();
        auto terms = ordered_json::array();
        for (const auto& term : res.terms) {
            auto summands = ordered_json::array();
            for (const auto& [z, shift] : term)
                summands.push_back({{"z", z.to_string()}, {"shift", shift}});
            terms.push_back(std::move(summands));
        }
        doc["terms"] = std::move(terms);
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows;
    for (size_t j = 0; j < res.terms.size(); ++j)
        for (const auto& [z, shift] : res.terms[j]) {
            if (f == Format::tsv)
                rows.push_back({std::to_string(j), z.to_string(), std::to_string(shift)});
            else
                rows.push_back({std::to_string(j), element_latex(z), std::to_string(shift)});
        }
    if (f == Format::tsv)
        return tsv_table({"j", "z", "shift"}, rows);
    return latex_table("rlr", {"j", "z", "shift"}, rows);
}

std::string character_payload(const DihedralElement& y, Format f) {
    const GradedCharacter ch = verma_character(y);

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = y.m();
        doc["y"] = y.to_string();
        auto arr = ordered_json::array();
        for (const auto& [z, row] : ch.entries())
            for (const auto& [d, mult] : row)
                arr.push_back({{"z", z.to_string()},
                               {"degree", d},
                               {"layer", -d},
                               {"mult", mult}});
        doc["entries"] = std::move(arr);
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& [z, row] : ch.entries())
        for (const auto& [d, mult] : row) {
            std::string zs = f == Format::latex ? element_latex(z) : z.to_string();
            rows.push_back({zs, std::to_string(d), std::to_string(-d), std::to_string(mult)});
        }
    if (f == Format::tsv)
        return tsv_table({"z", "degree", "layer", "mult"}, rows);
    return latex_table("lrrr", {"z", "degree", "layer", "mult"}, rows);
}

std::string klbasis_payload(const DihedralElement& w, Format f) {
    const HeckeElement b = kl_basis(w);

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = w.m();
        doc["w"] = w.to_string();
        auto arr = ordered_json::array();
        for (const auto& [y, p] : b.support())
            arr.push_back({{"y", y.to_string()}, {"coefficient", to_string(p, "v")}});
        doc["coefficients"] = std::move(arr);
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows;
    for (const auto& [y, p] : b.support()) {
        if (f == Format::tsv)
            rows.push_back({y.to_string(), to_string(p, "v")});
        else
            rows.push_back({element_latex(y), "$" + to_latex(p, "v") + "$"});
    }
    if (f == Format::tsv)
        return tsv_table({"y", "coefficient"}, rows);
    return latex_table("ll", {"y", "coefficient"}, rows);
}

std::string rpoly_payload(const DihedralElement& x, const DihedralElement& y, Format f) {
    const LaurentPolynomial r = r_polynomial(x, y);
    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = x.m();
        doc["x"] = x.to_string();
        doc["y"] = y.to_string();
        doc["poly"] = to_string(r, "q");
        return json_payload(doc);
    }
    if (f == Format::tsv)
        return to_string(r, "q") + "\n";
    return "$" + to_latex(r, "q") + "$\n";
}

std::string gj_payload(const DihedralElement& x, const DihedralElement& y, Format f) {
    const GabberJosephReport report = gabber_joseph_report(x, y);

    if (f == Format::json) {
        ordered_json doc;
        doc["m"] = x.m();
        doc["x"] = x.to_string();
        doc["y"] = y.to_string();
        doc["ext_poly"] = to_string(report.ext_poly, "q");
        doc["r_poly"] = to_string(report.r_poly, "q");
        doc["difference"] = to_string(report.difference, "q");
        return json_payload(doc);
    }

    std::vector<std::vector<std::string>> rows = {
        {"ext_poly", poly_text(report.ext_poly, "q", f)},
        {"r_poly", poly_text(report.r_poly, "q", f)},
        {"difference", poly_text(report.difference, "q", f)},
    };
    if (f == Format::latex)
        for (auto& row : rows)
            row[1] = "$" + row[1] + "$";
    if (f == Format::tsv)
        return tsv_table({"quantity", "value"}, rows);
    return latex_table("lr", {"quantity", "value"}, rows);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graded Ext groups between Verma modules over dihedral groups"};
    app.name("dihext");
    app.require_subcommand(1);

    int m = 2;
    std::string format = "tsv";
    std::string x_text, y_text, w_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "order m >= 2 of st in I2(m)")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"tsv", "json", "latex"}));
    };

    auto* ext = app.add_subcommand("ext", "graded Ext table between two Verma modules");
    add_common(ext);
    ext->add_option("--x", x_text)->required();
    ext->add_option("--y", y_text)->required();

    auto* ext_table = app.add_subcommand("ext-table", "e(x,y) for all ordered pairs");
    add_common(ext_table);

    auto* hom = app.add_subcommand("hom", "graded Hom dimensions between two Verma modules");
    add_common(hom);
    hom->add_option("--x", x_text)->required();
    hom->add_option("--y", y_text)->required();

    auto* resolution = app.add_subcommand("resolution", "projective resolution of a Verma module");
    add_common(resolution);
    resolution->add_option("--x", x_text)->required();

    auto* character = app.add_subcommand("character", "graded character of a Verma module");
    add_common(character);
    character->add_option("--y", y_text)->required();

    auto* klbasis = app.add_subcommand("klbasis", "Kazhdan-Lusztig basis element");
    add_common(klbasis);
    klbasis->add_option("--w", w_text)->required();

    auto* rpoly = app.add_subcommand("rpoly", "R-polynomial of a pair of elements");
    add_common(rpoly);
    rpoly->add_option("--x", x_text)->required();
    rpoly->add_option("--y", y_text)->required();

    auto* gj = app.add_subcommand("gj", "ungraded Ext dimensions next to the R-polynomial");
    add_common(gj);
    gj->add_option("--x", x_text)->required();
    gj->add_option("--y", y_text)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const GroupParams params(m);
        const Format f = parse_format(format);
        if (ext->parsed())
            out << ext_payload(parse_element(x_text, params), parse_element(y_text, params), f);
        else if (ext_table->parsed())
            out << ext_table_payload(params, f);
        else if (hom->parsed())
            out << hom_payload(parse_element(x_text, params), parse_element(y_text, params), f);
        else if (resolution->parsed())
            out << resolution_payload(parse_element(x_text, params), f);
        else if (character->parsed())
            out << character_payload(parse_element(y_text, params), f);
        else if (klbasis->parsed())
            out << klbasis_payload(parse_element(w_text, params), f);
        else if (rpoly->parsed())
            out << rpoly_payload(parse_element(x_text, params), parse_element(y_text, params), f);
        else if (gj->parsed())
            out << gj_payload(parse_element(x_text, params), parse_element(y_text, params), f);
        return 0;
    } catch (const InternalCheckError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dihext::cli
