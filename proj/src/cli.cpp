#include "gocohom/cli.hpp"

#include <memory>
#include <ostream>
#include <stdexcept>

#include "gocohom/expr.hpp"
#include "gocohom/serialize.hpp"

namespace gocohom {

namespace {

using nlohmann::json;

std::string labels_line(const std::vector<LabeledElem>& basis) {
    std::string s;
    for (const LabeledElem& le : basis) {
        if (!s.empty()) s += ", ";
        s += le.label;
    }
    return s.empty() ? "0" : s;
}

int run_basis(const Command& cmd, const DiskCache* cache, std::ostream& out) {
    const auto basis = basis_cached(cmd.n, cmd.degree, cache);
    if (cmd.format == "json")
        out << json{{"n", cmd.n}, {"degree", cmd.degree}, {"basis", basis_to_json(basis)}}
                   .dump(2)
            << "\n";
    else
        out << labels_line(basis) << "\n";
    return 0;
}

int run_mul(const Command& cmd, std::ostream& out, std::ostream& err) {
    if (cmd.exprs.size() != 2) {
        err << "mul needs exactly two expressions\n";
        return 2;
    }
    const Parsed lhs = parse_expr(cmd.exprs[0], cmd.n);
    const Parsed rhs = parse_expr(cmd.exprs[1], cmd.n);
    if (lhs.index() != rhs.index()) {
        err << "mul operands must use the same alphabet\n";
        return 2;
    }
    if (std::holds_alternative<Poly2>(lhs)) {
        const Poly2 prod = std::get<Poly2>(lhs) * std::get<Poly2>(rhs);
        if (cmd.format == "json")
            out << poly_to_json(prod).dump(2) << "\n";
        else
            out << to_text(prod) << "\n";
        return 0;
    }
    const CohomElem prod = std::get<CohomElem>(lhs) * std::get<CohomElem>(rhs);
    if (cmd.format == "json")
        out << elem_to_json(prod).dump(2) << "\n";
    else
        out << element_text(prod) << "\n";
    return 0;
}

int run_coords(const Command& cmd, const DiskCache* cache, std::ostream& out,
               std::ostream& err) {
    if (cmd.exprs.size() != 1) {
        err << "coords needs exactly one expression\n";
        return 2;
    }
    const Parsed parsed = parse_expr(cmd.exprs[0], cmd.n);
    if (!std::holds_alternative<CohomElem>(parsed)) {
        err << "coords applies to pair-model elements, not w-polynomials\n";
        return 2;
    }
    const CohomElem& x = std::get<CohomElem>(parsed);
    const auto basis = basis_cached(cmd.n, cmd.degree, cache);
    const BitVec v = coords(x, cmd.degree, basis);
    if (cmd.format == "json") {
        json bits = json::array(), labels = json::array();
        for (std::size_t i = 0; i < v.size(); ++i) {
            bits.push_back(v.get(i) ? 1 : 0);
            labels.push_back(basis[i].label);
        }
        out << json{{"n", cmd.n}, {"degree", cmd.degree}, {"coords", bits}, {"labels", labels}}
                   .dump(2)
            << "\n";
    } else {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!s.empty()) s += " ";
            s += v.get(i) ? "1" : "0";
        }
        out << s << "\n";
    }
    return 0;
}

int run_chern(const Command& cmd, std::ostream& out) {
    const CohomElem x = chern_image(cmd.n, cmd.chern_index);
    const std::string formula = element_text(x);
    if (cmd.format == "text") {
        out << formula << "\n";
        return 0;
    }
    out << json{{"n", cmd.n},
                {"i", cmd.chern_index},
                {"element", elem_to_json(x)},
                {"formula_text", formula}}
               .dump(2)
        << "\n";
    return 0;
}

Suite parse_suite(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "koszul") return Suite::Koszul;
    if (name == "presentation") return Suite::Presentation;
    if (name == "cohomology") return Suite::Cohomology;
    if (name == "chern") return Suite::Chern;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

int run_verify(const Command& cmd, const DiskCache* cache, std::ostream& out) {
    VerifyOptions opt;
    opt.n = cmd.n;
    opt.max_degree = cmd.max_degree;
    opt.suite = parse_suite(cmd.suite);
    opt.jobs = cmd.jobs;
    opt.cache = cache;
    const auto lines = run_suite(opt);
    if (cmd.format == "json") {
        json checks = json::array();
        bool ok = true;
        for (const CheckLine& line : lines) {
            checks.push_back(json{{"name", line.name}, {"ok", line.ok}, {"detail", line.detail}});
            ok = ok && line.ok;
        }
        json report{{"n", cmd.n},
                    {"max_degree", cmd.max_degree},
                    {"suite", cmd.suite},
                    {"checks", checks},
                    {"ok", ok}};
        if (opt.suite == Suite::All || opt.suite == Suite::Presentation)
            report["presentation_report"] = presentation_report_to_json(
                verify_presentations(cmd.n, cmd.max_degree, cmd.jobs));
        out << report.dump(2) << "\n";
        return ok ? 0 : 1;
    }
    return print_report(lines, out) ? 0 : 1;
}

int run_series(const Command& cmd, const DiskCache* cache, std::ostream& out,
               std::ostream& err) {
    std::vector<std::size_t> dims;
    if (cmd.ring == "H") {
        for (int d = 0; d <= cmd.max_degree; ++d)
            dims.push_back(lambda_part_dim(cmd.n, d) + b_dim_cached(cmd.n, d, cache));
    } else if (cmd.ring == "C") {
        dims = hilbert_series(SeriesKind::RingC, cmd.n, cmd.max_degree);
    } else if (cmd.ring == "B") {
        for (int d = 0; d <= cmd.max_degree; ++d)
            dims.push_back(b_dim_cached(cmd.n, d, cache));
    } else if (cmd.ring == "odd") {
        dims = poincare_odd_case(cmd.n, cmd.max_degree);
    } else {
        err << "unknown ring selector '" << cmd.ring << "'\n";
        return 2;
    }
    if (cmd.format == "json") {
        out << json{{"n", cmd.n}, {"ring", cmd.ring}, {"dims", dims}}.dump(2) << "\n";
        return 0;
    }
    std::string s;
    for (std::size_t x : dims) {
        if (!s.empty()) s += " ";
        s += std::to_string(x);
    }
    out << s << "\n";
    return 0;
}

int run_table(const Command& cmd, std::ostream& out) {
    const SmallTable table = table_small(cmd.n);
    if (cmd.format == "json") {
        json rows = json::array();
        for (std::size_t d = 0; d < table.rows.size(); ++d) {
            json labels = json::array();
            for (const LabeledElem& le : table.rows[d]) labels.push_back(le.label);
            rows.push_back(json{{"degree", d}, {"labels", labels}});
        }
        out << json{{"n", cmd.n}, {"rows", rows}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t d = 0; d < table.rows.size(); ++d)
        out << "H^" << d << ": " << labels_line(table.rows[d]) << "\n";
    return 0;
}

}  // namespace

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        if (cmd.n < 1) {
            err << "n must be positive\n";
            return 2;
        }
        std::unique_ptr<DiskCache> cache;
        if (!cmd.cache_dir.empty()) cache = std::make_unique<DiskCache>(cmd.cache_dir);
        switch (cmd.kind) {
            case Command::Kind::Basis: return run_basis(cmd, cache.get(), out);
            case Command::Kind::Mul: return run_mul(cmd, out, err);
            case Command::Kind::Coords: return run_coords(cmd, cache.get(), out, err);
            case Command::Kind::Chern: return run_chern(cmd, out);
            case Command::Kind::Verify: return run_verify(cmd, cache.get(), out);
            case Command::Kind::Series: return run_series(cmd, cache.get(), out, err);
            case Command::Kind::Table: return run_table(cmd, out);
        }
        err << "unknown command\n";
        return 2;
    } catch (const parse_error& e) {
        err << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace gocohom
