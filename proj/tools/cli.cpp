#include "cli.hpp"

#include "knotcol/certificates.hpp"
#include "knotcol/coloring.hpp"
#include "knotcol/diagram.hpp"
#include "knotcol/enumerate.hpp"
#include "knotcol/error.hpp"
#include "knotcol/palette.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace knotcol::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::int64_t p = 0;
    std::string pd;
    std::string knot;
    std::string file;
    std::string format = "table";
    std::string set;
    std::size_t size = 0;
    std::string coloring;
};

struct Input {
    std::string name;
    Diagram diagram;
};

template <class Range>
std::string join(const Range& values, const char* sep = " ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << sep;
        os << v;
        first = false;
    }
    return os.str();
}

std::string braces(const std::vector<Residue>& s) { return "{" + join(s, ",") + "}"; }

json integer_json(const Integer& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

std::vector<Residue> parse_residues(const std::string& text, const char* what) {
    std::vector<Residue> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

Input load(const Options& o) {
    const int given = !o.pd.empty() + !o.knot.empty() + !o.file.empty();
    if (given != 1) throw UsageError("exactly one of --pd, --knot, --file is required");
    if (!o.knot.empty()) return {o.knot, catalog_diagram(o.knot)};
    std::string text = o.pd;
    std::string name = "pd";
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw UsageError("cannot read " + o.file);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        name = o.file;
    }
    return {name, build_diagram(parse_pd(text))};
}

void require_prime(std::int64_t p) {
    if (!is_odd_prime(p)) throw UsageError("--p must be an odd prime, got " + std::to_string(p));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int color_count(const Options& o, std::ostream& out) {
    require_prime(o.p);
    const Input in = load(o);
    const auto& d = in.diagram;
    const ColoringSpace space = colorings(d, o.p, 0);
    if (o.format == "json") {
        emit(out, json{{"diagram", in.name},
                       {"p", o.p},
                       {"crossings", d.crossing_count()},
                       {"regions", d.region_count()},
                       {"dimension", space.dimension},
                       {"count", integer_json(space.count)}});
        return 0;
    }
    out << "diagram:   " << in.name << " (" << d.crossing_count() << " crossings, " << d.region_count()
        << " regions)\n"
        << "p:         " << o.p << '\n'
        << "dimension: " << space.dimension << '\n'
        << "count:     " << space.count << '\n';
    return 0;
}

int mincol(const Options& o, std::ostream& out) {
    require_prime(o.p);
    const Input in = load(o);
    const MinColors m = min_colors_diagram(in.diagram, o.p);
    const bool holds = !m.min || *m.min >= m.lower_bound;
    const char* search = m.affine_quotient ? "affine quotient" : "full scan";
    if (o.format == "json") {
        json j{{"diagram", in.name}, {"p", o.p}, {"dimension", m.dimension}};
        j["minimum"] = m.min ? json(*m.min) : json(nullptr);
        j["lower_bound"] = m.lower_bound;
        j["witness"] = m.witness ? json(m.witness->values) : json(nullptr);
        j["search"] = search;
        j["bound_holds"] = holds;
        emit(out, j);
    } else {
        out << "diagram:        " << in.name << '\n'
            << "p:              " << o.p << '\n'
            << "dimension:      " << m.dimension << '\n';
        if (m.min) {
            out << "minimum colors: " << *m.min << '\n'
                << "lower bound:    " << m.lower_bound << '\n'
                << "witness:        " << join(m.witness->values) << '\n'
                << "colors used:    " << braces(classify(in.diagram, *m.witness).colors_used) << '\n';
        } else {
            out << "minimum colors: none (no nontrivial coloring)\n"
                << "lower bound:    " << m.lower_bound << '\n';
        }
        out << "search:         " << search << '\n';
    }
    return holds ? 0 : 1;
}

int palette(const Options& o, std::ostream& out) {
    require_prime(o.p);
    const auto s = parse_residues(o.set, "--set");
    for (auto a : s)
        if (a < 0 || a >= o.p) throw UsageError("--set entries must lie in [0, p)");
    const PaletteGraph g = palette_graph(s, o.p);
    const auto witness = connected_r_witness(g);
    if (o.format == "dot") {
        out << to_dot(g);
        return 0;
    }
    if (o.format == "json") {
        json j = to_json(g);
        j["witness"] = witness ? json(*witness) : json(nullptr);
        emit(out, j);
        return 0;
    }
    auto sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out << "p:        " << o.p << '\n'
        << "set:      " << braces(sorted) << '\n'
        << "vertices: " << join(g.vertices) << '\n'
        << "edges:    " << g.edges.size() << '\n';
    for (const auto& e : g.edges) out << "  " << e.u << " -- " << e.v << "  label " << e.label << '\n';
    if (witness)
        out << "connected R-subgraph on " << braces(*witness) << '\n';
    else
        out << "no connected R-subgraph with ≥ 3 vertices\n";
    return 0;
}

std::string match_text(const std::optional<bool>& m) {
    if (!m) return "untabulated";
    return *m ? "ok" : "MISMATCH";
}

int candidates_cmd(const Options& o, std::ostream& out) {
    require_prime(o.p);
    if (o.size < 1 || o.size > static_cast<std::size_t>(o.p)) throw UsageError("--size must lie in [1, p]");
    CandidateRow row;
    row.k = o.size;
    row.classes = candidates(o.p, o.size);
    row.expected_match = matches_published(o.p, o.size, row.classes);
    if (o.format == "json") {
        emit(out, to_json(o.p, row));
    } else {
        out << "p=" << o.p << " k=" << row.k << ": " << row.classes.size() << " candidate classes ["
            << match_text(row.expected_match) << "]\n";
        for (const auto& c : row.classes) out << "  " << braces(c.elements) << '\n';
    }
    return row.expected_match.value_or(true) ? 0 : 1;
}

int theorem62(const Options& o, std::ostream& out) {
    std::vector<std::int64_t> primes;
    if (o.p != 0) {
        require_prime(o.p);
        primes.push_back(o.p);
    } else {
        for (std::int64_t p = 3; p < 32; p += 2)
            if (is_odd_prime(p)) primes.push_back(p);
    }
    bool ok = true;
    json rows = json::array();
    for (auto p : primes) {
        const Theorem62Report report = theorem62_report(p);
        ok = ok && report.passed();
        if (o.format == "json") {
            for (const auto& row : report.rows) rows.push_back(to_json(p, row));
            continue;
        }
        out << "p=" << p << " (lower bound " << color_lower_bound(p) << ")\n";
        for (const auto& row : report.rows) {
            out << "  k=" << row.k << ": " << row.classes.size() << " classes [" << match_text(row.expected_match)
                << "]";
            for (const auto& c : row.classes) out << ' ' << braces(c.elements);
            out << '\n';
        }
    }
    if (o.format == "json") emit(out, rows);
    else out << (ok ? "all rows match\n" : "FAILED\n");
    return ok ? 0 : 1;
}

DehnColoring chosen_coloring(const Options& o, const Diagram& d) {
    if (o.coloring.empty()) {
        const MinColors m = min_colors_diagram(d, o.p);
        if (!m.witness) throw UsageError("no nontrivial " + std::to_string(o.p) + "-coloring of this diagram");
        return *m.witness;
    }
    DehnColoring c{o.p, parse_residues(o.coloring, "--coloring")};
    if (c.values.size() != d.region_count())
        throw UsageError("--coloring needs " + std::to_string(d.region_count()) + " region values");
    for (auto& v : c.values) v = reduce_mod(v, o.p);
    if (!is_coloring(d, c)) throw UsageError("--coloring is not a Dehn coloring of this diagram");
    if (classify(d, c).kind != ColoringKind::nontrivial) throw UsageError("--coloring is trivial");
    return c;
}

int certify(const Options& o, std::ostream& out) {
    require_prime(o.p);
    const Input in = load(o);
    const DehnColoring c = chosen_coloring(o, in.diagram);
    const RankReport ranks = rank_checks(in.diagram, c, o.p);
    const Certificate cert = extract_certificate(in.diagram, c, o.p);
    const IntMatrix m3 = cert.merged.submatrix(cert.row_indices, cert.col_indices);
    const bool ok = ranks.all_passed() && cert.holds();

    if (o.format == "json") {
        json claims = json::array();
        for (const auto& r : ranks.claims)
            claims.push_back({{"statement", r.statement},
                              {"value", r.value},
                              {"bound", r.bound},
                              {"relation", r.equality ? "==" : "<="},
                              {"passed", r.passed}});
        json rows = json::array();
        for (std::size_t r = 0; r < m3.rows(); ++r) {
            json row = json::array();
            for (const auto& v : m3.row(r)) row.push_back(v.convert_to<long long>());
            rows.push_back(row);
        }
        emit(out, json{{"diagram", in.name},
                       {"p", o.p},
                       {"coloring", c.values},
                       {"rank_checks", claims},
                       {"certificate",
                        {{"ell", cert.ell},
                         {"variant", to_string(cert.variant)},
                         {"rows", cert.row_indices},
                         {"cols", cert.col_indices},
                         {"m3", rows},
                         {"det", integer_json(cert.det_value)},
                         {"rank_int", cert.merged_rank_int},
                         {"rank_mod_p", cert.merged_rank_mod_p},
                         {"violations", cert.violations}}},
                       {"passed", ok}});
        return ok ? 0 : 1;
    }

    out << "diagram:  " << in.name << '\n'
        << "p:        " << o.p << '\n'
        << "coloring: " << join(c.values) << '\n'
        << "rank checks:\n";
    for (const auto& r : ranks.claims)
        out << "  " << (r.passed ? "ok   " : "FAIL ") << r.statement << ": " << r.value << (r.equality ? " == " : " <= ")
            << r.bound << '\n';
    out << "certificate (" << to_string(cert.variant) << ", " << cert.ell << " colors):\n"
        << "  rows " << join(cert.row_indices) << ", cols " << join(cert.col_indices) << '\n';
    std::istringstream lines(m3.to_string());
    for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    out << "  det M3 = " << cert.det_value << ", rank_Z M2 = " << cert.merged_rank_int << ", rank_p M2 = "
        << cert.merged_rank_mod_p << '\n';
    for (const auto& v : cert.violations) out << "  FAIL " << v << '\n';
    out << (ok ? "certificate holds\n" : "FAILED\n");
    return ok ? 0 : 1;
}

int fox(const Options& o, std::ostream& out) {
    require_prime(o.p);
    const Input in = load(o);
    const auto& d = in.diagram;
    const ColoringSpace space = colorings(d, o.p, 0);
    const Integer fox_count = fox_coloring_count(d, o.p);
    const bool ratio = space.count == fox_count * o.p;
    std::optional<FoxColoring> sample;
    if (const MinColors m = min_colors_diagram(d, o.p); m.witness) sample = fox_from_dehn(d, *m.witness);

    if (o.format == "json") {
        json j{{"diagram", in.name},
               {"p", o.p},
               {"arcs", d.arc_count()},
               {"dehn_count", integer_json(space.count)},
               {"fox_count", integer_json(fox_count)},
               {"p_to_one", ratio}};
        j["sample_fox"] = sample ? json(sample->values) : json(nullptr);
        emit(out, j);
    } else {
        out << "diagram:     " << in.name << " (" << d.arc_count() << " arcs)\n"
            << "p:           " << o.p << '\n'
            << "Dehn count:  " << space.count << '\n'
            << "Fox count:   " << fox_count << '\n'
            << "p-to-1:      " << (ratio ? "yes" : "NO") << '\n';
        if (sample) out << "sample arcs: " << join(sample->values) << '\n';
    }
    return ratio ? 0 : 1;
}

int det(const Options& o, std::ostream& out) {
    const Input in = load(o);
    const Integer value = knot_determinant(in.diagram);
    if (o.format == "json")
        emit(out, json{{"diagram", in.name}, {"determinant", integer_json(value)}});
    else
        out << "diagram:     " << in.name << '\n' << "determinant: " << value << '\n';
    return 0;
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("--pd", o.pd, "PD code, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'");
    sub->add_option("--knot", o.knot, "catalog name (3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3, 7_1, 7_4)");
    sub->add_option("--file", o.file, "file holding a PD code");
}

void add_format(CLI::App* sub, Options& o, std::vector<std::string> choices) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::move(choices)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dehn colorings, palette graphs and color-set enumeration", "knotcol"};
    app.require_subcommand(1);
    Options o;

    auto* cc = app.add_subcommand("color-count", "dimension and size of the Dehn coloring space");
    auto* mc = app.add_subcommand("mincol", "fewest colors over nontrivial colorings of a diagram");
    auto* pal = app.add_subcommand("palette", "palette graph of a color set and its R-subgraph decision");
    auto* cand = app.add_subcommand("candidates", "color-set classes admitting a connected R-subgraph");
    auto* t62 = app.add_subcommand("theorem62", "candidate tables for odd primes below 32");
    auto* cert = app.add_subcommand("certify", "rank checks and a determinant certificate");
    auto* fx = app.add_subcommand("fox", "Dehn to Fox correspondence");
    auto* dt = app.add_subcommand("det", "knot determinant");

    for (auto* sub : {cc, mc, cand, cert, fx, pal}) sub->add_option("--p", o.p, "odd prime")->required();
    t62->add_option("--p", o.p, "odd prime (default: every odd prime below 32)");
    for (auto* sub : {cc, mc, cert, fx, dt}) add_input(sub, o);
    for (auto* sub : {cc, mc, cand, t62, cert, fx, dt}) add_format(sub, o, {"table", "json"});
    add_format(pal, o, {"table", "json", "dot"});
    pal->add_option("--set", o.set, "comma-separated residues")->required();
    cand->add_option("--size", o.size, "set size")->required();
    cert->add_option("--coloring", o.coloring, "comma-separated region colors (default: a minimal witness)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (cc->parsed()) return color_count(o, out);
        if (mc->parsed()) return mincol(o, out);
        if (pal->parsed()) return palette(o, out);
        if (cand->parsed()) return candidates_cmd(o, out);
        if (t62->parsed()) return theorem62(o, out);
        if (cert->parsed()) return certify(o, out);
        if (fx->parsed()) return fox(o, out);
        return det(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const knotcol::Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace knotcol::cli
