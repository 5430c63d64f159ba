// Command-line front end.

#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "arrlie/arrlie.hpp"
#include "io.hpp"

namespace {

using namespace arrlie;

constexpr int kFormatVersion = 1;
// Exact rational elimination on b1^r words gets slow past degree 4.
constexpr int kOracleDefaultDegree = 4;

// Key/value report. Machine form: "#arrlie 1 <command>", one "key value" line
// per entry, then "#end". Human form: "key: value".
class Report {
  public:
    explicit Report(std::string command) : command_(std::move(command)) {}
    template <class T>
    void add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        lines_.emplace_back(key, os.str());
    }
    void add(const std::string& key, bool value) { lines_.emplace_back(key, value ? "true" : "false"); }
    void print(std::ostream& out, bool machine) const {
        if (machine) out << "#arrlie " << kFormatVersion << ' ' << command_ << '\n';
        for (const auto& [k, v] : lines_) out << k << (machine ? " " : ": ") << v << '\n';
        if (machine) out << "#end\n";
    }

  private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> lines_;
};

template <class Seq>
std::string join(const Seq& xs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        os << (first ? "" : ",") << x;
        first = false;
    }
    return first ? "-" : os.str();
}

std::string series_text(const PowerSeries& s, bool machine) { return machine ? join(s.coefficients()) : s.to_string(); }

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("-0123456789") != std::string::npos)
            throw io::InputError("malformed integer list: " + s);
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw io::InputError("empty integer list");
    return out;
}

std::string flat_text(const Rank2Flat& f) { return join(f.members); }

struct Options {
    std::string input;
    int max_degree = kDefaultMaxDegree;
    std::string field = "q";
    bool machine = false;
    bool assert_verdict = false;
};

int finish(const Report& rep, const Options& o, bool verdict) {
    rep.print(std::cout, o.machine);
    return o.assert_verdict && !verdict ? 1 : 0;
}

void check_degree(int r, int lowest) {
    if (r < lowest) throw io::InputError("--max-degree must be at least " + std::to_string(lowest));
    if (r > 30) throw io::InputError("--max-degree larger than 30");
}

int cmd_flats(const Options& o, bool emit_input) {
    const Builtin in = io::read_input(o.input);
    const Arrangement& a = in.arrangement;
    if (emit_input) {
        std::cout << io::flats_to_json(a).dump() << '\n';
        return 0;
    }
    Report rep("flats");
    rep.add("b1", a.b1());
    rep.add("b2", a.b2());
    rep.add("flats", a.flats.size());
    for (std::size_t k = 0; k < a.flats.size(); ++k)
        rep.add("flat " + std::to_string(k), "mu=" + std::to_string(a.flats[k].mu) + " members=" + flat_text(a.flats[k]));
    return finish(rep, o, true);
}

int cmd_ranks(const Options& o) {
    check_degree(o.max_degree, 2);
    const Builtin in = io::read_input(o.input);
    const Arrangement& a = in.arrangement;
    long long p = 0;
    if (o.field != "q" && o.field != "all") {
        p = parse_list(o.field).front();
        try {
            Field::prime(p);
        } catch (const std::invalid_argument& ex) {
            throw io::InputError(ex.what());
        }
    }
    const Holonomy h(a, o.max_degree);
    Report rep("ranks");
    rep.add("b1", a.b1());
    rep.add("field", o.field);
    bool all_equal = true;
    for (int r = 1; r <= o.max_degree; ++r) {
        const GradedPiece piece = h.piece(r);
        const std::string d = "degree " + std::to_string(r);
        rep.add(d + " rank_q", piece.rank_q);
        rep.add(d + " invariant_factors", join(piece.torsion));
        if (r >= 2) {
            const long long bound = falk_lower_bound(a, r);
            rep.add(d + " falk_bound", bound);
            bool eq = piece.rank_q == bound;
            if (p != 0) {
                rep.add(d + " dim_mod_" + std::to_string(p), piece.dim_mod(p));
                eq = piece.dim_mod(p) == bound;
            } else if (o.field == "all") {
                for (const auto& bp : bad_primes(piece)) {
                    const long long q = bp.convert_to<long long>();
                    rep.add(d + " dim_mod_" + std::to_string(q), piece.dim_mod(q));
                }
                eq = eq && piece.torsion.empty();
            }
            rep.add(d + " attains_bound", eq);
            all_equal = all_equal && eq;
        }
    }
    rep.add("verdict", all_equal);
    return finish(rep, o, all_equal);
}

int cmd_decomposable(const Options& o) {
    const Builtin in = io::read_input(o.input);
    const DecompReport d = is_decomposable(in.arrangement);
    Report rep("decomposable");
    rep.add("degree", d.degree);
    rep.add("rank_q", d.rank_q);
    rep.add("falk_bound", d.falk_bound);
    std::vector<std::string> bad;
    for (const auto& b : d.bad_primes) bad.push_back(b.prime.str() + ":" + std::to_string(b.dim));
    rep.add("bad_primes", join(bad));
    rep.add("decomposable_over_q", d.rational_equal);
    rep.add("verdict", d.overall);
    return finish(rep, o, d.overall);
}

int cmd_lcs(const Options& o, bool formula) {
    check_degree(o.max_degree, 1);
    const Builtin in = io::read_input(o.input);
    const LcsCheck c = lcs_product_check(in.arrangement, o.max_degree, formula ? RankSource::Formula : RankSource::Computed);
    Report rep("lcs");
    rep.add("source", formula ? "formula" : "computed");
    std::vector<long long> phi;
    for (const auto& [r, v] : c.ranks.values) phi.push_back(v);
    rep.add("phi", join(phi));
    rep.add("product", series_text(c.product, o.machine));
    rep.add("closed_form", series_text(c.closed_form, o.machine));
    rep.add("verdict", c.match);
    return finish(rep, o, c.match);
}

int cmd_chen(const Options& o, bool direct) {
    check_degree(o.max_degree, 2);
    const Builtin in = io::read_input(o.input);
    const RankTable formula = chen_ranks_decomposable(in.arrangement, o.max_degree, false);
    Report rep("chen");
    std::vector<long long> f;
    for (const auto& [r, v] : formula.values) f.push_back(v);
    rep.add("theta_formula", join(f));
    bool verdict = true;
    if (direct) {
        const RankTable d = chen_ranks_direct(in.arrangement, o.max_degree);
        std::vector<long long> dv;
        for (const auto& [r, v] : d.values) dv.push_back(v);
        rep.add("theta_direct", join(dv));
        verdict = d.values == formula.values;
        rep.add("verdict", verdict);
    }
    return finish(rep, o, verdict);
}

int cmd_oracle(const Options& o) {
    check_degree(o.max_degree, 1);
    const Builtin in = io::read_input(o.input);
    const auto dims = oracle::quadratic_algebra_dims(in.arrangement, o.max_degree);
    const auto h = oracle::holonomy_dims_from_hilbert(dims);
    const Holonomy hol(in.arrangement, o.max_degree);
    Report rep("oracle");
    rep.add("enveloping_dims", join(dims));
    rep.add("oracle_ranks", join(h));
    std::vector<int> mine;
    for (int r = 1; r <= o.max_degree; ++r) mine.push_back(hol.rank_q(r));
    rep.add("holonomy_ranks", join(mine));
    bool ok = true;
    for (int r = 1; r <= o.max_degree; ++r) ok = ok && h[r - 1] == mine[r - 1];
    rep.add("verdict", ok);
    return finish(rep, o, ok);
}

int cmd_hs_check(const Options& o, const std::string& exponents) {
    const Builtin in = io::read_input(o.input);
    const auto ex = parse_list(exponents);
    for (long long d : ex)
        if (d < 1) throw io::InputError("exponents must be positive");
    const HsCheck c = hypersolvable_consistency(in.arrangement, ex, o.max_degree);
    Report rep("hs-check");
    rep.add("exponents", join(ex));
    rep.add("lhs", series_text(c.lhs, o.machine));
    rep.add("rhs", series_text(c.rhs, o.machine));
    rep.add("verdict", c.holds);
    return finish(rep, o, c.holds);
}

int cmd_examples(const Options& o) {
    Report rep("examples");
    for (const auto& n : builtin_names()) rep.add(n, builtin_description(n));
    return finish(rep, o, true);
}

Graph require_graph(const Options& o) {
    Builtin in = io::read_input(o.input);
    if (!in.graph) throw io::InputError("graph command needs a graph input");
    return *in.graph;
}

int cmd_graph(const std::string& sub, const Options& o, const std::string& edge, int family_i) {
    if (sub == "family") {
        if (family_i < 0 || family_i > 50) throw io::InputError("--i must be in 0..50");
        std::cout << io::graph_to_json(family_g_i(family_i)).dump() << '\n';
        return 0;
    }
    const Graph g = require_graph(o);
    if (sub == "cone") {
        const auto e = parse_list(edge);
        if (e.size() != 2) throw io::InputError("--edge needs u,v");
        Edge ed{static_cast<int>(e[0]) - 1, static_cast<int>(e[1]) - 1};
        if (g.edge_index(ed) < 0) throw io::InputError("--edge is not an edge of the graph");
        std::cout << io::graph_to_json(cone_edge(g, ed)).dump() << '\n';
        return 0;
    }
    Report rep("graph " + sub);
    if (sub == "kappa") {
        for (int s = 0; s <= 3; ++s) rep.add("kappa" + std::to_string(s), kappa(g, s));
        return finish(rep, o, true);
    }
    if (sub == "k4-free") {
        const bool v = is_decomposable_graph(g);
        rep.add("kappa3", kappa(g, 3));
        rep.add("verdict", v);
        return finish(rep, o, v);
    }
    if (sub == "chordal") {
        const bool v = is_chordal(g);
        rep.add("nonhypersolvable_cert", nonhypersolvable_cert(g));
        rep.add("verdict", v);
        return finish(rep, o, v);
    }
    if (sub == "graphic-lcs") {
        check_degree(o.max_degree, 1);
        if (kappa(g, 3) != 0) throw io::InputError("graphic-lcs needs a K4-free graph");
        const PowerSeries s = graphic_lcs_series(g, o.max_degree);
        const PowerSeries closed = lcs_closed_form(graphic_arrangement(g), o.max_degree);
        rep.add("kappa1", kappa(g, 1));
        rep.add("kappa2", kappa(g, 2));
        rep.add("series", series_text(s, o.machine));
        rep.add("verdict", s == closed);
        return finish(rep, o, s == closed);
    }
    throw io::InputError("unknown graph subcommand: " + sub);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Holonomy Lie algebras of hyperplane arrangements"};
    app.require_subcommand(1);
    Options o;
    bool emit_input = false, direct = false, formula = false;
    std::string exponents, edge, graph_sub;
    int family_i = 0;

    auto input_opts = [&](CLI::App* c, bool degree) {
        c->add_option("input", o.input, "JSON file, builtin:NAME, or - for stdin")->required();
        if (degree) c->add_option("--max-degree", o.max_degree, "Degree cap");
        c->add_flag("--machine", o.machine, "Line-oriented machine-readable output");
        c->add_flag("--assert", o.assert_verdict, "Exit 1 when the verdict is false");
    };
    auto* flats = app.add_subcommand("flats", "Rank-2 flat census");
    input_opts(flats, false);
    flats->add_flag("--emit-input", emit_input, "Print a flats input document instead");
    auto* ranks = app.add_subcommand("ranks", "Holonomy ranks and invariant factors");
    input_opts(ranks, true);
    ranks->add_option("--field", o.field, "q, a prime p, or all");
    auto* decomp = app.add_subcommand("decomposable", "Decomposability over every field");
    input_opts(decomp, false);
    auto* lcs = app.add_subcommand("lcs", "LCS ranks and the product formula");
    input_opts(lcs, true);
    lcs->add_flag("--formula", formula, "Use the decomposable formula instead of computed ranks");
    auto* chen = app.add_subcommand("chen", "Chen ranks");
    input_opts(chen, true);
    chen->add_flag("--direct", direct, "Also compute ranks of H'/H''");
    auto* orc = app.add_subcommand("oracle", "Compare with the enveloping-algebra oracle");
    input_opts(orc, true);
    orc->parse_complete_callback([&] {
        if (orc->count("--max-degree") == 0) o.max_degree = kOracleDefaultDegree;
    });
    auto* hs = app.add_subcommand("hs-check", "Exponent identity for hypersolvable arrangements");
    input_opts(hs, true);
    hs->add_option("--exponents", exponents, "d1,d2,...")->required();
    auto* ex = app.add_subcommand("examples", "List builtin arrangements");
    ex->add_flag("--machine", o.machine, "Line-oriented machine-readable output");
    auto* graph = app.add_subcommand("graph", "Graph operations");
    graph->add_option("subcommand", graph_sub, "kappa, k4-free, chordal, cone, family, graphic-lcs")->required();
    graph->add_option("input", o.input, "Graph JSON, builtin:NAME, or -");
    graph->add_option("--edge", edge, "u,v (1-based) for cone");
    graph->add_option("--i", family_i, "Index for family");
    graph->add_option("--max-degree", o.max_degree, "Degree cap for graphic-lcs");
    graph->add_flag("--machine", o.machine, "Line-oriented machine-readable output");
    graph->add_flag("--assert", o.assert_verdict, "Exit 1 when the verdict is false");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*flats) return cmd_flats(o, emit_input);
        if (*ranks) return cmd_ranks(o);
        if (*decomp) return cmd_decomposable(o);
        if (*lcs) return cmd_lcs(o, formula);
        if (*chen) return cmd_chen(o, direct);
        if (*orc) return cmd_oracle(o);
        if (*hs) return cmd_hs_check(o, exponents);
        if (*ex) return cmd_examples(o);
        if (*graph) {
            if (graph_sub != "family" && o.input.empty()) throw io::InputError("graph " + graph_sub + " needs an input");
            return cmd_graph(graph_sub, o, edge, family_i);
        }
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ArrangementError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
