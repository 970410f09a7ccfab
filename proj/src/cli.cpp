#include "surgery/cli.hpp"

#include "surgery/bp.hpp"
#include "surgery/classify.hpp"
#include "surgery/errors.hpp"
#include "surgery/ltheory.hpp"
#include "surgery/rationals.hpp"
#include "surgery/structset.hpp"
#include "surgery/tables.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

namespace surgery::cli {

namespace {

using nlohmann::json;

// Usage-level failure: malformed integers, wrong argument count.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json big(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

json group_json(const KnownGroup& g) {
    json j;
    j["kind"] = to_string(g.kind());
    j["describe"] = g.describe();
    if (const auto o = g.finite_order()) {
        j["order"] = big(*o);
    } else {
        j["order"] = "unknown";
    }
    return j;
}

json subgroup_json(const CyclicSubgroup& h) {
    return {{"ambient_order", big(h.ambient().order())},
            {"generator", big(h.generator_value())},
            {"order", big(h.order())}};
}

std::string order_text(const KnownGroup& g) {
    const auto o = g.finite_order();
    return o ? o->str() : std::string("unknown");
}

struct Report {
    json result = json::object();
    std::vector<std::string> lines;
    std::vector<std::string> provenance;
};

BigInt parse_int_arg(const std::string& name, const std::string& text) {
    try {
        return parse_bigint(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("argument " + name + ": '" + text + "' is not an integer");
    }
}

int parse_small_arg(const std::string& name, const std::string& text) {
    const BigInt v = parse_int_arg(name, text);
    if (v < -100000 || v > 100000) throw UsageError("argument " + name + ": '" + text + "' is out of range");
    return static_cast<int>(v);
}

void note(Report& r, std::string text) {
    if (std::find(r.provenance.begin(), r.provenance.end(), text) == r.provenance.end()) {
        r.provenance.push_back(std::move(text));
    }
}

void note_t(Report& r, int i) {
    if (i % 4 != 0) {
        note(r, "t_" + std::to_string(i) + " = 0 since " + std::to_string(i) + " != 0 mod 4");
    } else if (i == 4) {
        note(r, "t_4 = 2 by definition (cokernel of pi_4(G/O) -> pi_4(G/Top))");
    } else {
        note(r, "t_" + std::to_string(i) + " = |bP_" + std::to_string(i) +
                               "| from Levine's formula");
    }
    if (i == 16) {
        note(r, "t_16 is sometimes misprinted as 8182; the correct value is 8128 = 64 x 127");
    }
}

void note_theta(Report& r, int n, const KnownGroup& g) {
    note(r, "Theta_" + std::to_string(n) + (g.is_known() ? ": group table" : ": not in group table"));
}

Report cmd_bernoulli(int k) {
    Report r;
    const Rational b = bernoulli(k);
    const BigInt n4k = num_b_over_4k(k);
    r.result = {{"k", k},
                {"bernoulli", to_string(b)},
                {"numerator", big(boost::multiprecision::numerator(b))},
                {"denominator", big(boost::multiprecision::denominator(b))},
                {"num_b_over_4k", big(n4k)}};
    r.lines = {"B_" + std::to_string(k) + " = " + to_string(b),
               "Num(B_" + std::to_string(k) + "/" + std::to_string(4 * k) + ") = " + n4k.str()};
    note(r, "Bernoulli numbers in topologist's indexing: B_k = |B_2k| (classical)");
    return r;
}

Report cmd_t(int i) {
    Report r;
    const BigInt v = t(i);
    r.result = {{"i", i}, {"t", big(v)}};
    r.lines = {"t_" + std::to_string(i) + " = " + v.str()};
    note_t(r, i);
    return r;
}

Report cmd_bp_order(int m, const GroupTable& table) {
    Report r;
    const KnownGroup g = bp_order(m, table);
    r.result = {{"m", m}, {"bp", group_json(g)}};
    r.lines = {"bP_" + std::to_string(m) + " = " + g.describe()};
    if (m % 4 == 0) note_t(r, m);
    else if (m % 2 == 1) note(r, "bP_odd = 0 since L_odd(e) = 0");
    else note(r, "bP_" + std::to_string(m) + ": group table");
    return r;
}

Report cmd_residual(int p, int q) {
    Report r;
    const NormalizedPair n = normalize_pair(p, q);
    const CyclicGroup g = residual_group(n.p, n.q);
    const BigInt mult = 8 * t(n.p) * t(n.q);
    r.result = {{"p", n.p}, {"q", n.q}, {"multiplier", big(mult)}, {"order", big(g.order())}};
    const std::string name = "8 t_" + std::to_string(n.p) + " t_" + std::to_string(n.q) + " . bP_" +
                             std::to_string(n.p + n.q);
    r.lines = {name + " = " + (g.is_trivial() ? std::string("0") : "Z_" + g.order().str())};
    note_t(r, n.p);
    note_t(r, n.q);
    return r;
}

Report cmd_structure_set(int p, int q, const GroupTable& table) {
    Report r;
    const StructureSetPresentation s = present(p, q, table);
    const int dim = s.p + s.q;
    r.result["input"] = {{"p", s.input_p}, {"q", s.input_q}};
    r.result["p"] = s.p;
    r.result["q"] = s.q;
    r.result["swapped"] = s.swapped;
    r.result["theta"] = group_json(s.theta_group);
    r.result["bp_next"] = group_json(s.bp_next);
    r.result["theta_over_bp"] = group_json(s.theta_over_bp);
    r.result["pi_p_go"] = group_json(s.pi_p);
    r.result["pi_q_go"] = group_json(s.pi_q);
    r.result["del_multiplier"] = big(s.del_multiplier);
    r.result["del_target_order"] = big(s.del_target_order);
    r.result["residual_order"] = big(s.residual.order());
    r.result["action"] = to_string(s.action_case);
    // Fibre of i^* o eta at the base point, and for the stabilizer shape at d = 1.
    const KnownGroup fiber0 = eta_fiber_size(s.p, s.q, 0, table);
    r.result["fiber_order"] = group_json(fiber0);
    if (s.stabilizer_rule) {
        const StabilizerRule& rule = *s.stabilizer_rule;
        r.result["stabilizer_rule"] = {{"ambient_order", big(rule.ambient_order)},
                                       {"multiplier", big(rule.multiplier)},
                                       {"d1_order", big(rule(1).order())}};
        r.result["fiber_order_d1"] = group_json(eta_fiber_size(s.p, s.q, 1, table));
    } else {
        r.result["stabilizer_rule"] = nullptr;
    }

    const std::string P = std::to_string(s.p), Q = std::to_string(s.q), D = std::to_string(dim);
    r.lines.push_back("S^Diff(S^" + P + " x S^" + Q + ")" + (s.swapped ? "  (factors swapped)" : ""));
    r.lines.push_back("  0 -> bP_" + std::to_string(dim + 1) + " [" + s.bp_next.describe() + "] -> S^Diff -> Theta_" +
                      D + "/bP_" + std::to_string(dim + 1) + " [" + s.theta_over_bp.describe() + "] x pi_" + P +
                      "(G/O) [" + s.pi_p.describe() + "] x pi_" + Q + "(G/O) [" + s.pi_q.describe() +
                      "] -> 8 t_" + P + " t_" + Q + " . bP_" + D + " [" +
                      (s.residual.is_trivial() ? std::string("0") : "Z_" + s.residual.order().str()) + "] -> 0");
    r.lines.push_back("  Theta_" + D + " = " + s.theta_group.describe() + " acts transitively on fibres of i^* o eta");
    if (s.stabilizer_rule) {
        r.lines.push_back("  action: stabilizer of [N,f] is " + s.stabilizer_rule->multiplier.str() + " d . bP_" +
                          std::to_string(dim + 1) + " (d = 1: order " + s.stabilizer_rule->operator()(1).order().str() +
                          ")");
    } else {
        r.lines.push_back("  action: free; fibre order " + order_text(fiber0));
    }
    note_theta(r, dim, s.theta_group);
    note_t(r, s.p);
    note_t(r, s.q);
    return r;
}

Report cmd_fiber(int p, int q, const BigInt& d, const GroupTable& table) {
    Report r;
    const NormalizedPair n = normalize_pair(p, q);
    const KnownGroup f = eta_fiber_size(n.p, n.q, d, table);
    r.result = {{"p", n.p}, {"q", n.q}, {"d", big(d)}, {"fiber", group_json(f)}};
    r.lines = {"fibre of i^* o eta over d = " + d.str() + ": " + order_text(f) + " elements"};
    note_theta(r, n.p + n.q, theta_order(n.p + n.q, table));
    return r;
}

Report cmd_stabilizer(int p, int q, const BigInt& d) {
    Report r;
    const NormalizedPair n = normalize_pair(p, q);
    const CyclicSubgroup h = stabilizer(n.p, n.q, d);
    r.result = {{"p", n.p}, {"q", n.q}, {"d", big(d)}, {"stabilizer", subgroup_json(h)}};
    r.lines = {"stabilizer = <" + h.generator_value().str() + "> in Z_" + h.ambient().order().str() + ", order " +
               h.order().str()};
    return r;
}

Report cmd_group_structure(int p, int q) {
    Report r;
    const NormalizedPair n = normalize_pair(p, q);
    const GroupStructureVerdict v = group_structure_possible(n.p, n.q);
    r.result = {{"p", n.p}, {"q", n.q}, {"possible", v.possible}, {"reason", v.reason}};
    r.lines = {std::string(v.possible ? "group structure possible" : "no group structure") + ": " + v.reason};
    return r;
}

Report cmd_image_f(int p, int q) {
    Report r;
    const bool sub = image_F_is_subgroup(p, q);
    const CyclicGroup res = residual_group(p, q);
    r.result = {{"p", p}, {"q", q}, {"is_subgroup", sub}, {"residual_order", big(res.order())}};
    r.lines = {std::string("Im(F) ") + (sub ? "is" : "is not") + " a subgroup (residual order " +
               res.order().str() + ")"};
    return r;
}

Report cmd_top_set(int p, int q) {
    Report r;
    const NormalizedPair n = normalize_pair(p, q);
    const TopStructureSet s = top_structure_set(n.p, n.q);
    r.result = {{"p", n.p},
                {"q", n.q},
                {"first", to_string(s.first.kind)},
                {"second", to_string(s.second.kind)},
                {"is_group", s.is_group},
                {"is_singleton", s.is_singleton}};
    r.lines = {"S^Top(S^" + std::to_string(n.p) + " x S^" + std::to_string(n.q) + ") = L_" + std::to_string(n.p) +
               "(e) x L_" + std::to_string(n.q) + "(e) = " + to_string(s.first.kind) + " x " +
               to_string(s.second.kind)};
    return r;
}

Report cmd_s3s4(const std::vector<std::string>& a) {
    Report r;
    if (a.size() == 1) {
        const BigInt v = parse_int_arg("V", a[0]);
        const CyclicSubgroup h = s3s4_inertia_group(v);
        r.result = {{"v", big(v)},
                    {"inertia", subgroup_json(h)},
                    {"diffeomorphism_classes", big(h.index())},
                    {"structure_stabilizer", subgroup_json(stabilizer(3, 4, v))}};
        r.lines = {"I(N_" + v.str() + ") = <" + h.generator_value().str() + "> in Z_28, order " + h.order().str(),
                   "Sigma # N_" + v.str() + " for Sigma in bP_8: " + h.index().str() + " diffeomorphism classes"};
        note(r, "inertia group from Wilkens: k(v) = 14/(14, v)");
        return r;
    }
    if (a.size() != 4) throw UsageError("classify-s3s4 takes V, or S0 V0 S1 V1");
    const S3S4Invariant x(parse_int_arg("S0", a[0]), parse_int_arg("V0", a[1]));
    const S3S4Invariant y(parse_int_arg("S1", a[2]), parse_int_arg("V1", a[3]));
    const bool same = s3s4_structure_equal(x, y);
    const bool diffeo = s3s4_diffeomorphic(x, y);
    r.result = {{"first", {{"sigma", big(x.sigma.value())}, {"v", big(x.v)}}},
                {"second", {{"sigma", big(y.sigma.value())}, {"v", big(y.v)}}},
                {"structure_equal", same},
                {"diffeomorphic", diffeo}};
    r.lines = {std::string("same structure: ") + (same ? "yes" : "no"),
               std::string("diffeomorphic: ") + (diffeo ? "yes" : "no")};
    return r;
}

Report cmd_s4s4(const std::vector<std::string>& a) {
    Report r;
    if (a.size() == 2) {
        const BigInt u = parse_int_arg("U", a[0]);
        const BigInt v = parse_int_arg("V", a[1]);
        const WallTriple w = wall_triple_of_plumbing(u, v);
        const CyclicElement c = plumbing_boundary_class(u, v);
        const Rational mu = plumbing_mu_invariant(u, v);
        r.result = {{"u", big(u)},
                    {"v", big(v)},
                    {"s_alpha", {big(w.s_alpha_x), big(w.s_alpha_y)}},
                    {"signature", w.signature},
                    {"s_alpha_squared", big(w.s_alpha_squared())},
                    {"mu", to_string(mu)},
                    {"boundary_class", big(c.value())},
                    {"boundary_standard", c.is_zero()}};
        r.lines = {"W_{" + u.str() + "," + v.str() + "}: S alpha = (" + w.s_alpha_x.str() + ", " + w.s_alpha_y.str() +
                       "), signature 0, S alpha^2 = " + w.s_alpha_squared().str(),
                   "mu = " + to_string(mu) + " in Q/Z; boundary class " + c.value().str() + " in Z_28 (" +
                       (c.is_zero() ? "standard S^7" : "exotic") + ")"};
        note(r, "labelling of bP_8 fixed up to sign; only vanishing is convention-free");
        return r;
    }
    if (a.size() != 6) throw UsageError("classify-s4s4 takes U V, or U0 V0 PHI0 U1 V1 PHI1");
    const S4S4Manifold x(parse_int_arg("U0", a[0]), parse_int_arg("V0", a[1]), parse_small_arg("PHI0", a[2]));
    const S4S4Manifold y(parse_int_arg("U1", a[3]), parse_int_arg("V1", a[4]), parse_small_arg("PHI1", a[5]));
    const bool almost = s4s4_almost_diffeomorphic(x, y);
    const bool diffeo = s4s4_diffeomorphic(x, y);
    r.result = {{"first", {{"u", big(x.u)}, {"v", big(x.v)}, {"phi", x.phi}}},
                {"second", {{"u", big(y.u)}, {"v", big(y.v)}, {"phi", y.phi}}},
                {"almost_diffeomorphic", almost},
                {"diffeomorphic", diffeo}};
    r.lines = {std::string("almost diffeomorphic: ") + (almost ? "yes" : "no"),
               std::string("diffeomorphic: ") + (diffeo ? "yes" : "no")};
    return r;
}

void emit(const Report& r, const std::string& command, const std::vector<std::string>& args, bool as_json,
          const std::vector<std::string>& table_warnings, std::ostream& out) {
    if (as_json) {
        json env;
        env["query"] = {{"command", command}, {"args", args}};
        env["result"] = r.result;
        env["provenance"] = r.provenance;
        env["warnings"] = table_warnings;
        out << env.dump(2) << "\n";
        return;
    }
    for (const auto& line : r.lines) out << line << "\n";
    for (const auto& note : r.provenance) out << "note: " << note << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Smooth and topological structure sets of products of spheres"};
    app.name(args.empty() ? "surgery" : args[0]);
    app.require_subcommand(1);
    app.fallthrough();

    std::string table_path;
    bool as_json = false;
    app.add_option("--table", table_path, "JSON group table overriding the built-in data");
    app.add_flag("--json", as_json, "Emit machine-readable JSON");

    std::vector<std::string> pos;
    std::string d_text;
    std::string command;
    const auto sub = [&](const std::string& name, const std::string& help, const std::string& pos_name,
                         int expected) {
        CLI::App* s = app.add_subcommand(name, help);
        auto* opt = s->add_option(pos_name, pos, "integer arguments");
        if (expected > 0) opt->expected(expected)->required();
        else opt->expected(1, 6)->required();
        s->callback([&command, name] { command = name; });
        return s;
    };
    sub("bernoulli", "Bernoulli number B_K (topologist's indexing)", "ARGS", 1);
    sub("t", "The constant t_I", "ARGS", 1);
    sub("bp-order", "Order of bP_M", "ARGS", 1);
    sub("residual", "The group 8 t_P t_Q . bP_{P+Q}", "ARGS", 2);
    sub("structure-set", "Presentation of S^Diff(S^P x S^Q)", "ARGS", 2);
    sub("fiber", "Fibre size of i^* o eta over d-invariant D", "ARGS", 2)->add_option("--d", d_text)->required();
    sub("stabilizer", "Stabilizer of a structure with d-invariant D", "ARGS", 2)->add_option("--d", d_text)->required();
    sub("group-structure", "Whether S^Diff(S^P x S^Q) admits a compatible group structure", "ARGS", 2);
    sub("image-f", "Whether Im(F) is a subgroup for S^P x S^Q", "ARGS", 2);
    sub("top-set", "The topological structure set of S^P x S^Q", "ARGS", 2);
    sub("classify-s3s4", "Manifolds homotopy equivalent to S^3 x S^4: V | S0 V0 S1 V1", "ARGS", 0);
    sub("classify-s4s4", "Manifolds homotopy equivalent to S^4 x S^4: U V | U0 V0 PHI0 U1 V1 PHI1", "ARGS", 0);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        std::vector<std::string> warnings;
        GroupTable table = GroupTable::builtin();
        if (table_path.empty()) {
            if (const char* env = std::getenv("SURGERY_TABLE"); env != nullptr && *env != '\0') table_path = env;
        }
        if (!table_path.empty()) {
            LoadedTable loaded = load_table_file(table_path);
            table = std::move(loaded.table);
            warnings = std::move(loaded.warnings);
            for (const auto& w : warnings) err << "warning: " << w << "\n";
        }

        const auto arg = [&](std::size_t i, const char* name) { return parse_small_arg(name, pos.at(i)); };
        const auto d_value = [&] { return parse_int_arg("--d", d_text); };

        Report r;
        if (command == "bernoulli") r = cmd_bernoulli(arg(0, "K"));
        else if (command == "t") r = cmd_t(arg(0, "I"));
        else if (command == "bp-order") r = cmd_bp_order(arg(0, "M"), table);
        else if (command == "residual") r = cmd_residual(arg(0, "P"), arg(1, "Q"));
        else if (command == "structure-set") r = cmd_structure_set(arg(0, "P"), arg(1, "Q"), table);
        else if (command == "fiber") r = cmd_fiber(arg(0, "P"), arg(1, "Q"), d_value(), table);
        else if (command == "stabilizer") r = cmd_stabilizer(arg(0, "P"), arg(1, "Q"), d_value());
        else if (command == "group-structure") r = cmd_group_structure(arg(0, "P"), arg(1, "Q"));
        else if (command == "image-f") r = cmd_image_f(arg(0, "P"), arg(1, "Q"));
        else if (command == "top-set") r = cmd_top_set(arg(0, "P"), arg(1, "Q"));
        else if (command == "classify-s3s4") r = cmd_s3s4(pos);
        else if (command == "classify-s4s4") r = cmd_s4s4(pos);
        else throw UsageError("unknown subcommand");

        std::vector<std::string> echoed = pos;
        if (!d_text.empty()) {
            echoed.push_back("--d");
            echoed.push_back(d_text);
        }
        emit(r, command, echoed, as_json, warnings, out);
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const TableError& e) {
        err << "table error: " << e.what() << "\n";
        return kDomainError;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace surgery::cli
