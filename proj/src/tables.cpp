#include "surgery/tables.hpp"

#include "surgery/bp.hpp"
#include "surgery/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace surgery {

KnownGroup KnownGroup::finite(const BigInt& order) {
    if (order < 1) throw DomainError("KnownGroup::finite: order must be >= 1");
    return KnownGroup(Kind::Finite, order);
}

KnownGroup KnownGroup::z_times_finite(const BigInt& torsion_order) {
    if (torsion_order < 1) throw DomainError("KnownGroup::z_times_finite: torsion order must be >= 1");
    return KnownGroup(Kind::ZTimesFinite, torsion_order);
}

std::optional<BigInt> KnownGroup::finite_order() const {
    if (kind_ == Kind::Unknown) return std::nullopt;
    return order_;
}

bool KnownGroup::is_trivial() const {
    return kind_ == Kind::Trivial || (kind_ == Kind::Finite && order_ == 1);
}

std::string KnownGroup::describe() const {
    switch (kind_) {
        case Kind::Trivial: return "0";
        case Kind::Finite: return order_ == 1 ? "0" : "Z_" + order_.str();
        case Kind::ZTimesFinite:
            return order_ == 1 ? "Z" : "Z x (order " + order_.str() + ")";
        case Kind::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(KnownGroup::Kind kind) {
    switch (kind) {
        case KnownGroup::Kind::Trivial: return "trivial";
        case KnownGroup::Kind::Finite: return "finite";
        case KnownGroup::Kind::ZTimesFinite: return "z_times_finite";
        case KnownGroup::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

GroupTable::GroupTable(Family theta, Family pi_go, Family bp)
    : theta_(std::move(theta)), pi_go_(std::move(pi_go)), bp_(std::move(bp)) {}

GroupTable GroupTable::builtin() {
    // Orders of the groups of homotopy spheres (Kervaire-Milnor and later
    // computations). Not derived here.
    static const int dims[] = {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
    static const long orders[] = {1, 1, 28, 2, 8, 6, 992, 1, 3, 2, 16256, 2, 16, 16, 523264, 24};
    Family theta;
    for (std::size_t i = 0; i < std::size(dims); ++i) {
        theta.emplace(dims[i], KnownGroup::finite(orders[i]));
    }
    Family pi;
    pi.emplace(2, KnownGroup::finite(2));
    pi.emplace(3, KnownGroup::trivial());
    pi.emplace(4, KnownGroup::z_times_finite(1));
    // bP_{4k+2} is a quotient of L_{4k+2}(e) = Z_2 sitting inside Theta_{4k+1};
    // only the cases where |Theta_{4k+1}| is odd are forced.
    Family bp;
    bp.emplace(6, KnownGroup::trivial());
    bp.emplace(14, KnownGroup::trivial());
    return GroupTable(std::move(theta), std::move(pi), std::move(bp));
}

std::vector<std::string> GroupTable::consistency_warnings() const {
    std::vector<std::string> out;
    for (const auto& [n, th] : theta_) {
        const int m = n + 1;
        if (m < 5) continue;
        const KnownGroup b = bp_order(m, *this);
        const auto bo = b.finite_order();
        const auto to = th.finite_order();
        if (!bo || !to || th.kind() == KnownGroup::Kind::ZTimesFinite) continue;
        if (*to % *bo != 0) {
            out.push_back("|bP_" + std::to_string(m) + "| = " + bo->str() + " does not divide |Theta_" +
                          std::to_string(n) + "| = " + to->str());
        }
    }
    return out;
}

namespace {

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

int parse_dimension(const std::string& family, const std::string& key) {
    const std::string field = family + "." + key;
    if (key.empty() || key.size() > 6 || !std::all_of(key.begin(), key.end(), ::isdigit)) {
        throw TableError("table field '" + field + "': dimension must be a decimal integer");
    }
    return std::stoi(key);
}

KnownGroup parse_entry(const std::string& family, const std::string& key, int dim,
                       const nlohmann::json& value) {
    const std::string field = family + "." + key;
    if (!value.is_string()) {
        throw TableError("table field '" + field + "': expected a string, got " + value.type_name());
    }
    const std::string s = value.get<std::string>();
    if (s == "unknown") return KnownGroup::unknown();
    const bool is_pi = family == "pi_go_torsion";
    if (s == "Z") {
        if (!is_pi) throw TableError("table field '" + field + "': \"Z\" is only valid in pi_go_torsion");
        return KnownGroup::z_times_finite(1);
    }
    BigInt order;
    try {
        order = parse_bigint(s);
    } catch (const std::invalid_argument&) {
        throw TableError("table field '" + field + "': expected a decimal order, \"Z\" or \"unknown\", got '" +
                         s + "'");
    }
    if (order < 1) throw TableError("table field '" + field + "': order must be >= 1");
    if (is_pi && dim % 4 == 0) return KnownGroup::z_times_finite(order);
    return order == 1 ? KnownGroup::trivial() : KnownGroup::finite(order);
}

}  // namespace

LoadedTable load_table_text(const std::string& text) {
    GroupTable base = GroupTable::builtin();
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); })) {
        return {base, base.consistency_warnings()};
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw TableError("table parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object()) throw TableError("table: top level must be a JSON object");

    GroupTable::Family theta = base.theta();
    GroupTable::Family pi = base.pi_go();
    GroupTable::Family bp = base.bp();
    for (const auto& [family, entries] : doc.items()) {
        GroupTable::Family* target = nullptr;
        if (family == "theta") target = &theta;
        else if (family == "pi_go_torsion") target = &pi;
        else if (family == "bp") target = &bp;
        else throw TableError("table: unknown key '" + family + "' (expected theta, pi_go_torsion, bp)");
        if (!entries.is_object()) throw TableError("table field '" + family + "': expected an object");
        for (const auto& [key, value] : entries.items()) {
            const int dim = parse_dimension(family, key);
            (*target).insert_or_assign(dim, parse_entry(family, key, dim, value));
        }
    }
    GroupTable merged(std::move(theta), std::move(pi), std::move(bp));
    auto warnings = merged.consistency_warnings();
    return {std::move(merged), std::move(warnings)};
}

LoadedTable load_table_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableError("cannot open table file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_table_text(buf.str());
}

KnownGroup theta_order(int n, const GroupTable& table) {
    if (n < 5) throw DomainError("theta_order: dimension must be >= 5, got " + std::to_string(n));
    const auto it = table.theta().find(n);
    return it == table.theta().end() ? KnownGroup::unknown() : it->second;
}

KnownGroup pi_go(int n, const GroupTable& table) {
    if (n < 2) throw DomainError("pi_go: dimension must be >= 2, got " + std::to_string(n));
    if (const auto it = table.pi_go().find(n); it != table.pi_go().end()) return it->second;

    // Otherwise read pi_n(G/O) off 0 -> bP_{n+1} -> Theta_n -> pi_n(G/O) -> L_n(e) -> bP_n -> 0.
    if (n < 5) return KnownGroup::unknown();
    const auto th = theta_order(n, table).finite_order();
    if (!th) return KnownGroup::unknown();
    if (n % 4 == 0) return KnownGroup::z_times_finite(*th);
    if (n % 2 == 1) {
        const auto b = bp_order(n + 1, table).finite_order();
        if (!b || *th % *b != 0) return KnownGroup::unknown();
        const BigInt order = *th / *b;
        return order == 1 ? KnownGroup::trivial() : KnownGroup::finite(order);
    }
    const auto b = bp_order(n, table).finite_order();
    if (!b || 2 % *b != 0) return KnownGroup::unknown();
    return KnownGroup::finite(*th * 2 / *b);
}

}  // namespace surgery
