#pragma once

#include "surgery/rationals.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surgery {

// What is known about a finitely generated abelian group of interest:
// trivial, finite of a given order, Z x (finite of a given order), or unknown.
class KnownGroup {
public:
    enum class Kind { Trivial, Finite, ZTimesFinite, Unknown };

    static KnownGroup trivial() { return KnownGroup(Kind::Trivial, 1); }
    static KnownGroup finite(const BigInt& order);
    static KnownGroup z_times_finite(const BigInt& torsion_order);
    static KnownGroup unknown() { return KnownGroup(Kind::Unknown, 0); }

    Kind kind() const { return kind_; }
    bool is_known() const { return kind_ != Kind::Unknown; }
    // Order for Trivial/Finite, torsion order for ZTimesFinite, nullopt otherwise.
    std::optional<BigInt> finite_order() const;
    // True for Trivial and for Finite(1).
    bool is_trivial() const;

    // "0", "Z_28", "Z", "Z x (order 2)", "unknown".
    std::string describe() const;

    friend bool operator==(const KnownGroup&, const KnownGroup&) = default;

private:
    KnownGroup(Kind kind, BigInt order) : kind_(kind), order_(std::move(order)) {}
    Kind kind_;
    BigInt order_;
};

std::string to_string(KnownGroup::Kind kind);

// Group data presupposed by the surgery computations: orders of Theta_n,
// explicit pi_n(G/O) entries, and bP_m for m = 2 mod 4. Immutable after
// construction.
class GroupTable {
public:
    using Family = std::map<int, KnownGroup>;

    // Shipped defaults (dimensions <= 20).
    static GroupTable builtin();

    GroupTable(Family theta, Family pi_go, Family bp);

    const Family& theta() const { return theta_; }
    const Family& pi_go() const { return pi_go_; }
    const Family& bp() const { return bp_; }

    // Consistency diagnostics: |bP_{n+1}| must divide |Theta_n| where both are finite.
    std::vector<std::string> consistency_warnings() const;

private:
    Family theta_;
    Family pi_go_;
    Family bp_;
};

struct LoadedTable {
    GroupTable table;
    std::vector<std::string> warnings;
};

// Overlays a JSON document on the built-in table. Accepted keys are "theta",
// "pi_go_torsion" and "bp"; each maps decimal dimensions to a decimal order,
// "Z" (pi_go only) or "unknown". Empty or whitespace-only text yields the
// built-ins. Throws TableError with line/field diagnostics.
LoadedTable load_table_text(const std::string& text);
LoadedTable load_table_file(const std::filesystem::path& path);

KnownGroup theta_order(int n, const GroupTable& table);
KnownGroup pi_go(int n, const GroupTable& table);

}  // namespace surgery
