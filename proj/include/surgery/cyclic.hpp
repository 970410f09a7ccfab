#pragma once

#include "surgery/rationals.hpp"

namespace surgery {

// The finite cyclic group Z_n, n >= 1. Order 1 is the trivial group.
class CyclicGroup {
public:
    explicit CyclicGroup(BigInt order);

    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    friend bool operator==(const CyclicGroup&, const CyclicGroup&) = default;

private:
    BigInt order_;
};

// An element of Z_n, stored as its least non-negative residue.
class CyclicElement {
public:
    CyclicElement(CyclicGroup group, const BigInt& value);

    const CyclicGroup& group() const { return group_; }
    const BigInt& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    CyclicElement operator+(const CyclicElement& other) const;
    CyclicElement operator-(const CyclicElement& other) const;
    CyclicElement operator-() const;

    friend bool operator==(const CyclicElement&, const CyclicElement&) = default;

private:
    CyclicGroup group_;
    BigInt value_;
};

// The subgroup <g> of Z_n. The generator is kept in canonical form
// gcd(g mod n, n), so two subgroups are equal iff their fields are equal.
class CyclicSubgroup {
public:
    CyclicSubgroup(CyclicGroup ambient, const BigInt& generator);

    const CyclicGroup& ambient() const { return ambient_; }
    // Canonical generator; divides the ambient order (equals it for {0}).
    const BigInt& generator_value() const { return generator_; }
    BigInt order() const { return ambient_.order() / generator_; }
    // Index of the subgroup, i.e. the order of Z_n / <g>.
    const BigInt& index() const { return generator_; }
    bool is_trivial() const { return generator_ == ambient_.order(); }

    // The subgroup regarded as an abstract cyclic group.
    CyclicGroup as_group() const { return CyclicGroup(order()); }

    friend bool operator==(const CyclicSubgroup&, const CyclicSubgroup&) = default;

private:
    CyclicGroup ambient_;
    BigInt generator_;
};

CyclicSubgroup subgroup_generated(const BigInt& n, const BigInt& g);

// Throws DomainError when x lives in a different group than h.
bool in_subgroup(const CyclicElement& x, const CyclicSubgroup& h);

BigInt quotient_order(const BigInt& n, const BigInt& g);

}  // namespace surgery
