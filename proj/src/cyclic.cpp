#include "surgery/cyclic.hpp"

#include "surgery/errors.hpp"

#include <utility>

namespace surgery {

namespace {

void require_order(const BigInt& n, const char* where) {
    if (n < 1) {
        throw DomainError(std::string(where) + ": group order must be >= 1, got " + to_string(n));
    }
}

}  // namespace

CyclicGroup::CyclicGroup(BigInt order) : order_(std::move(order)) {
    require_order(order_, "CyclicGroup");
}

CyclicElement::CyclicElement(CyclicGroup group, const BigInt& value)
    : group_(std::move(group)), value_(mod_floor(value, group_.order())) {}

CyclicElement CyclicElement::operator+(const CyclicElement& other) const {
    if (!(group_ == other.group_)) throw DomainError("CyclicElement: adding elements of different groups");
    return CyclicElement(group_, value_ + other.value_);
}

CyclicElement CyclicElement::operator-(const CyclicElement& other) const {
    if (!(group_ == other.group_)) throw DomainError("CyclicElement: subtracting elements of different groups");
    return CyclicElement(group_, value_ - other.value_);
}

CyclicElement CyclicElement::operator-() const { return CyclicElement(group_, -value_); }

CyclicSubgroup::CyclicSubgroup(CyclicGroup ambient, const BigInt& generator)
    : ambient_(std::move(ambient)),
      generator_(gcd(mod_floor(generator, ambient_.order()), ambient_.order())) {}

CyclicSubgroup subgroup_generated(const BigInt& n, const BigInt& g) {
    require_order(n, "subgroup_generated");
    return CyclicSubgroup(CyclicGroup(n), g);
}

bool in_subgroup(const CyclicElement& x, const CyclicSubgroup& h) {
    if (!(x.group() == h.ambient())) {
        throw DomainError("in_subgroup: element of Z_" + to_string(x.group().order()) +
                          " tested against a subgroup of Z_" + to_string(h.ambient().order()));
    }
    return x.value() % h.generator_value() == 0;
}

BigInt quotient_order(const BigInt& n, const BigInt& g) {
    require_order(n, "quotient_order");
    return gcd(mod_floor(g, n), n);
}

}  // namespace surgery
