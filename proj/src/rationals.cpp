#include "surgery/rationals.hpp"

#include "surgery/errors.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace surgery {

namespace {

// Topologist's B_1..B_k for every k computed so far. One pass of the
// Akiyama-Tanigawa triangle up to row n leaves the classical B_m in a[0]
// after row m (B_1 = +1/2 convention), so the whole prefix comes for free.
class BernoulliCache {
public:
    Rational get(int k) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (static_cast<std::size_t>(k) >= values_.size()) extend(std::max(k, 2 * static_cast<int>(values_.size())));
        return values_[static_cast<std::size_t>(k)];
    }

private:
    void extend(int k_max) {
        const int n = 2 * k_max;
        std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
        std::vector<Rational> out(static_cast<std::size_t>(k_max) + 1);
        for (int m = 0; m <= n; ++m) {
            a[m] = Rational(1, m + 1);
            for (int j = m; j >= 1; --j) {
                a[j - 1] = j * (a[j - 1] - a[j]);
            }
            if (m % 2 == 0) out[m / 2] = a[0] < 0 ? Rational(-a[0]) : a[0];
        }
        values_ = std::move(out);
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

}  // namespace

Rational bernoulli(int k) {
    if (k < 1) {
        throw DomainError("bernoulli: index must be >= 1, got " + std::to_string(k));
    }
    static BernoulliCache cache;
    return cache.get(k);
}

BigInt num_b_over_4k(int k) {
    if (k < 1) {
        throw DomainError("num_b_over_4k: index must be >= 1, got " + std::to_string(k));
    }
    const Rational q = bernoulli(k) / Rational(4 * k);
    return boost::multiprecision::numerator(q);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

BigInt mod_floor(const BigInt& a, const BigInt& n) {
    BigInt r = a % n;
    if (r < 0) r += n;
    return r;
}

BigInt pow2(unsigned e) {
    BigInt x = 1;
    x <<= e;
    return x;
}

BigInt parse_bigint(const std::string& text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("not an integer: '" + text + "'");
        }
    }
    // Strip leading zeros: the Boost string constructor would read them as octal.
    while (i + 1 < text.size() && text[i] == '0') ++i;
    BigInt value(text.substr(i));
    return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace surgery
