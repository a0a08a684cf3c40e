#ifndef EXPIND_DYADIC_HPP
#define EXPIND_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace expind {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative rational num / 2^shift. Normalized so that num is odd
// or shift is zero (0 is stored as 0/2^0). All arithmetic is exact; there
// is no floating point anywhere in the weight computations.
class Dyadic {
public:
    Dyadic() = default;
    explicit Dyadic(BigInt integer_value) : num_(std::move(integer_value)) {
        if (num_ < 0) throw std::invalid_argument("Dyadic: negative value");
    }
    Dyadic(BigInt num, int shift);

    // (1/2)^e for e >= -1; e = -1 gives 2 (the self term of a member).
    static Dyadic half_pow(int e);
    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(BigInt(1)); }

    const BigInt& num() const { return num_; }
    int shift() const { return shift_; }
    bool is_zero() const { return num_ == 0; }

    Dyadic operator+(const Dyadic& other) const;
    Dyadic& operator+=(const Dyadic& other) { return *this = *this + other; }
    Dyadic operator-(const Dyadic& other) const;  // throws if result negative

    std::strong_ordering operator<=>(const Dyadic& other) const;
    bool operator==(const Dyadic& other) const = default;

    std::string to_string() const;  // "num/2^shift" (or just "num")

private:
    void normalize();

    BigInt num_ = 0;
    int shift_ = 0;
};

}  // namespace expind

#endif
