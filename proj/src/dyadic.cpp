#include "expind/dyadic.hpp"

#include <stdexcept>

namespace expind {

Dyadic::Dyadic(BigInt num, int shift) : num_(std::move(num)), shift_(shift) {
    if (num_ < 0) throw std::invalid_argument("Dyadic: negative numerator");
    if (shift_ < 0) throw std::invalid_argument("Dyadic: negative shift");
    normalize();
}

void Dyadic::normalize() {
    if (num_ == 0) {
        shift_ = 0;
        return;
    }
    while (shift_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --shift_;
    }
}

Dyadic Dyadic::half_pow(int e) {
    if (e < -1) throw std::invalid_argument("Dyadic::half_pow: exponent below -1");
    if (e == -1) return Dyadic(BigInt(2));
    return Dyadic(BigInt(1), e);
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
    int shift = std::max(shift_, other.shift_);
    BigInt a = num_ << (shift - shift_);
    BigInt b = other.num_ << (shift - other.shift_);
    return Dyadic(a + b, shift);
}

Dyadic Dyadic::operator-(const Dyadic& other) const {
    int shift = std::max(shift_, other.shift_);
    BigInt a = num_ << (shift - shift_);
    BigInt b = other.num_ << (shift - other.shift_);
    if (a < b) throw std::invalid_argument("Dyadic: negative difference");
    return Dyadic(a - b, shift);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
    int shift = std::max(shift_, other.shift_);
    BigInt a = num_ << (shift - shift_);
    BigInt b = other.num_ << (shift - other.shift_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
    std::string s = num_.str();
    if (shift_ > 0) s += "/2^" + std::to_string(shift_);
    return s;
}

}  // namespace expind
