#include "z2n/degree.hpp"

namespace z2n {

Degree Degree::from_index(int n, std::size_t index) {
    std::vector<std::uint8_t> bits(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        bits[i] = static_cast<std::uint8_t>(index & 1u);
        index >>= 1u;
    }
    return Degree(std::move(bits));
}

bool Degree::is_zero() const {
    for (auto b : bits_)
        if (b) return false;
    return true;
}

std::size_t Degree::index() const {
    std::size_t v = 0;
    for (auto b : bits_) v = (v << 1u) | b;
    return v;
}

Degree Degree::operator+(const Degree& o) const {
    if (bits_.size() != o.bits_.size())
        throw AlgebraMismatch("degree addition over different ambient n");
    std::vector<std::uint8_t> r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) r[i] = bits_[i] ^ o.bits_[i];
    return Degree(std::move(r));
}

bool Degree::operator<(const Degree& o) const {
    if (bits_.size() != o.bits_.size())
        throw AlgebraMismatch("degree comparison over different ambient n");
    return bits_ < o.bits_;
}

std::string Degree::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

Degree Degree::from_string(const std::string& s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw DegreeViolation("invalid degree bitstring '" + s + "'");
        bits.push_back(c == '1' ? 1 : 0);
    }
    if (bits.empty()) throw DegreeViolation("empty degree bitstring");
    return Degree(std::move(bits));
}

std::vector<Degree> enumerate_degrees(int n) {
    if (n < 1) throw DegreeViolation("ambient rank n must be >= 1");
    std::vector<Degree> out;
    const std::size_t total = std::size_t(1) << n;
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i) out.push_back(Degree::from_index(n, i));
    return out;
}

int scalar_product(const Degree& a, const Degree& b) {
    if (a.n() != b.n())
        throw AlgebraMismatch("scalar product over different ambient n");
    int s = 0;
    for (int i = 0; i < a.n(); ++i) s += a.bit(i) * b.bit(i);
    return s;
}

int koszul_sign(const Degree& a, const Degree& b) {
    return (scalar_product(a, b) % 2 == 0) ? 1 : -1;
}

} // namespace z2n
