#include "twep/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "twep/errors.h"

namespace twep {

namespace {

constexpr std::size_t kWordBits = 64;

void check_dimension(int d) {
    if (d != 2 && d != 3) {
        throw std::invalid_argument("register dimension must be 2 or 3, got " + std::to_string(d));
    }
}

int normalize(int v, int d) {
    v %= d;
    return v < 0 ? v + d : v;
}

// Sum over sites of a_i * b_i mod 3 for one-hot encoded trit planes.
int dot_mod3(std::span<const uint64_t> al, std::span<const uint64_t> ah, std::span<const uint64_t> bl,
             std::span<const uint64_t> bh) {
    int ones = 0;
    int twos = 0;
    for (std::size_t w = 0; w < al.size(); w++) {
        ones += std::popcount((al[w] & bl[w]) | (ah[w] & bh[w]));
        twos += std::popcount((al[w] & bh[w]) | (ah[w] & bl[w]));
    }
    return (ones + 2 * twos) % 3;
}

const char *kQubitLetters = "IXZY";  // indexed by x + 2z

const char *const kQutritTokens[9] = {"I", "X", "X2", "Z", "XZ", "X2Z", "Z2", "XZ2", "X2Z2"};  // x + 3z

}  // namespace

PauliVec::PauliVec(int d, std::size_t n) : d_(d), n_(n), words_((n + kWordBits - 1) / kWordBits) {
    check_dimension(d);
    bits_.assign(4 * words_, 0);
}

PauliVec PauliVec::from_xz(int d, std::span<const int> x, std::span<const int> z) {
    if (x.size() != z.size()) {
        throw DimensionMismatch("x and z exponent vectors differ in length");
    }
    PauliVec result(d, x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        result.set(i, x[i], z[i]);
    }
    return result;
}

PauliVec PauliVec::from_xz(int d, std::initializer_list<int> x, std::initializer_list<int> z) {
    return from_xz(d, std::span<const int>(x.begin(), x.size()), std::span<const int>(z.begin(), z.size()));
}

PauliVec PauliVec::on_sites(int d, std::size_t n, std::span<const std::size_t> sites, int x, int z) {
    PauliVec result(d, n);
    for (auto s : sites) {
        result.set(s, x, z);
    }
    return result;
}

PauliVec PauliVec::on_sites(int d, std::size_t n, std::initializer_list<std::size_t> sites, int x, int z) {
    return on_sites(d, n, std::span<const std::size_t>(sites.begin(), sites.size()), x, z);
}

int PauliVec::x(std::size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("register index out of range");
    }
    uint64_t m = uint64_t{1} << (i % kWordBits);
    std::size_t w = i / kWordBits;
    return (bits_[w] & m) ? 1 : (bits_[words_ + w] & m) ? 2 : 0;
}

int PauliVec::z(std::size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("register index out of range");
    }
    uint64_t m = uint64_t{1} << (i % kWordBits);
    std::size_t w = i / kWordBits;
    return (bits_[2 * words_ + w] & m) ? 1 : (bits_[3 * words_ + w] & m) ? 2 : 0;
}

int PauliVec::site_code(std::size_t i) const {
    return x(i) + d_ * z(i);
}

int PauliVec::coordinate(std::size_t j) const {
    return j < n_ ? x(j) : z(j - n_);
}

void PauliVec::set(std::size_t i, int x, int z) {
    if (i >= n_) {
        throw std::out_of_range("register index out of range");
    }
    x = normalize(x, d_);
    z = normalize(z, d_);
    uint64_t m = uint64_t{1} << (i % kWordBits);
    std::size_t w = i / kWordBits;
    for (int plane = 0; plane < 4; plane++) {
        bits_[plane * words_ + w] &= ~m;
    }
    if (x == 1) bits_[w] |= m;
    if (x == 2) bits_[words_ + w] |= m;
    if (z == 1) bits_[2 * words_ + w] |= m;
    if (z == 2) bits_[3 * words_ + w] |= m;
}

std::size_t PauliVec::weight() const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; w++) {
        total += std::popcount(bits_[w] | bits_[words_ + w] | bits_[2 * words_ + w] | bits_[3 * words_ + w]);
    }
    return total;
}

bool PauliVec::is_identity() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](uint64_t w) { return w == 0; });
}

void PauliVec::check_compatible(const PauliVec &other) const {
    if (d_ != other.d_ || n_ != other.n_) {
        throw DimensionMismatch("Pauli operators differ in dimension or register count (d=" + std::to_string(d_) +
                                ", n=" + std::to_string(n_) + " vs d=" + std::to_string(other.d_) +
                                ", n=" + std::to_string(other.n_) + ")");
    }
}

void PauliVec::add_in_place(std::span<const uint64_t> xl, std::span<const uint64_t> xh,
                            std::span<const uint64_t> zl, std::span<const uint64_t> zh) {
    uint64_t *a = bits_.data();
    if (d_ == 2) {
        for (std::size_t w = 0; w < words_; w++) {
            a[w] ^= xl[w];
            a[2 * words_ + w] ^= zl[w];
        }
        return;
    }
    auto add3 = [](uint64_t &lo, uint64_t &hi, uint64_t bl, uint64_t bh) {
        uint64_t a0 = ~(lo | hi);
        uint64_t b0 = ~(bl | bh);
        uint64_t r1 = (lo & b0) | (a0 & bl) | (hi & bh);
        uint64_t r2 = (hi & b0) | (a0 & bh) | (lo & bl);
        lo = r1;
        hi = r2;
    };
    for (std::size_t w = 0; w < words_; w++) {
        add3(a[w], a[words_ + w], xl[w], xh[w]);
        add3(a[2 * words_ + w], a[3 * words_ + w], zl[w], zh[w]);
    }
}

void PauliVec::multiply_power(const PauliVec &other, int c) {
    check_compatible(other);
    c = normalize(c, d_);
    if (c == 0) {
        return;
    }
    if (c == 1) {
        add_in_place(other.x_lo(), other.x_hi(), other.z_lo(), other.z_hi());
    } else {
        // c == 2 only occurs for d == 3, where doubling swaps the one-hot planes.
        add_in_place(other.x_hi(), other.x_lo(), other.z_hi(), other.z_lo());
    }
}

PauliVec PauliVec::operator*(const PauliVec &other) const {
    PauliVec result = *this;
    result *= other;
    return result;
}

PauliVec &PauliVec::operator*=(const PauliVec &other) {
    multiply_power(other, 1);
    return *this;
}

PauliVec PauliVec::pow(int k) const {
    PauliVec result(d_, n_);
    result.multiply_power(*this, k);
    return result;
}

bool PauliVec::operator==(const PauliVec &other) const noexcept {
    return d_ == other.d_ && n_ == other.n_ && bits_ == other.bits_;
}

std::string PauliVec::str() const {
    return render(*this);
}

std::size_t PauliVec::hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(n_ * 4 + static_cast<std::size_t>(d_));
    for (auto w : bits_) {
        h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

int symplectic_product(const PauliVec &p, const PauliVec &q) {
    if (p.d() != q.d() || p.n() != q.n()) {
        throw DimensionMismatch("symplectic product of operators with different d or n");
    }
    if (p.d() == 2) {
        int parity = 0;
        auto px = p.x_lo(), pz = p.z_lo(), qx = q.x_lo(), qz = q.z_lo();
        for (std::size_t w = 0; w < px.size(); w++) {
            parity ^= std::popcount((px[w] & qz[w]) ^ (pz[w] & qx[w])) & 1;
        }
        return parity;
    }
    int xz = dot_mod3(p.x_lo(), p.x_hi(), q.z_lo(), q.z_hi());
    int zx = dot_mod3(p.z_lo(), p.z_hi(), q.x_lo(), q.x_hi());
    return (xz + 2 * zx) % 3;
}

PauliVec parse_pauli(std::string_view text, int d) {
    check_dimension(d);
    if (text.empty()) {
        throw ParseError(ParseError::Kind::Syntax, "empty Pauli text", 0);
    }
    std::vector<int> xs;
    std::vector<int> zs;
    if (d == 2) {
        for (std::size_t i = 0; i < text.size(); i++) {
            switch (text[i]) {
                case 'I': xs.push_back(0), zs.push_back(0); break;
                case 'X': xs.push_back(1), zs.push_back(0); break;
                case 'Y': xs.push_back(1), zs.push_back(1); break;
                case 'Z': xs.push_back(0), zs.push_back(1); break;
                case ',':
                case '2':
                    throw ParseError(ParseError::Kind::LetterForDimension,
                                     std::string("'") + text[i] + "' is only valid in qutrit text", i);
                default:
                    throw ParseError(ParseError::Kind::Syntax, std::string("unexpected character '") + text[i] + "'",
                                     i);
            }
        }
        return PauliVec::from_xz(2, xs, zs);
    }

    std::size_t start = 0;
    while (true) {
        std::size_t end = text.find(',', start);
        std::string_view token = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (token.empty()) {
            throw ParseError(ParseError::Kind::Syntax, "empty register token", start);
        }
        if (token.find('Y') != std::string_view::npos) {
            throw ParseError(ParseError::Kind::LetterForDimension, "'Y' is only valid in qubit text",
                             start + token.find('Y'));
        }
        int code = -1;
        for (int c = 0; c < 9; c++) {
            if (token == kQutritTokens[c]) {
                code = c;
                break;
            }
        }
        if (code < 0) {
            throw ParseError(ParseError::Kind::Syntax, "unknown qutrit token '" + std::string(token) + "'", start);
        }
        xs.push_back(code % 3);
        zs.push_back(code / 3);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return PauliVec::from_xz(3, xs, zs);
}

std::string render(const PauliVec &p) {
    std::string out;
    if (p.d() == 2) {
        out.reserve(p.n());
        for (std::size_t i = 0; i < p.n(); i++) {
            out.push_back(kQubitLetters[p.site_code(i)]);
        }
        return out;
    }
    for (std::size_t i = 0; i < p.n(); i++) {
        if (i) {
            out.push_back(',');
        }
        out += kQutritTokens[p.site_code(i)];
    }
    return out;
}

bool canonical_less(const PauliVec &a, const PauliVec &b) {
    if (a.d() != b.d() || a.n() != b.n()) {
        throw DimensionMismatch("canonical order of operators with different d or n");
    }
    std::size_t wa = a.weight(), wb = b.weight();
    if (wa != wb) {
        return wa < wb;
    }
    for (std::size_t i = 0; i < a.n(); i++) {
        bool sa = a.site_code(i) != 0;
        bool sb = b.site_code(i) != 0;
        if (sa != sb) {
            return sa;
        }
    }
    for (std::size_t i = 0; i < a.n(); i++) {
        int ca = a.site_code(i), cb = b.site_code(i);
        if (ca != cb) {
            return ca < cb;
        }
    }
    return false;
}

}  // namespace twep

namespace twep {

bool for_each_of_weight(int d, std::size_t n, std::size_t w, const std::function<bool(const PauliVec &)> &visit) {
    check_dimension(d);
    if (w > n) {
        return true;
    }
    const int codes = d * d - 1;
    std::vector<std::size_t> support(w);
    for (std::size_t i = 0; i < w; i++) {
        support[i] = i;
    }
    std::vector<int> digits(w);
    while (true) {
        // Codes over the current support; first support site is the most significant digit.
        std::fill(digits.begin(), digits.end(), 1);
        while (true) {
            PauliVec p(d, n);
            for (std::size_t i = 0; i < w; i++) {
                p.set(support[i], digits[i] % d, digits[i] / d);
            }
            if (!visit(p)) {
                return false;
            }
            std::size_t k = w;
            while (k > 0 && digits[k - 1] == codes) {
                digits[k - 1] = 1;
                k--;
            }
            if (k == 0) {
                break;
            }
            digits[k - 1]++;
        }
        // Next combination in lexicographic order.
        std::size_t k = w;
        while (k > 0 && support[k - 1] == n - w + k - 1) {
            k--;
        }
        if (k == 0) {
            return true;
        }
        support[k - 1]++;
        for (std::size_t i = k; i < w; i++) {
            support[i] = support[i - 1] + 1;
        }
    }
}

}  // namespace twep
