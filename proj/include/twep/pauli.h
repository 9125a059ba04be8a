#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twep {

/// A phaseless Pauli operator on `n` registers of prime dimension `d` (2 or 3), stored in
/// symplectic form (x|z) with x_i, z_i in Z_d.
///
/// The operator is X^{x_1} Z^{z_1} ⊗ ... ⊗ X^{x_n} Z^{z_n} modulo global phase. Each of the four
/// coordinate families (x low bit, x high bit, z low bit, z high bit) is a packed bit plane, so
/// group arithmetic and the symplectic form run a word at a time. A value v in Z_3 is stored
/// one-hot: 1 sets the low plane, 2 sets the high plane. For d = 2 the high planes stay zero.
class PauliVec {
   public:
    /// Identity on `n` registers.
    PauliVec(int d, std::size_t n);

    static PauliVec from_xz(int d, std::span<const int> x, std::span<const int> z);
    static PauliVec from_xz(int d, std::initializer_list<int> x, std::initializer_list<int> z);
    /// The operator X^x Z^z on every register in `sites` (zero-based), identity elsewhere.
    static PauliVec on_sites(int d, std::size_t n, std::span<const std::size_t> sites, int x, int z);
    static PauliVec on_sites(int d, std::size_t n, std::initializer_list<std::size_t> sites, int x, int z);

    int d() const noexcept {
        return d_;
    }
    std::size_t n() const noexcept {
        return n_;
    }

    int x(std::size_t i) const;
    int z(std::size_t i) const;
    /// Per-register code x + d*z; 0 is the identity. Used for canonical orderings.
    int site_code(std::size_t i) const;
    /// Coordinate j of the 2n-vector (x_0..x_{n-1} | z_0..z_{n-1}).
    int coordinate(std::size_t j) const;

    void set(std::size_t i, int x, int z);

    std::size_t weight() const noexcept;
    bool is_identity() const noexcept;

    /// Component-wise sum of exponents mod d.
    PauliVec operator*(const PauliVec &other) const;
    PauliVec &operator*=(const PauliVec &other);
    /// Scalar multiple k*(x|z), i.e. the k-th power up to phase.
    PauliVec pow(int k) const;
    PauliVec inverse() const {
        return pow(d_ - 1);
    }
    /// this <- this * other^c.
    void multiply_power(const PauliVec &other, int c);

    bool operator==(const PauliVec &other) const noexcept;
    bool operator!=(const PauliVec &other) const noexcept {
        return !(*this == other);
    }

    std::string str() const;

    std::size_t num_words() const noexcept {
        return words_;
    }
    std::span<const uint64_t> x_lo() const noexcept {
        return {bits_.data(), words_};
    }
    std::span<const uint64_t> x_hi() const noexcept {
        return {bits_.data() + words_, words_};
    }
    std::span<const uint64_t> z_lo() const noexcept {
        return {bits_.data() + 2 * words_, words_};
    }
    std::span<const uint64_t> z_hi() const noexcept {
        return {bits_.data() + 3 * words_, words_};
    }

    std::size_t hash() const noexcept;

   private:
    void check_compatible(const PauliVec &other) const;
    void add_in_place(std::span<const uint64_t> xl, std::span<const uint64_t> xh, std::span<const uint64_t> zl,
                      std::span<const uint64_t> zh);

    int d_;
    std::size_t n_;
    std::size_t words_;
    std::vector<uint64_t> bits_;
};

/// r(P, Q) with PQ = ω^{r} QP: sum_i (P.x_i Q.z_i - P.z_i Q.x_i) mod d. Zero iff P and Q commute.
int symplectic_product(const PauliVec &p, const PauliVec &q);

inline PauliVec multiply(const PauliVec &p, const PauliVec &q) {
    return p * q;
}

inline std::size_t weight(const PauliVec &p) {
    return p.weight();
}

/// Qubits: one letter per register from {I, X, Y, Z}. Qutrits: comma-separated tokens from
/// {I, X, X2, Z, Z2, XZ, XZ2, X2Z, X2Z2}.
PauliVec parse_pauli(std::string_view text, int d);
std::string render(const PauliVec &p);

/// Canonical total order: weight, then support (sorted index lists compared lexicographically),
/// then per-register codes in support order. Enumeration and tie-breaking everywhere follow it.
bool canonical_less(const PauliVec &a, const PauliVec &b);

/// Visits every operator of exactly weight `w` on n registers, in canonical order. Stops early
/// when `visit` returns false; returns false iff stopped early.
bool for_each_of_weight(int d, std::size_t n, std::size_t w, const std::function<bool(const PauliVec &)> &visit);

struct PauliVecHash {
    std::size_t operator()(const PauliVec &p) const noexcept {
        return p.hash();
    }
};

}  // namespace twep
