#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mmg/error.hpp"

namespace mmg::gf {

/// An element of GF(q), stored as its canonical integer encoding
/// e(a) = sum coeffs[i] * p^i in [0, q).
using Elem = std::uint32_t;

namespace detail {

// Polynomials over Z_p as coefficient vectors, constant term first.

inline int poly_degree(const std::vector<std::uint32_t>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo a monic divisor b.
inline std::vector<std::uint32_t> poly_rem_monic(std::vector<std::uint32_t> a,
                                                 const std::vector<std::uint32_t>& b,
                                                 std::uint32_t p) {
    const int db = poly_degree(b);
    for (int i = poly_degree(a); i >= db; --i) {
        const std::uint64_t c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (int j = 0; j < db; ++j) {
            a[i - db + j] =
                static_cast<std::uint32_t>((a[i - db + j] + c * (p - b[j])) % p);
        }
    }
    return a;
}

inline std::vector<std::uint32_t> base_p_digits(std::uint64_t value, std::uint32_t p,
                                                std::size_t width) {
    std::vector<std::uint32_t> digits(width, 0);
    for (std::size_t i = 0; i < width && value != 0; ++i) {
        digits[i] = static_cast<std::uint32_t>(value % p);
        value /= p;
    }
    return digits;
}

// Monic polynomial of degree n built from the n low coefficients.
inline std::vector<std::uint32_t> monic_from_digits(std::vector<std::uint32_t> low) {
    low.push_back(1);
    return low;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const int n = poly_degree(f);
    for (int d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            auto divisor = monic_from_digits(base_p_digits(enc, p, d));
            if (poly_degree(poly_rem_monic(f, divisor, p)) < 0) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Arithmetic context for GF(q), q = p^n. Immutable once built; all
/// operations are pure and safe to share across threads.
///
/// Extension fields use the monic irreducible modulus of degree n over Z_p
/// whose non-leading coefficient vector has the smallest integer encoding,
/// so two independently constructed fields of the same order agree element
/// by element.
class Field {
public:
    /// Builds GF(q). Fails with NotPrimePower unless q = p^n.
    static Field make(std::uint64_t q) {
        if (q < 2 || q > std::numeric_limits<std::uint32_t>::max())
            fail("NotPrimePower", "q must be a prime power in [2, 2^32): q=" + std::to_string(q));
        std::uint64_t p = q;
        for (std::uint64_t f = 2; f * f <= q; ++f) {
            if (q % f == 0) {
                p = f;
                break;
            }
        }
        std::uint32_t n = 0;
        for (std::uint64_t m = q; m != 1;) {
            if (m % p != 0)
                fail("NotPrimePower", std::to_string(q) + " is not a prime power");
            m /= p;
            ++n;
        }
        Field F;
        F.p_ = static_cast<std::uint32_t>(p);
        F.n_ = n;
        F.q_ = static_cast<std::uint32_t>(q);
        if (n == 1) {
            F.modulus_ = {0};  // degree-1 placeholder x; arithmetic is plain mod p
            return F;
        }
        for (std::uint64_t enc = 0; enc < q; ++enc) {
            auto low = detail::base_p_digits(enc, F.p_, n);
            if (detail::is_irreducible(detail::monic_from_digits(low), F.p_)) {
                F.modulus_ = low;
                return F;
            }
        }
        fail("NotPrimePower", "no irreducible modulus found for q=" + std::to_string(q));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t q() const noexcept { return q_; }
    bool odd() const noexcept { return q_ % 2 == 1; }

    /// Non-leading modulus coefficients, constant term first (leading 1 implied).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// Coefficient view of an element, constant term first, length n.
    std::vector<std::uint32_t> coeffs(Elem a) const {
        check(a);
        return detail::base_p_digits(a, p_, n_);
    }

    /// Inverse of coeffs(): rejects vectors of the wrong length or with
    /// residues outside [0, p).
    Elem from_coeffs(std::span<const std::uint32_t> c) const {
        if (c.size() != n_)
            fail("ElementOutOfRange", "expected " + std::to_string(n_) + " coefficients");
        std::uint64_t enc = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] >= p_) fail("ElementOutOfRange", "coefficient not a residue mod p");
            enc = enc * p_ + c[i];
        }
        return static_cast<Elem>(enc);
    }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const {
        check(a);
        check(b);
        if (n_ == 1) return (a + b) % p_;
        std::uint64_t enc = 0, pw = 1;
        for (std::uint32_t i = 0; i < n_; ++i) {
            enc += ((a % p_ + b % p_) % p_) * pw;
            a /= p_;
            b /= p_;
            pw *= p_;
        }
        return static_cast<Elem>(enc);
    }

    Elem neg(Elem a) const {
        check(a);
        if (n_ == 1) return a == 0 ? 0 : p_ - a;
        std::uint64_t enc = 0, pw = 1;
        for (std::uint32_t i = 0; i < n_; ++i) {
            const std::uint32_t c = a % p_;
            enc += (c == 0 ? 0 : p_ - c) * pw;
            a /= p_;
            pw *= p_;
        }
        return static_cast<Elem>(enc);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        if (n_ == 1)
            return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
        const auto ca = detail::base_p_digits(a, p_, n_);
        const auto cb = detail::base_p_digits(b, p_, n_);
        std::vector<std::uint32_t> prod(2 * n_ - 1, 0);
        for (std::uint32_t i = 0; i < n_; ++i) {
            if (ca[i] == 0) continue;
            for (std::uint32_t j = 0; j < n_; ++j) {
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
            }
        }
        // fold x^k, k >= n, using x^n = -modulus_low
        for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(n_); --i) {
            const std::uint64_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::uint32_t j = 0; j < n_; ++j) {
                prod[i - n_ + j] = static_cast<std::uint32_t>(
                    (prod[i - n_ + j] + c * (p_ - modulus_[j])) % p_);
            }
        }
        std::uint64_t enc = 0;
        for (std::uint32_t i = n_; i-- > 0;) enc = enc * p_ + prod[i];
        return static_cast<Elem>(enc);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        check(a);
        Elem result = 1, base = a;
        while (e != 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    /// Multiplicative inverse via a^(q-2). Fails with DivisionByZero on 0.
    Elem inv(Elem a) const {
        check(a);
        if (a == 0) fail("DivisionByZero", "inverse of 0 in GF(" + std::to_string(q_) + ")");
        return pow(a, q_ - 2);
    }

private:
    Field() = default;

    void check(Elem a) const {
        if (a >= q_)
            fail("ElementOutOfRange",
                 "encoding " + std::to_string(a) + " not in [0, " + std::to_string(q_) + ")");
    }

    std::uint32_t p_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

/// The shift sets driving the mixed-graph construction. All six vectors hold
/// canonical encodings in ascending order.
struct ShiftSets {
    std::uint32_t t = 0;
    std::vector<Elem> M;     // one representative of each pair {a, -a}, size (q-1)/2
    std::vector<Elem> T;     // 2t elements of M
    std::vector<Elem> T1;    // t negation-closed pairs, subset of T u (-T)
    std::vector<Elem> T2;    // the other t pairs
    std::vector<Elem> S;     // M \ T
    std::vector<Elem> negS;  // (-M) \ (-T)
};

/// Largest admissible t for odd q: (q-1)/4 when q = 1 mod 4, else (q-3)/4.
inline std::uint32_t max_shift_t(std::uint32_t q) {
    return (q % 4 == 1) ? (q - 1) / 4 : (q - 3) / 4;
}

namespace detail {

inline void require_odd_and_in_range(const Field& F, std::uint32_t t) {
    if (!F.odd()) fail("EvenQ", "shift sets need odd q, got q=" + std::to_string(F.q()));
    if (t > max_shift_t(F.q()))
        fail("TOutOfRange", "t=" + std::to_string(t) + " exceeds max t=" +
                                std::to_string(max_shift_t(F.q())) + " for q=" +
                                std::to_string(F.q()));
}

inline std::vector<Elem> negate_sorted(const Field& F, const std::vector<Elem>& xs) {
    std::vector<Elem> out;
    out.reserve(xs.size());
    for (Elem x : xs) out.push_back(F.neg(x));
    std::sort(out.begin(), out.end());
    return out;
}

// T1/T2 from pair representatives: each representative contributes {x, -x}.
inline std::vector<Elem> pairs_of(const Field& F, std::span<const Elem> reps) {
    std::vector<Elem> out;
    out.reserve(2 * reps.size());
    for (Elem x : reps) {
        out.push_back(x);
        out.push_back(F.neg(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Canonical shift sets: M holds the encoding-smaller element of every pair
/// {a, -a}; T is the first 2t elements of M; T1 takes the pairs of the first
/// t elements of T and T2 the pairs of the rest; S = M \ T.
inline ShiftSets shift_sets(const Field& F, std::uint32_t t) {
    detail::require_odd_and_in_range(F, t);
    ShiftSets s;
    s.t = t;
    for (Elem a = 1; a < F.q(); ++a)
        if (a < F.neg(a)) s.M.push_back(a);
    s.T.assign(s.M.begin(), s.M.begin() + 2 * t);
    s.T1 = detail::pairs_of(F, std::span(s.T).first(t));
    s.T2 = detail::pairs_of(F, std::span(s.T).subspan(t));
    s.S.assign(s.M.begin() + 2 * t, s.M.end());
    s.negS = detail::negate_sorted(F, s.S);
    return s;
}

/// Random valid shift sets: a random transversal M of the negation pairing,
/// a random 2t-subset T, and a random split of the 2t pairs into T1/T2.
/// rng() % k keeps draws reproducible for a fixed engine across platforms.
template <class URBG>
ShiftSets random_shift_sets(const Field& F, std::uint32_t t, URBG& rng) {
    detail::require_odd_and_in_range(F, t);
    ShiftSets s;
    s.t = t;
    for (Elem a = 1; a < F.q(); ++a) {
        const Elem b = F.neg(a);
        if (a < b) s.M.push_back(rng() % 2 == 0 ? a : b);
    }
    std::sort(s.M.begin(), s.M.end());

    std::vector<Elem> pool = s.M;
    for (std::uint32_t i = 0; i < 2 * t; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    s.T.assign(pool.begin(), pool.begin() + 2 * t);
    std::sort(s.T.begin(), s.T.end());

    std::vector<Elem> reps = s.T;
    for (std::size_t i = 0; i + 1 < reps.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (reps.size() - i));
        std::swap(reps[i], reps[j]);
    }
    s.T1 = detail::pairs_of(F, std::span(reps).first(t));
    s.T2 = detail::pairs_of(F, std::span(reps).subspan(t));

    std::set_difference(s.M.begin(), s.M.end(), s.T.begin(), s.T.end(),
                        std::back_inserter(s.S));
    s.negS = detail::negate_sorted(F, s.S);
    return s;
}

/// Checks every structural requirement on a ShiftSets value against F and
/// throws InvalidShiftSets naming the first violated one.
inline void validate_shift_sets(const Field& F, const ShiftSets& s) {
    const auto bad = [](const std::string& why) { fail("InvalidShiftSets", why); };
    detail::require_odd_and_in_range(F, s.t);
    const std::uint32_t q = F.q(), t = s.t;

    const auto sorted_set = [&](const std::vector<Elem>& xs, const char* name) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] == 0 || xs[i] >= q) bad(std::string(name) + " has an element outside F_q \\ {0}");
            if (i > 0 && xs[i - 1] >= xs[i]) bad(std::string(name) + " is not sorted-unique");
        }
    };
    sorted_set(s.M, "M");
    sorted_set(s.T, "T");
    sorted_set(s.T1, "T1");
    sorted_set(s.T2, "T2");
    sorted_set(s.S, "S");
    sorted_set(s.negS, "-S");

    if (s.M.size() != (q - 1) / 2) bad("|M| != (q-1)/2");
    if (s.T.size() != 2 * t) bad("|T| != 2t");
    if (s.T1.size() != 2 * t) bad("|T1| != 2t");
    if (s.T2.size() != 2 * t) bad("|T2| != 2t");
    if (s.S.size() != (q - 1) / 2 - 2 * t) bad("|S| != (q-1)/2 - 2t");

    const auto contains = [](const std::vector<Elem>& xs, Elem v) {
        return std::binary_search(xs.begin(), xs.end(), v);
    };

    // transversal: exactly one of a, -a in M, hence u + v != 0 on M
    for (Elem a = 1; a < q; ++a) {
        if (contains(s.M, a) == contains(s.M, F.neg(a)))
            bad("M is not a transversal of the negation pairing");
    }
    for (Elem u : s.M)
        for (Elem v : s.M)
            if (F.add(u, v) == 0) bad("M contains u, v with u + v = 0");

    for (Elem x : s.T)
        if (!contains(s.M, x)) bad("T is not a subset of M");

    // S = M \ T and -S matches
    {
        std::vector<Elem> diff;
        std::set_difference(s.M.begin(), s.M.end(), s.T.begin(), s.T.end(),
                            std::back_inserter(diff));
        if (diff != s.S) bad("S != M \\ T");
        if (detail::negate_sorted(F, s.S) != s.negS) bad("-S does not match S");
    }

    // T1, T2 partition T u (-T) into negation-closed halves
    {
        std::vector<Elem> t_all = s.T;
        for (Elem x : s.T) t_all.push_back(F.neg(x));
        std::sort(t_all.begin(), t_all.end());
        std::vector<Elem> merged;
        std::merge(s.T1.begin(), s.T1.end(), s.T2.begin(), s.T2.end(),
                   std::back_inserter(merged));
        if (merged != t_all) bad("T1 u T2 != T u (-T) or T1, T2 overlap");
        for (Elem x : s.T1)
            if (!contains(s.T1, F.neg(x))) bad("T1 is not closed under negation");
        for (Elem x : s.T2)
            if (!contains(s.T2, F.neg(x))) bad("T2 is not closed under negation");
    }
}

/// "{1, 2, 3}" formatting for CLI and log output.
inline std::string set_to_string(const std::vector<Elem>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(xs[i]);
    }
    return out + "}";
}

}  // namespace mmg::gf
