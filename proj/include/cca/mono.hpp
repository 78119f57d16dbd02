#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cca {

// Hard cap on ring arity. Base variables plus every auxiliary variable any
// construction appends (forcing t's, Rabinowitsch tag, witness variables)
// must fit; ring construction enforces this.
inline constexpr int kMaxVars = 16;

struct Mono {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t deg = 0;

    bool operator==(const Mono&) const = default;
};

inline Mono mono_one() { return Mono{}; }

inline bool mono_is_one(const Mono& m) { return m.deg == 0; }

inline Mono mono_var(int i, uint16_t k = 1) {
    Mono m;
    m.e[i] = k;
    m.deg = k;
    return m;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
        uint32_t s = (uint32_t)a.e[i] + b.e[i];
        if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = (uint16_t)s;
    }
    r.deg = a.deg + b.deg;
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) { // a | b
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) { // b / a, assumes a | b
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = (uint16_t)(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r;
    uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline Mono mono_pow(const Mono& a, uint32_t n) {
    Mono r;
    for (int i = 0; i < kMaxVars; ++i) {
        uint64_t s = (uint64_t)a.e[i] * n;
        if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
        r.e[i] = (uint16_t)s;
    }
    r.deg = a.deg * n;
    return r;
}

// Monomial orders. An order is a sequence of segments [lo, hi) compared in
// turn; within a segment the kind is lex or grevlex (grevlex: total segment
// degree first, ties broken so that later variables are smaller). A block
// order for eliminating appended variables puts the tail segment first.
enum class OrderKind : uint8_t { lex, grevlex };

struct OrderSeg {
    int lo = 0, hi = 0;
    OrderKind kind = OrderKind::grevlex;
};

struct MonoOrder {
    std::vector<OrderSeg> segs;
    int nvars = 0;

    bool operator==(const MonoOrder&) const = default;
};

inline MonoOrder grevlex_order(int n) { return MonoOrder{{{0, n, OrderKind::grevlex}}, n}; }
inline MonoOrder lex_order(int n) { return MonoOrder{{{0, n, OrderKind::lex}}, n}; }

// Variables with index >= split compare first (dominate); suitable for
// eliminating variables appended after position split-1.
inline MonoOrder block_order(int split, int n,
                             OrderKind tail = OrderKind::grevlex,
                             OrderKind head = OrderKind::grevlex) {
    return MonoOrder{{{split, n, tail}, {0, split, head}}, n};
}

inline int seg_cmp(const OrderSeg& s, const Mono& a, const Mono& b) {
    if (s.kind == OrderKind::lex) {
        for (int i = s.lo; i < s.hi; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
    }
    uint32_t da = 0, db = 0;
    for (int i = s.lo; i < s.hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (int i = s.hi - 1; i >= s.lo; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
}

inline int mono_cmp(const MonoOrder& o, const Mono& a, const Mono& b) {
    // fast path: single full-range grevlex segment can use the cached degree
    if (o.segs.size() == 1 && o.segs[0].kind == OrderKind::grevlex &&
        o.segs[0].lo == 0 && o.segs[0].hi == o.nvars && a.deg != b.deg)
        return a.deg > b.deg ? 1 : -1;
    for (const auto& s : o.segs) {
        int c = seg_cmp(s, a, b);
        if (c) return c;
    }
    return 0;
}

} // namespace cca
