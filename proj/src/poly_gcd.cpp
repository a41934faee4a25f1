#include "rpq/poly_gcd.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace rpq {

namespace {

// Dense integer polynomials: Z1 in the inner variable, Z2 = Z1[main].
using Z1 = std::vector<Integer>;
using Z2 = std::vector<Z1>;

void trim(Z1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(Z2& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const Z1& p) { return static_cast<int>(p.size()) - 1; }
int deg(const Z2& p) { return static_cast<int>(p.size()) - 1; }

Z1 mul(const Z1& a, const Z1& b) {
    if (a.empty() || b.empty()) return {};
    Z1 r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// a -= b * y^shift
void sub_shifted(Z1& a, const Z1& b, std::size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= b[j];
    trim(a);
}

Integer content(const Z1& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divexact(Z1& p, const Integer& c) {
    if (c == 1) return;
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Exact division in Z[y]; caller guarantees d | a.
Z1 divexact(Z1 a, const Z1& d) {
    if (d.size() == 1) {
        divexact(a, d[0]);
        return a;
    }
    Z1 q(a.size() - d.size() + 1, 0);
    for (int i = deg(q); i >= 0; --i) {
        const Integer& top = a[static_cast<std::size_t>(i) + d.size() - 1];
        if (top == 0) continue;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < d.size(); ++j) a[static_cast<std::size_t>(i) + j] -= c * d[j];
    }
    trim(q);
    return q;
}

Z1 prem(Z1 r, const Z1& b) {
    const Integer& lc = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        Integer c = r.back();
        std::size_t s = static_cast<std::size_t>(deg(r) - deg(b));
        for (auto& x : r) x *= lc;
        Z1 cb = b;
        for (auto& x : cb) x *= c;
        sub_shifted(r, cb, s);
    }
    return r;
}

Z1 gcd1(Z1 a, Z1 b) {
    if (a.empty()) std::swap(a, b);
    if (a.empty()) return {};
    if (b.empty()) {
        Integer c = content(a);
        divexact(a, c);
        if (a.back() < 0)
            for (auto& x : a) x = -x;
        return a;
    }
    Integer ca = content(a), cb = content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    divexact(a, ca);
    divexact(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) {
            a = Z1{1};
            break;
        }
        Z1 r = prem(a, b);
        a = std::move(b);
        if (r.empty()) break;
        divexact(r, content(r));
        b = std::move(r);
    }
    if (a.back() < 0)
        for (auto& x : a) x = -x;
    for (auto& x : a) x *= c;
    return a;
}

Z1 content(const Z2& p) {
    Z1 g;
    for (const auto& c : p) {
        if (c.empty()) continue;
        g = gcd1(g, c);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

void divexact(Z2& p, const Z1& c) {
    if (c.size() == 1 && c[0] == 1) return;
    for (auto& x : p)
        if (!x.empty()) x = divexact(x, c);
}

Z2 prem(Z2 r, const Z2& b) {
    const Z1& lc = b.back();
    while (!r.empty() && deg(r) >= deg(b)) {
        Z1 c = r.back();
        std::size_t s = static_cast<std::size_t>(deg(r) - deg(b));
        for (auto& x : r) x = mul(x, lc);
        for (std::size_t j = 0; j < b.size(); ++j) {
            Z1 t = mul(c, b[j]);
            Z1& dst = r[j + s];
            if (dst.size() < t.size()) dst.resize(t.size(), 0);
            for (std::size_t i = 0; i < t.size(); ++i) dst[i] -= t[i];
            trim(dst);
        }
        trim(r);
    }
    return r;
}

Z2 gcd2(Z2 a, Z2 b) {
    Z1 ca = content(a), cb = content(b);
    Z1 c = gcd1(ca, cb);
    divexact(a, ca);
    divexact(b, cb);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) {
            a = Z2{Z1{1}};
            break;
        }
        Z2 r = prem(a, b);
        a = std::move(b);
        if (r.empty()) break;
        divexact(r, content(r));
        b = std::move(r);
    }
    for (auto& x : a) x = mul(x, c);
    return a;
}

std::optional<Z1> try_divide(Z1 a, const Z1& d) {
    if (a.empty()) return Z1{};
    if (deg(a) < deg(d)) return std::nullopt;
    Z1 q(a.size() - d.size() + 1, 0);
    for (int i = deg(q); i >= 0; --i) {
        const Integer& top = a[static_cast<std::size_t>(i) + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d.back().get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
        q[static_cast<std::size_t>(i)] = c;
        for (std::size_t j = 0; j < d.size(); ++j) a[static_cast<std::size_t>(i) + j] -= c * d[j];
    }
    trim(a);
    if (!a.empty()) return std::nullopt;
    trim(q);
    return q;
}

bool divides(const Z2& d, Z2 a) {
    if (a.empty()) return true;
    if (deg(a) < deg(d)) return false;
    for (int i = deg(a) - deg(d); i >= 0; --i) {
        Z1& top = a[static_cast<std::size_t>(i) + d.size() - 1];
        if (top.empty()) continue;
        auto c = try_divide(top, d.back());
        if (!c) return false;
        for (std::size_t j = 0; j < d.size(); ++j) {
            Z1 t = mul(*c, d[j]);
            Z1& dst = a[static_cast<std::size_t>(i) + j];
            if (dst.size() < t.size()) dst.resize(t.size(), 0);
            for (std::size_t k = 0; k < t.size(); ++k) dst[k] -= t[k];
            trim(dst);
        }
    }
    trim(a);
    return a.empty();
}

Integer max_abs(const Z1& p) {
    Integer m = 0;
    for (const auto& c : p)
        if (abs(c) > m) m = abs(c);
    return m;
}

Integer eval_at(const Z1& p, const Integer& xi) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * xi + *it;
    return acc;
}

// Balanced xi-adic digits of v, lowest first.
Z1 adic_digits(Integer v, const Integer& xi) {
    Z1 out;
    Integer half = xi / 2, digit;
    while (v != 0) {
        mpz_fdiv_r(digit.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
        if (digit > half) digit -= xi;
        v = (v - digit) / xi;
        out.push_back(digit);
    }
    return out;
}

// A large floor keeps spurious integer factors of the evaluations below xi / 2.
Integer evaluation_point(const Integer& bound) {
    Integer xi = 2 * bound + 29;
    if (xi < Integer(1) << 32) xi += Integer(1) << 32;
    return xi;
}

Integer next_point(const Integer& xi) { return xi * 73794 / 27011; }

// Heuristic gcd (evaluate, take the integer gcd, rebuild from xi-adic digits,
// keep the candidate only if it divides both); nullopt when it gives up.
std::optional<Z1> heuristic_gcd(Z1 a, Z1 b) {
    std::size_t ka = 0, kb = 0;
    while (a[ka] == 0) ++ka;
    while (b[kb] == 0) ++kb;
    std::size_t k = std::min(ka, kb);
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ka));
    b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(kb));
    Integer ca = content(a), cb = content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    divexact(a, ca);
    divexact(b, cb);
    Integer xi = evaluation_point(std::min(max_abs(a), max_abs(b)));
    for (int attempt = 0; attempt < 6; ++attempt, xi = next_point(xi)) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), eval_at(a, xi).get_mpz_t(), eval_at(b, xi).get_mpz_t());
        Z1 cand = adic_digits(g, xi);
        trim(cand);
        if (cand.empty()) continue;
        divexact(cand, content(cand));
        if (cand.back() < 0)
            for (auto& x : cand) x = -x;
        if (!try_divide(a, cand) || !try_divide(b, cand)) continue;
        for (auto& x : cand) x *= c;
        cand.insert(cand.begin(), k, Integer(0));
        return cand;
    }
    return std::nullopt;
}

// Bivariate version: evaluate the inner variable, recurse, lift coefficients back.
std::optional<Z2> heuristic_gcd(const Z2& a, const Z2& b) {
    Integer bound = 0;
    {
        Integer ma = 0, mb = 0;
        for (const auto& row : a) ma = std::max(ma, max_abs(row));
        for (const auto& row : b) mb = std::max(mb, max_abs(row));
        bound = std::min(ma, mb);
    }
    Integer xi = evaluation_point(bound);
    for (int attempt = 0; attempt < 6; ++attempt, xi = next_point(xi)) {
        Z1 ea, eb;
        for (const auto& row : a) ea.push_back(eval_at(row, xi));
        for (const auto& row : b) eb.push_back(eval_at(row, xi));
        if (ea.back() == 0 || eb.back() == 0) continue;
        auto g = heuristic_gcd(ea, eb);
        if (!g) continue;
        Z2 cand;
        for (const auto& v : *g) {
            Z1 row = adic_digits(v, xi);
            trim(row);
            cand.push_back(std::move(row));
        }
        trim(cand);
        if (cand.empty()) continue;
        Integer c = 0;
        for (const auto& row : cand) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), content(row).get_mpz_t());
        for (auto& row : cand) divexact(row, c);
        if (divides(cand, a) && divides(cand, b)) return cand;
    }
    return std::nullopt;
}

// p must have integer coefficients and nonnegative exponents.
Z2 to_dense(const BiLaurent& p, bool swap_vars) {
    Monomial mx = p.max_exponents();
    int outer = swap_vars ? mx.b : mx.a, inner = swap_vars ? mx.a : mx.b;
    Z2 d(static_cast<std::size_t>(outer + 1), Z1(static_cast<std::size_t>(inner + 1), 0));
    for (const auto& t : p.terms()) {
        int o = swap_vars ? t.mono.b : t.mono.a, i = swap_vars ? t.mono.a : t.mono.b;
        d[static_cast<std::size_t>(o)][static_cast<std::size_t>(i)] = t.coeff.get_num();
    }
    for (auto& x : d) trim(x);
    trim(d);
    return d;
}

BiLaurent from_dense(const Z2& d, bool swap_vars) {
    std::vector<BiLaurent::Term> terms;
    for (std::size_t o = 0; o < d.size(); ++o)
        for (std::size_t i = 0; i < d[o].size(); ++i) {
            if (d[o][i] == 0) continue;
            int io = static_cast<int>(o), ii = static_cast<int>(i);
            terms.push_back({swap_vars ? Monomial{ii, io} : Monomial{io, ii}, Rational(d[o][i])});
        }
    return BiLaurent::from_terms(std::move(terms));
}

}  // namespace

BiLaurent primitive_associate(const BiLaurent& p, BiLaurent* unit) {
    if (p.is_zero()) {
        if (unit) *unit = BiLaurent(1);
        return p;
    }
    Monomial shift = p.min_exponents();
    Integer den_lcm = 1, num_gcd = 0;
    for (const auto& t : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading().coeff < 0) scale = -scale;
    BiLaurent r = p.shifted(Monomial{} - shift).scaled(scale);
    if (unit) *unit = BiLaurent::monomial(shift, 1 / scale);
    return r;
}

namespace {

BiLaurent gcd_impl(const BiLaurent& a, const BiLaurent& b, bool heuristic) {
    if (a.is_zero()) return primitive_associate(b);
    if (b.is_zero()) return primitive_associate(a);
    BiLaurent pa = primitive_associate(a), pb = primitive_associate(b);
    if (pa.is_constant() || pb.is_constant()) return BiLaurent(1);
    if (pa == pb) return pa;
    // Use the variable of smaller degree as the main one: shorter remainder sequence.
    Monomial ma = pa.max_exponents(), mb = pb.max_exponents();
    bool swap_vars = std::max(ma.b, mb.b) < std::max(ma.a, mb.a);
    Z2 da = to_dense(pa, swap_vars), db = to_dense(pb, swap_vars);
    if (heuristic)
        if (auto h = heuristic_gcd(da, db)) return primitive_associate(from_dense(*h, swap_vars));
    Z2 g = gcd2(std::move(da), std::move(db));
    return primitive_associate(from_dense(g, swap_vars));
}

}  // namespace

BiLaurent poly_gcd(const BiLaurent& a, const BiLaurent& b) { return gcd_impl(a, b, true); }

BiLaurent poly_gcd_prs(const BiLaurent& a, const BiLaurent& b) { return gcd_impl(a, b, false); }

}  // namespace rpq
