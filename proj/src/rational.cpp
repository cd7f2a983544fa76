#include "bsdsurf/rational.hpp"

#include <cctype>

namespace bsdsurf {

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw ArgumentError("exact_div by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw ArgumentError("exact_div: not divisible");
    return q;
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int isqrt_exact(const Int& n) {
    if (!is_perfect_square(n)) throw ArgumentError("isqrt_exact: not a square");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 50 Miller-Rabin rounds; BPSW-backed in GMP >= 6, and every prime
    // this toolkit handles is small enough for trial verification anyway.
    return mpz_probab_prime_p(n.get_mpz_t(), 50) != 0;
}

int int_valuation(const Int& n, const Int& p) {
    if (n == 0) throw ArgumentError("valuation of zero");
    if (p < 2) throw ArgumentError("valuation at non-prime");
    int v = 0;
    Int m = abs(n), q, r;
    while (true) {
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

int rat_valuation(const Rat& q, const Int& p) {
    if (q == 0) throw ArgumentError("valuation of zero");
    return int_valuation(num(q), p) - int_valuation(den(q), p);
}

namespace {

const std::vector<uint32_t>& small_prime_table() {
    static const std::vector<uint32_t> table = [] {
        const uint32_t limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<uint32_t> primes;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            primes.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i) sieve[j] = false;
        }
        return primes;
    }();
    return table;
}

} // namespace

std::map<Int, int> factor_integer(const Int& n) {
    if (n == 0) throw ArgumentError("factor_integer(0)");
    std::map<Int, int> out;
    Int m = abs(n);
    if (m == 1) return out;
    for (uint32_t p : small_prime_table()) {
        if (m == 1) break;
        Int P(p);
        if (P * P > m) break;
        int v = 0;
        Int q, r;
        while (true) {
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), P.get_mpz_t());
            if (r != 0) break;
            m = q;
            ++v;
        }
        if (v) out[P] = v;
    }
    if (m == 1) return out;
    if (is_prime(m)) {
        out[m] += 1;
        return out;
    }
    if (is_perfect_square(m)) {
        Int s = isqrt_exact(m);
        if (is_prime(s)) {
            out[s] += 2;
            return out;
        }
    }
    // No factor <= 1e6 and not prime or a prime square: a semiprime with
    // both factors > 1e6. Pollard rho resolves those comfortably.
    Int c = m;
    Int x(2), y(2), d(1);
    Int one(1);
    auto f = [&](const Int& v) { Int r = (v * v + one) % c; return r; };
    int iter = 0;
    while (d == 1 && iter < 10000000) {
        x = f(x);
        y = f(f(y));
        d = gcd(abs(x - y), c);
        ++iter;
    }
    if (d > 1 && d < c && is_prime(d) && is_prime(c / d)) {
        out[d] += 1;
        out[exact_div(c, d)] += 1;
        return out;
    }
    throw ArgumentError("factor_integer: cofactor too large to resolve: " + m.get_str());
}

Int squarefree_part(const Int& n) {
    if (n == 0) throw ArgumentError("squarefree_part(0)");
    Int sf = 1;
    for (auto& [p, e] : factor_integer(n))
        if (e % 2) sf *= p;
    return n < 0 ? -sf : sf;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (auto& [p, e] : factor_integer(n))
        if (e >= 2) return false;
    return true;
}

std::vector<Int> first_primes(int count) {
    std::vector<Int> out;
    const auto& tab = small_prime_table();
    for (int i = 0; i < count && i < (int)tab.size(); ++i) out.push_back(Int(tab[i]));
    return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (is_integer(q)) return num(q).get_str();
    return num(q).get_str() + "/" + den(q).get_str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        return make_rat(n, d);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: '" + s + "'");
    }
}

} // namespace bsdsurf
