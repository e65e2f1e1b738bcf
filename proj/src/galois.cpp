#include "morikawa/galois.hpp"

#include <algorithm>

#include "morikawa/algebra.hpp"

namespace morikawa::galois {

namespace {

constexpr std::uint64_t kPrimeCap = std::uint64_t(1) << 31;

using ModPoly = std::vector<std::uint64_t>;  // lowest degree first, coefficients in [0, p)

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

void trim_mod(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    trim_mod(out);
    return out;
}

// Remainder of a modulo g (g monic not required).
ModPoly rem_mod(ModPoly a, const ModPoly& g, std::uint64_t p) {
    trim_mod(a);
    int dg = deg(g);
    std::uint64_t lead_inv = powmod(g.back(), p - 2, p);
    while (deg(a) >= dg) {
        std::uint64_t factor = mulmod(a.back(), lead_inv, p);
        int shift = deg(a) - dg;
        for (int i = 0; i <= dg; ++i) {
            std::uint64_t sub = mulmod(factor, g[static_cast<size_t>(i)], p);
            std::uint64_t& tgt = a[static_cast<size_t>(i + shift)];
            tgt = (tgt + p - sub) % p;
        }
        trim_mod(a);
    }
    return a;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        ModPoly r = rem_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        // normalize monic
        std::uint64_t inv = powmod(a.back(), p - 2, p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

ModPoly derivative_mod(const ModPoly& f, std::uint64_t p) {
    ModPoly out;
    for (size_t i = 1; i < f.size(); ++i) out.push_back(mulmod(f[i], i % p, p));
    trim_mod(out);
    return out;
}

// x^(p) applied repeatedly: h -> h^p mod f.
ModPoly frobenius_step(const ModPoly& h, const ModPoly& f, std::uint64_t p) {
    // square-and-multiply with exponent p
    ModPoly acc{1};
    ModPoly base = h;
    std::uint64_t e = p;
    while (e) {
        if (e & 1) acc = rem_mod(mul_mod(acc, base, p), f, p);
        base = rem_mod(mul_mod(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

ModPoly reduce_intpoly(const IntPoly& f, std::uint64_t p) {
    ModPoly out;
    out.reserve(f.coeffs.size());
    BigInt bp(p);
    for (const auto& c : f.coeffs) {
        BigInt m = c % bp;
        if (m < 0) m += bp;
        out.push_back(m.convert_to<std::uint64_t>());
    }
    trim_mod(out);
    return out;
}

}  // namespace

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& c : coeffs) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

void IntPoly::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void CycleTypeHistogram::merge(const CycleTypeHistogram& other) {
    for (const auto& [pattern, n] : other.counts) counts[pattern] += n;
    skipped += other.skipped;
    examined += other.examined;
    if (first_prime == 0 || (other.first_prime != 0 && other.first_prime < first_prime))
        first_prime = other.first_prime;
    last_prime = std::max(last_prime, other.last_prime);
}

IntPoly specialize_integer(const Rational& k0) {
    if (k0 < 1) throw DomainError("specialize_integer requires k0 >= 1");
    UniPoly specialized = algebra::specialize(algebra::build_p(), k0);
    if (specialized.degree() != 10)
        throw DegreeDrop("p(k0, x) does not have degree 10 at this k0");
    BigInt denom_lcm(1);
    for (const auto& c : specialized.coeffs())
        denom_lcm = boost::multiprecision::lcm(denom_lcm, denominator(c));
    IntPoly out;
    out.coeffs.reserve(specialized.coeffs().size());
    for (const auto& c : specialized.coeffs())
        out.coeffs.push_back(numerator(c) * (denom_lcm / denominator(c)));
    BigInt g = out.content();
    if (out.coeffs.back() < 0) g = -g;
    for (auto& c : out.coeffs) c /= g;
    out.trim();
    return out;
}

std::optional<CycleType> cycle_type_mod(const IntPoly& f, std::uint64_t prime) {
    if (prime < 3 || prime >= kPrimeCap || !is_prime(prime))
        throw DomainError("cycle_type_mod requires an odd prime below 2^31");
    if (f.coeffs.empty()) throw DegenerateInput("cycle_type_mod of the zero polynomial");
    if (f.coeffs.back() % BigInt(prime) == 0) return std::nullopt;  // degree would drop

    ModPoly fbar = reduce_intpoly(f, prime);
    if (deg(gcd_mod(fbar, derivative_mod(fbar, prime), prime)) != 0) return std::nullopt;  // ramified

    // Distinct-degree factorization: the multiset of irreducible factor
    // degrees is all we need; no equal-degree splitting.
    CycleType pattern;
    ModPoly rest = fbar;
    ModPoly h{0, 1};  // x
    int d = 0;
    while (deg(rest) > 0) {
        ++d;
        if (2 * d > deg(rest)) {
            pattern.push_back(deg(rest));
            break;
        }
        h = frobenius_step(h, rest, prime);
        ModPoly h_minus_x = h;
        if (h_minus_x.size() < 2) h_minus_x.resize(2, 0);
        h_minus_x[1] = (h_minus_x[1] + prime - 1) % prime;
        trim_mod(h_minus_x);
        ModPoly g = gcd_mod(rest, h_minus_x, prime);
        if (deg(g) > 0) {
            for (int i = 0; i < deg(g) / d; ++i) pattern.push_back(d);
            // divide rest by g: rest = rest / g (exact)
            ModPoly quotient;
            {
                ModPoly num = rest;
                quotient.assign(static_cast<size_t>(deg(rest) - deg(g)) + 1, 0);
                std::uint64_t lead_inv = powmod(g.back(), prime - 2, prime);
                while (deg(num) >= deg(g) && !num.empty()) {
                    std::uint64_t factor = mulmod(num.back(), lead_inv, prime);
                    int shift = deg(num) - deg(g);
                    quotient[static_cast<size_t>(shift)] = factor;
                    for (int i = 0; i <= deg(g); ++i) {
                        std::uint64_t sub = mulmod(factor, g[static_cast<size_t>(i)], prime);
                        std::uint64_t& tgt = num[static_cast<size_t>(i + shift)];
                        tgt = (tgt + prime - sub) % prime;
                    }
                    trim_mod(num);
                }
            }
            trim_mod(quotient);
            rest = quotient;
            h = rem_mod(h, rest, prime);
        }
    }
    std::sort(pattern.begin(), pattern.end(), std::greater<>());
    return pattern;
}

CycleTypeHistogram sample_range(const IntPoly& f, std::uint64_t start, int prime_count) {
    if (prime_count < 1) throw DomainError("sample_range requires prime_count >= 1");
    CycleTypeHistogram hist;
    std::uint64_t p = next_prime(start);
    for (int i = 0; i < prime_count; ++i) {
        if (p >= kPrimeCap) throw DomainError("prime sequence exceeded the 2^31 cap");
        if (hist.first_prime == 0) hist.first_prime = p;
        hist.last_prime = p;
        ++hist.examined;
        auto pattern = cycle_type_mod(f, p);
        if (pattern)
            ++hist.counts[*pattern];
        else
            ++hist.skipped;
        p = next_prime(p + 1);
    }
    return hist;
}

CycleTypeHistogram sample_cycle_types(const Rational& k0, int prime_count, std::uint64_t seed) {
    if (prime_count < 1) throw DomainError("sample_cycle_types requires prime_count >= 1");
    IntPoly f = specialize_integer(k0);
    std::uint64_t offset = 10000 + splitmix64(seed) % 1000000;
    return sample_range(f, offset, prime_count);
}

EvidenceReport s10_evidence(const CycleTypeHistogram& hist) {
    if (hist.counts.empty()) throw EmptyHistogram("no cycle types accumulated");
    EvidenceReport rep;
    for (const auto& [pattern, n] : hist.counts) {
        if (n == 0) continue;
        if (pattern.size() == 1 && pattern[0] == 10) rep.ten_cycle = true;
        int even_parts = 0;
        for (int part : pattern) {
            if (part == 7) rep.seven_cycle = true;
            if (part % 2 == 0) ++even_parts;
        }
        if (even_parts % 2 == 1) rep.odd_permutation = true;
    }
    rep.verdict = rep.ten_cycle && rep.seven_cycle && rep.odd_permutation;
    return rep;
}

std::string pattern_key(const CycleType& pattern) {
    std::string key;
    for (size_t i = 0; i < pattern.size(); ++i) {
        if (i) key += '+';
        key += std::to_string(pattern[i]);
    }
    return key;
}

nlohmann::ordered_json report_to_json(const Rational& k0, const CycleTypeHistogram& hist,
                                      const EvidenceReport& report) {
    nlohmann::ordered_json j;
    j["k0"] = to_string(k0);
    j["primes"] = hist.examined;
    j["skipped"] = hist.skipped;
    j["first_prime"] = hist.first_prime;
    j["last_prime"] = hist.last_prime;
    nlohmann::ordered_json patterns = nlohmann::ordered_json::object();
    for (const auto& [pattern, n] : hist.counts) patterns[pattern_key(pattern)] = n;
    j["patterns"] = patterns;
    j["witnesses"] = {{"ten_cycle", report.ten_cycle},
                      {"seven_cycle", report.seven_cycle},
                      {"odd_permutation", report.odd_permutation}};
    j["verdict"] = report.verdict;
    return j;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for n < 3,215,031,751 with bases {2, 3, 5, 7}.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    if (n <= 2) return 2;
    if ((n & 1) == 0) ++n;
    while (!is_prime(n)) n += 2;
    return n;
}

std::uint64_t splitmix64(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace morikawa::galois
