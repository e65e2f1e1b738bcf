#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "morikawa/rational.hpp"

namespace morikawa::galois {

// Primitive integer polynomial (content 1), coefficients lowest degree first.
struct IntPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt content() const;
    void trim();
};

// Factor-degree pattern of a squarefree reduction mod p: a partition of the
// degree, parts sorted descending. By Dedekind's theorem this is the cycle
// type of the Frobenius element at p.
using CycleType = std::vector<int>;

struct CycleTypeHistogram {
    std::map<CycleType, std::uint64_t> counts;
    std::uint64_t skipped = 0;   // primes rejected (bad reduction)
    std::uint64_t examined = 0;  // counts total + skipped
    std::uint64_t first_prime = 0;
    std::uint64_t last_prime = 0;

    std::uint64_t good() const { return examined - skipped; }
    // Commutative merge of two runs over disjoint prime ranges.
    void merge(const CycleTypeHistogram& other);
};

// Specialization p(k0, x) cleared of denominators and content, sign-normalized
// to a positive leading coefficient. Throws DegreeDrop if the degree falls
// below 10 (cannot happen for real k0: the leading coefficient of p is
// -128*(t^2+1)^2).
IntPoly specialize_integer(const Rational& k0);

// Cycle type of f mod prime via distinct-degree factorization, or nullopt
// (skip) when prime divides the leading coefficient or the reduction is not
// squarefree. prime must be an odd prime below 2^31.
std::optional<CycleType> cycle_type_mod(const IntPoly& f, std::uint64_t prime);

// Accumulates cycle types over `prime_count` consecutive primes starting at
// the first prime >= start.
CycleTypeHistogram sample_range(const IntPoly& f, std::uint64_t start, int prime_count);

// Deterministic sampling pipeline: the starting point is the first prime at
// or above 10^4 + (splitmix64(seed) mod 10^6).
CycleTypeHistogram sample_cycle_types(const Rational& k0, int prime_count, std::uint64_t seed);

struct EvidenceReport {
    bool ten_cycle = false;        // some pattern is (10): irreducibility, hence transitivity
    bool seven_cycle = false;      // some pattern contains a part 7 (prime in (n/2, n-3))
    bool odd_permutation = false;  // some pattern has an odd number of even parts
    bool verdict = false;          // all three witnesses present
};

// Evaluates the three classical witnesses that force the Galois group of a
// degree-10 specialization up to S10: transitivity + a 7-cycle power gives
// (by Jordan's criterion) at least A10, and an odd permutation rules A10 out.
// Statistical evidence, not a proof. Throws EmptyHistogram when no pattern
// was accumulated.
EvidenceReport s10_evidence(const CycleTypeHistogram& hist);

std::string pattern_key(const CycleType& pattern);  // e.g. "7+2+1"

nlohmann::ordered_json report_to_json(const Rational& k0, const CycleTypeHistogram& hist,
                                      const EvidenceReport& report);

// Deterministic Miller-Rabin for arguments below 2^31.
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n
std::uint64_t splitmix64(std::uint64_t seed);

}  // namespace morikawa::galois
