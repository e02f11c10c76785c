#ifndef DPOLY_CERTIFIER_HPP
#define DPOLY_CERTIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpoly/homogenization.hpp"
#include "dpoly/laurent.hpp"
#include "dpoly/system.hpp"

namespace dpoly {

/// Witness that some non-zero rational scaling of f equals y^n + g with the
/// total degree of g strictly below n.
struct MonicScaling {
    Rational scale;
    std::uint32_t power;        // n
    DiffPolynomial scaled;      // scale * f
};

/// Returns the scaling when f is monic up to a rational factor. Throws on
/// constant input.
std::optional<MonicScaling> monic_scaling(const DiffPolynomial& f);
bool is_monic(const DiffPolynomial& f);

/// Formal derivative of the relation under d_i, with d_i(x) rewritten to
/// P_i(x) exactly once per term:  0 = sum_j (d_i(c_j) x^j + j c_j x^{j-1} P_i(x)).
LaurentSeries differentiate_relation(const LaurentRelation& rel, std::size_t i,
                                     const FirstOrderSystem& sys);

/// One pass of the degree-reduction loop, recorded in full for replay.
struct ReductionStep {
    std::size_t derivation;                                        // 1-based
    LaurentRelation input;
    /// Fresh generators introduced so the top coefficient is a single
    /// generator, with their definitions (in the extended ring).
    std::vector<std::pair<std::string, DiffPolynomial>> introduced;
    LaurentRelation normalized;
    LaurentSeries differentiated;                                  // 0 = ...
    std::string solved_generator;
    int solved_exponent;                                           // s
    LaurentSeries solved_rhs;                                      // g*x^s = ...
    LaurentRelation output;
};

/// Differentiates, isolates the unique top term, solves for the leading
/// generator times x^s and substitutes back. Requires max degree >= 1 and
/// deg P_i >= 2. The output's max degree is strictly below the input's.
ReductionStep reduce_leading_term(const LaurentRelation& rel, std::size_t i,
                                  const FirstOrderSystem& sys);

struct ReductionTrace {
    LaurentRelation seed;
    std::vector<ReductionStep> steps;
    LaurentRelation final_relation;
};

/// Iterates reduce_leading_term with the smallest-index derivation of degree
/// >= 2 until the max degree is <= 0. Throws when every P_i is linear.
ReductionTrace run_reduction(const LaurentRelation& seed, const FirstOrderSystem& sys);

struct InfinityCheck {
    std::size_t derivation;     // 1-based
    DiffPolynomial homogenized; // H_i in F{y, y1}
    std::uint32_t degree;
    Rational value;             // H_i at (y, y1) = (1, 0)
    bool excludes;              // value != 0
};

struct MonicWitness {
    std::size_t derivation;     // 1-based
    Rational leading_coefficient;  // of P_i
    MonicScaling scaling;          // of d_i(y) - P_i(y)
};

enum class Verdict {
    Certified,
    Incompatible,
    ReducesToConstants,
    InfinityNotExcluded,
    NotMonic,
    ReductionFailed,
};

std::string to_string(Verdict v);

/// Named statement the certificate relies on without computing it.
struct Axiom {
    std::string name;
    std::string statement;
};

/// Machine-checkable record of the completeness argument for one system.
struct Certificate {
    static constexpr int kSchemaVersion = 1;

    FirstOrderSystem system;
    Verdict verdict;
    IntegrabilityReport integrability;
    std::vector<InfinityCheck> infinity_checks;
    std::vector<MonicWitness> monic_witnesses;
    std::vector<Axiom> axioms;
    std::optional<ReductionTrace> reduction;
};

inline constexpr const char* kSeedDefault = "1 = m1*x + m0";

/// Builds the full certificate: integrability, the all-linear early verdict,
/// per-derivation infinity checks, monic witnesses for the non-linear
/// components, and the degree reduction of the seed relation. Failures are
/// verdicts, never exceptions.
Certificate certify_complete(const FirstOrderSystem& sys, const LaurentRelation& seed);
Certificate certify_complete(const FirstOrderSystem& sys);   // default seed

/// Parses a seed and checks its coefficients lie in the generator ideal.
LaurentRelation parse_seed(std::string_view text, std::size_t derivation_count);

/// Re-verifies every recorded fact from scratch using ring operations only;
/// true iff everything replays exactly. Lives apart from the engine so the
/// two cannot share bookkeeping.
bool replay_certificate(const Certificate& cert);

}  // namespace dpoly

#endif
