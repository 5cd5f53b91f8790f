#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "sforge/presemifield.hpp"

namespace sforge {

enum class IsoStatus { Unverified, Verified, Refuted };

const char* iso_status_name(IsoStatus s);

/// (M, N, L) with M(x) * N(y) = L(x . y) between source (.) and target (*);
/// strong when M == N as canonical maps.
struct IsotopismTriple {
    LinearizedMap M, N, L;
    std::string source_label;
    std::string target_label;
    IsoStatus status = IsoStatus::Unverified;
    /// First failing (x, y) in generator-power order, set on refutation.
    std::optional<std::pair<Elem, Elem>> witness;

    bool is_strong() const { return M == N; }
};

IsotopismTriple make_triple(const Presemifield& source, const Presemifield& target,
                            LinearizedMap M, LinearizedMap N, LinearizedMap L);

/// Spread-set criterion: L o phi_y o M^{-1} is the target's spread map of N(y)
/// for every y.  Sets status and (on refutation) a witness pair.  When
/// definitional is set, additionally cross-checks M(x)*N(y) = L(x.y) on all
/// pairs (the slow oracle).
IsoStatus verify_isotopism(const Presemifield& source, const Presemifield& target,
                           IsotopismTriple& triple, int jobs = 1, bool definitional = false);

/// If L o phi_y o M^{-1} lands in the target's spread set for every y, returns
/// the unique induced N (verified additive and invertible); otherwise nullopt.
std::optional<LinearizedMap> induce_n(const Presemifield& source, const Presemifield& target,
                                      const LinearizedMap& M, const LinearizedMap& L);

/// (M,N,L) source->target becomes (N,M,L) dual(source)->dual(target).
IsotopismTriple dual_transform(const IsotopismTriple& t, const Presemifield& source,
                               const Presemifield& target);
/// (M,N,L) becomes (conj(L)^{-1}, N, conj(M)^{-1}) between the transposes.
IsotopismTriple transpose_transform(const FieldCtx& ctx, const IsotopismTriple& t,
                                    const Presemifield& source, const Presemifield& target);
/// dual o transpose: (M,N,L) becomes (N, conj(L)^{-1}, conj(M)^{-1}) between
/// the symplectic versions.
IsotopismTriple ts_transform(const FieldCtx& ctx, const IsotopismTriple& t,
                             const Presemifield& source, const Presemifield& target);

/// Strong-isotopy criterion on the symplectic spread sets:
/// { H o phi o conj(H) : phi in spread(ts(S1)) } == spread(ts(S2)).
IsoStatus strong_check(const Presemifield& s1, const Presemifield& s2, const LinearizedMap& H,
                       int jobs = 1);

/// Orders of the largest fields of maps normalizing the spread set.
struct NucleiReport {
    std::uint64_t left = 0;
    std::uint64_t middle = 0;
    std::uint64_t right = 0;
    friend bool operator==(const NucleiReport&, const NucleiReport&) = default;
};

/// middle = |{phi : S o phi in S}|, right = |{phi : phi o S in S}| over the
/// spread set S, left computed the same way on the dual spread set.  Candidates
/// are psi0^{-1} o psi (resp. psi o psi0^{-1}) for a fixed nonzero psi0, which
/// covers every nucleus element.
NucleiReport nuclei(const Presemifield& s, int jobs = 1);

/// Shared companion exponent of L and M over F_{q^k} (they must agree when the
/// triple verifies and both spread sets are F_{q^k}-linear); nullopt if either
/// map fails to be F_{q^k}-semilinear or the exponents differ.
std::optional<int> semilinearity_constraint(const FieldCtx& ctx, const IsotopismTriple& t, int k);

/// True iff every spread map of s is F_{q^k}-linear, i.e. the coefficient
/// matrix is supported on x-exponents that are multiples of h*k.
bool spread_linear_over(const Presemifield& s, int k);

} // namespace sforge
