#pragma once

#include "subshift/sft.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace subshift {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class EntropyMethod { BoxUpper, TransferExact, StripExact, PeriodicLower };

std::string method_name(EntropyMethod m);

struct EntropyEstimate {
    bool empty_subshift = false;  // h = -infinity
    double lower = 0.0;
    double upper = 0.0;
    EntropyMethod method = EntropyMethod::BoxUpper;
    Exactness exactness = Exactness::Exact;
    std::string detail;

    double value() const { return empty_subshift ? -1.0 / 0.0 : 0.5 * (lower + upper); }
};

/// Certified enclosure of the spectral radius of a nonnegative integer matrix,
/// via Collatz-Wielandt quotients per strongly connected component.
struct PerronBounds {
    bool zero = false;  // no cycles: spectral radius 0
    BigRat lower;
    BigRat upper;
};

PerronBounds certified_perron(const std::vector<std::vector<std::int64_t>>& m,
                              const BigRat& tol = BigRat(1, 100000000000LL),
                              int max_iter = 4000);

/// (1/|F|) ln |language(X,F)|, an upper bound on h(X).
EntropyEstimate entropy_upper_bound(const SftSpec& x, const FiniteSet& f, Budget budget = {});

/// ln of the Perron eigenvalue of the trimmed transition matrix (1D only).
EntropyEstimate entropy_exact_1d(const SftSpec& x, Budget budget = {});

/// Quotient SFT of a Z^2-SFT by <n*v> (v primitive), presented as a Z-SFT
/// over the alphabet of cross-section columns.
SftSpec strip_quotient_sft(const SftSpec& x, const GroupElement& v, std::int64_t n,
                           Budget budget = {});

/// Entropy of the Z x (Z/n)-system X-bar over <n*v>, normalized per site.
EntropyEstimate strip_entropy(const SftSpec& x, const GroupElement& v, std::int64_t n,
                              Budget budget = {});

}  // namespace subshift
