#pragma once

#include <string>
#include <vector>

#include "ramify/index.hpp"
#include "ramify/rational.hpp"

namespace ramify {

enum class HerbrandMode { A, A2 };

/// Piece of the (c, .) branch: (c, s) -> (c, slope * s + offset).
struct CSegment {
    Rational slope;
    Rational offset;
    bool operator==(const CSegment&) const = default;
};

/// Piece of the (i, .) / pair branch: a pair x -> slope * x + offset, and
/// (i, r) -> (i, slope * r + offset.second).
struct ISegment {
    Rational slope;
    Rational offset_first;
    Rational offset_second;
    bool operator==(const ISegment&) const = default;
};

/// Piecewise-affine increasing bijection of A (or A_2) fixing -1 and 0.
///
/// Each branch is cut by sorted breakpoints b_1 < ... < b_n into n + 1
/// segments; segment k covers (b_{k-1}, b_k] with b_0 the start of the
/// branch and b_{n+1} = infinity. Values are continuous at breakpoints
/// (at an (i, r) breakpoint only the second coordinate is constrained,
/// since no pair sits there). Adjacent segments with identical data are
/// merged, so equal functions compare equal.
class HerbrandFn {
public:
    static HerbrandFn identity(HerbrandMode mode = HerbrandMode::A);

    /// Validates and canonicalizes; throws DomainError on bad data.
    static HerbrandFn from_segments(HerbrandMode mode, std::vector<Rational> c_breaks, std::vector<CSegment> c_segments,
                                    std::vector<RamIndex2> i_breaks, std::vector<ISegment> i_segments);

    HerbrandMode mode() const { return mode_; }
    const std::vector<Rational>& c_breaks() const { return c_breaks_; }
    const std::vector<CSegment>& c_segments() const { return c_segments_; }
    const std::vector<RamIndex2>& i_breaks() const { return i_breaks_; }
    const std::vector<ISegment>& i_segments() const { return i_segments_; }

    RamIndex2 eval(const RamIndex2& a) const;
    /// Slope of the segment containing a (a in the c- or i-region).
    Rational slope_at(const RamIndex2& a) const;
    HerbrandFn inverse() const;

    /// Slopes never increase along either branch (true for every Phi built from a filtration).
    bool has_nonincreasing_slopes() const;

    bool operator==(const HerbrandFn&) const = default;

private:
    void canonicalize();
    std::size_t c_segment_index(const Rational& s) const;
    std::size_t i_segment_index(const RamIndex2& a) const;

    HerbrandMode mode_ = HerbrandMode::A;
    std::vector<Rational> c_breaks_;
    std::vector<CSegment> c_segments_{CSegment{1, 0}};
    std::vector<RamIndex2> i_breaks_;
    std::vector<ISegment> i_segments_{ISegment{1, 0, 0}};
};

RamIndex2 eval(const HerbrandFn& fn, const RamIndex2& a);
HerbrandFn invert(const HerbrandFn& fn);
/// outer o inner. Throws DomainError on mode mismatch.
HerbrandFn compose(const HerbrandFn& outer, const HerbrandFn& inner);

std::string to_string(HerbrandMode mode);

}  // namespace ramify
