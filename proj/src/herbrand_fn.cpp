#include "ramify/herbrand_fn.hpp"

#include <algorithm>

#include "ramify/errors.hpp"

namespace ramify {

std::string to_string(HerbrandMode mode) { return mode == HerbrandMode::A ? "A" : "A2"; }

HerbrandFn HerbrandFn::identity(HerbrandMode mode) {
    HerbrandFn fn;
    fn.mode_ = mode;
    return fn;
}

HerbrandFn HerbrandFn::from_segments(HerbrandMode mode, std::vector<Rational> c_breaks,
                                     std::vector<CSegment> c_segments, std::vector<RamIndex2> i_breaks,
                                     std::vector<ISegment> i_segments) {
    if (c_segments.size() != c_breaks.size() + 1 || i_segments.size() != i_breaks.size() + 1)
        throw DomainError("a branch with n breakpoints needs n + 1 segments");
    for (std::size_t k = 0; k < c_breaks.size(); ++k) {
        if (c_breaks[k] <= 0) throw DomainError("c-branch breakpoints must be positive");
        if (k > 0 && c_breaks[k] <= c_breaks[k - 1]) throw DomainError("c-branch breakpoints must increase");
        const auto& lo = c_segments[k];
        const auto& hi = c_segments[k + 1];
        if (lo.slope * c_breaks[k] + lo.offset != hi.slope * c_breaks[k] + hi.offset)
            throw DomainError("c-branch is discontinuous at " + to_string(c_breaks[k]));
    }
    for (const auto& seg : c_segments)
        if (seg.slope <= 0) throw DomainError("slopes must be positive");
    if (c_segments.front().offset != 0) throw DomainError("c-branch must start at (c, 0)");

    for (std::size_t k = 0; k < i_breaks.size(); ++k) {
        const RamIndex2& b = i_breaks[k];
        if (!b.in_i_region()) throw DomainError("i-branch breakpoints must be (i, r) or pairs");
        if (mode == HerbrandMode::A && b.is_pair()) throw DomainError("pair breakpoint in an A-mode function");
        if (k > 0 && !(i_breaks[k - 1] < b)) throw DomainError("i-branch breakpoints must increase");
        const auto& lo = i_segments[k];
        const auto& hi = i_segments[k + 1];
        const Rational r = b.depth();
        if (lo.slope * r + lo.offset_second != hi.slope * r + hi.offset_second)
            throw DomainError("i-branch is discontinuous at " + to_string(b));
        if (b.is_pair()) {
            const Rational x = b.as_pair().first;
            if (lo.slope * x + lo.offset_first != hi.slope * x + hi.offset_first)
                throw DomainError("i-branch is discontinuous at " + to_string(b));
        }
    }
    for (const auto& seg : i_segments) {
        if (seg.slope <= 0) throw DomainError("slopes must be positive");
        if (mode == HerbrandMode::A && seg.offset_first != 0)
            throw DomainError("A-mode functions carry no first-coordinate offsets");
    }
    if (i_segments.front().offset_second != 0) throw DomainError("i-branch must start at (i, 0)");

    HerbrandFn fn;
    fn.mode_ = mode;
    fn.c_breaks_ = std::move(c_breaks);
    fn.c_segments_ = std::move(c_segments);
    fn.i_breaks_ = std::move(i_breaks);
    fn.i_segments_ = std::move(i_segments);
    fn.canonicalize();
    return fn;
}

void HerbrandFn::canonicalize() {
    for (std::size_t k = c_breaks_.size(); k-- > 0;) {
        if (c_segments_[k] == c_segments_[k + 1]) {
            c_breaks_.erase(c_breaks_.begin() + static_cast<std::ptrdiff_t>(k));
            c_segments_.erase(c_segments_.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        }
    }
    for (std::size_t k = i_breaks_.size(); k-- > 0;) {
        if (i_segments_[k] == i_segments_[k + 1]) {
            i_breaks_.erase(i_breaks_.begin() + static_cast<std::ptrdiff_t>(k));
            i_segments_.erase(i_segments_.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        }
    }
}

std::size_t HerbrandFn::c_segment_index(const Rational& s) const {
    return static_cast<std::size_t>(std::lower_bound(c_breaks_.begin(), c_breaks_.end(), s) - c_breaks_.begin());
}

std::size_t HerbrandFn::i_segment_index(const RamIndex2& a) const {
    return static_cast<std::size_t>(std::lower_bound(i_breaks_.begin(), i_breaks_.end(), a) - i_breaks_.begin());
}

RamIndex2 HerbrandFn::eval(const RamIndex2& a) const {
    if (a.is_pair()) {
        const ISegment& seg = i_segments_[i_segment_index(a)];
        const IndexPair& x = a.as_pair();
        return IndexPair{seg.slope * x.first + seg.offset_first, seg.slope * x.second + seg.offset_second};
    }
    const RamIndex& x = a.as_index();
    switch (x.tag()) {
        case RamIndex::Tag::C: {
            const CSegment& seg = c_segments_[c_segment_index(x.value())];
            return RamIndex::c(seg.slope * x.value() + seg.offset);
        }
        case RamIndex::Tag::I: {
            const ISegment& seg = i_segments_[i_segment_index(a)];
            return RamIndex::i(seg.slope * x.value() + seg.offset_second);
        }
        default:
            return a;
    }
}

Rational HerbrandFn::slope_at(const RamIndex2& a) const {
    if (a.in_i_region()) return i_segments_[i_segment_index(a)].slope;
    if (a.is_tag(RamIndex::Tag::C)) return c_segments_[c_segment_index(a.as_index().value())].slope;
    throw DomainError("slope is only defined on the (c, .) and (i, .) branches");
}

HerbrandFn HerbrandFn::inverse() const {
    HerbrandFn inv;
    inv.mode_ = mode_;
    inv.c_breaks_.clear();
    inv.c_segments_.clear();
    for (std::size_t k = 0; k < c_breaks_.size(); ++k)
        inv.c_breaks_.push_back(c_segments_[k].slope * c_breaks_[k] + c_segments_[k].offset);
    for (const auto& seg : c_segments_) inv.c_segments_.push_back({1 / seg.slope, -seg.offset / seg.slope});
    inv.i_breaks_.clear();
    inv.i_segments_.clear();
    for (const auto& b : i_breaks_) inv.i_breaks_.push_back(eval(b));
    for (const auto& seg : i_segments_)
        inv.i_segments_.push_back({1 / seg.slope, -seg.offset_first / seg.slope, -seg.offset_second / seg.slope});
    return inv;
}

bool HerbrandFn::has_nonincreasing_slopes() const {
    for (std::size_t k = 1; k < c_segments_.size(); ++k)
        if (c_segments_[k].slope > c_segments_[k - 1].slope) return false;
    for (std::size_t k = 1; k < i_segments_.size(); ++k)
        if (i_segments_[k].slope > i_segments_[k - 1].slope) return false;
    return true;
}

RamIndex2 eval(const HerbrandFn& fn, const RamIndex2& a) { return fn.eval(a); }

HerbrandFn invert(const HerbrandFn& fn) { return fn.inverse(); }

namespace {

RamIndex2 point_after(const std::vector<RamIndex2>& breaks) {
    if (breaks.empty()) return RamIndex2::pair(0, 1);
    const RamIndex2& last = breaks.back();
    if (last.is_pair()) return RamIndex2::pair(last.as_pair().first + 1, last.as_pair().second);
    return RamIndex2::pair(0, last.depth());
}

}  // namespace

HerbrandFn compose(const HerbrandFn& outer, const HerbrandFn& inner) {
    if (outer.mode() != inner.mode()) throw DomainError("cannot compose Herbrand functions of different modes");
    const HerbrandFn inner_inv = inner.inverse();

    std::vector<Rational> c_breaks = inner.c_breaks();
    for (const auto& b : outer.c_breaks()) c_breaks.push_back(inner_inv.eval(RamIndex::c(b)).depth());
    std::sort(c_breaks.begin(), c_breaks.end());
    c_breaks.erase(std::unique(c_breaks.begin(), c_breaks.end()), c_breaks.end());
    std::vector<CSegment> c_segments;
    for (std::size_t k = 0; k <= c_breaks.size(); ++k) {
        Rational rep = k < c_breaks.size() ? c_breaks[k] : (c_breaks.empty() ? Rational(1) : c_breaks.back() + 1);
        const CSegment& gi = inner.c_segments()[static_cast<std::size_t>(
            std::lower_bound(inner.c_breaks().begin(), inner.c_breaks().end(), rep) - inner.c_breaks().begin())];
        Rational image = gi.slope * rep + gi.offset;
        const CSegment& go = outer.c_segments()[static_cast<std::size_t>(
            std::lower_bound(outer.c_breaks().begin(), outer.c_breaks().end(), image) - outer.c_breaks().begin())];
        c_segments.push_back({go.slope * gi.slope, go.slope * gi.offset + go.offset});
    }

    std::vector<RamIndex2> i_breaks = inner.i_breaks();
    for (const auto& b : outer.i_breaks()) i_breaks.push_back(inner_inv.eval(b));
    std::sort(i_breaks.begin(), i_breaks.end());
    i_breaks.erase(std::unique(i_breaks.begin(), i_breaks.end()), i_breaks.end());
    std::vector<ISegment> i_segments;
    for (std::size_t k = 0; k <= i_breaks.size(); ++k) {
        RamIndex2 rep = k < i_breaks.size() ? i_breaks[k] : point_after(i_breaks);
        const ISegment& gi = inner.i_segments()[static_cast<std::size_t>(
            std::lower_bound(inner.i_breaks().begin(), inner.i_breaks().end(), rep) - inner.i_breaks().begin())];
        RamIndex2 image = inner.eval(rep);
        const ISegment& go = outer.i_segments()[static_cast<std::size_t>(
            std::lower_bound(outer.i_breaks().begin(), outer.i_breaks().end(), image) - outer.i_breaks().begin())];
        i_segments.push_back({go.slope * gi.slope, go.slope * gi.offset_first + go.offset_first,
                              go.slope * gi.offset_second + go.offset_second});
    }
    return HerbrandFn::from_segments(outer.mode(), std::move(c_breaks), std::move(c_segments), std::move(i_breaks),
                                     std::move(i_segments));
}

}  // namespace ramify
