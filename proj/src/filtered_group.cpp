#include "ramify/filtered_group.hpp"

#include "ramify/errors.hpp"

namespace ramify {

namespace {

// Merges runs of equal subgroups (keeping the last index) and drops trailing trivial steps.
std::vector<FilterJump> normalized(std::vector<FilterJump> raw) {
    std::vector<FilterJump> out;
    for (auto& j : raw) {
        if (!out.empty() && out.back().subgroup == j.subgroup)
            out.back().index = j.index;
        else
            out.push_back(std::move(j));
    }
    while (!out.empty() && out.back().subgroup.order == 1) out.pop_back();
    return out;
}

RamIndex2 point_beyond(const RamIndex2& b) {
    if (b.is_pair()) return RamIndex2::pair(b.as_pair().first + 1, b.as_pair().second);
    return RamIndex2::pair(0, b.depth());
}

}  // namespace

std::string to_string(Numbering n) { return n == Numbering::Lower ? "lower" : "upper"; }

FilteredGroup::FilteredGroup(FiniteAbelianGroup group, std::vector<FilterJump> jumps, Numbering numbering,
                             std::optional<Subgroup> carrier)
    : group_(std::move(group)), jumps_(std::move(jumps)), numbering_(numbering) {
    carrier_ = carrier ? *carrier : group_.whole();
    if (!group_.is_subgroup(carrier_)) throw DomainError("carrier is not a subgroup");
    if (carrier_.order == 1) {
        if (!jumps_.empty()) throw DomainError("the trivial group has no jumps");
        return;
    }
    if (jumps_.empty()) throw DomainError("a nontrivial filtration needs at least one jump");
    if (!(jumps_.front().subgroup == carrier_)) throw DomainError("the first step must be the whole group");
    for (std::size_t k = 0; k < jumps_.size(); ++k) {
        const auto& j = jumps_[k];
        if (!group_.is_subgroup(j.subgroup)) throw DomainError("step at " + to_string(j.index) + " is not a subgroup");
        if (k == 0) continue;
        const auto& prev = jumps_[k - 1];
        if (!(prev.index < j.index)) throw DomainError("jump indices must strictly increase");
        if (!is_contained(j.subgroup, prev.subgroup) || j.subgroup == prev.subgroup)
            throw DomainError("steps must strictly decrease (not a chain at " + to_string(j.index) + ")");
    }
    if (jumps_.back().subgroup.order == 1) throw DomainError("the last step must be nontrivial");
}

Subgroup FilteredGroup::at(const RamIndex2& a) const {
    for (const auto& j : jumps_)
        if (a <= j.index) return j.subgroup;
    return group_.trivial();
}

bool FilteredGroup::has_pair_jumps() const {
    for (const auto& j : jumps_)
        if (j.index.is_pair()) return true;
    return false;
}

bool FilteredGroup::operator==(const FilteredGroup& o) const {
    if (!(group_ == o.group_) || numbering_ != o.numbering_ || !(carrier_ == o.carrier_) ||
        jumps_.size() != o.jumps_.size())
        return false;
    for (std::size_t k = 0; k < jumps_.size(); ++k)
        if (!(jumps_[k].index == o.jumps_[k].index) || !(jumps_[k].subgroup == o.jumps_[k].subgroup)) return false;
    return true;
}

HerbrandFn build_phi(const FilteredGroup& fg, std::int64_t e_LK) {
    if (e_LK < 1) throw DomainError("ramification index must be positive");
    std::vector<Rational> c_breaks;
    std::vector<RamIndex2> i_breaks;
    for (const auto& j : fg.jumps()) {
        if (j.index.is_tag(RamIndex::Tag::C)) c_breaks.push_back(j.index.depth());
        if (j.index.in_i_region()) i_breaks.push_back(j.index);
    }

    const Rational c_tail = c_breaks.empty() ? Rational(1) : c_breaks.back() + 1;
    const auto c_inf = static_cast<std::int64_t>(fg.at(RamIndex::c(c_tail)).order);
    const std::int64_t e = c_breaks.empty() ? 1 : e_LK;
    std::vector<CSegment> c_segments;
    for (std::size_t k = 0; k <= c_breaks.size(); ++k) {
        Rational at = k < c_breaks.size() ? c_breaks[k] : c_tail;
        Rational slope(static_cast<std::int64_t>(fg.at(RamIndex::c(at)).order), c_inf * e);
        Rational offset = 0;
        if (k > 0) offset = c_segments[k - 1].offset + (c_segments[k - 1].slope - slope) * c_breaks[k - 1];
        c_segments.push_back({slope, offset});
    }

    std::vector<ISegment> i_segments;
    for (std::size_t k = 0; k <= i_breaks.size(); ++k) {
        RamIndex2 at = k < i_breaks.size() ? i_breaks[k]
                                           : (i_breaks.empty() ? RamIndex2(RamIndex::i(1)) : point_beyond(i_breaks.back()));
        Rational slope(static_cast<std::int64_t>(fg.at(at).order));
        ISegment seg{slope, 0, 0};
        if (k > 0) {
            const ISegment& prev = i_segments[k - 1];
            const RamIndex2& b = i_breaks[k - 1];
            // An (i, r) breakpoint anchors the first coordinate at (0, r).
            Rational x = b.is_pair() ? b.as_pair().first : Rational(0);
            seg.offset_first = prev.offset_first + (prev.slope - slope) * x;
            seg.offset_second = prev.offset_second + (prev.slope - slope) * b.depth();
        }
        i_segments.push_back(seg);
    }
    HerbrandMode mode = fg.has_pair_jumps() ? HerbrandMode::A2 : HerbrandMode::A;
    return HerbrandFn::from_segments(mode, std::move(c_breaks), std::move(c_segments), std::move(i_breaks),
                                     std::move(i_segments));
}

FilteredGroup lower_to_upper(const FilteredGroup& fg) {
    if (fg.numbering() != Numbering::Lower) throw DomainError("lower_to_upper expects a lower filtration");
    const HerbrandFn phi = build_phi(fg);
    std::vector<FilterJump> jumps;
    for (const auto& j : fg.jumps()) jumps.push_back({phi.eval(j.index), j.subgroup});
    return FilteredGroup(fg.group(), std::move(jumps), Numbering::Upper, fg.carrier());
}

FilteredGroup subgroup_filtration(const FilteredGroup& fg, const Subgroup& h) {
    if (!fg.group().is_subgroup(h) || !is_contained(h, fg.carrier())) throw DomainError("H is not a subgroup");
    if (fg.numbering() != Numbering::Lower) throw DomainError("subgroup filtrations are taken in lower numbering");
    std::vector<FilterJump> raw;
    for (const auto& j : fg.jumps()) raw.push_back({j.index, intersect(h, j.subgroup)});
    return FilteredGroup(fg.group(), normalized(std::move(raw)), Numbering::Lower, h);
}

FilteredGroup quotient_lower(const FilteredGroup& fg, const Subgroup& h) {
    if (fg.numbering() != Numbering::Lower) throw DomainError("quotient_lower expects a lower filtration");
    if (!(fg.carrier() == fg.group().whole())) throw DomainError("quotients need a filtration of the whole group");
    const HerbrandFn phi_h = build_phi(subgroup_filtration(fg, h));
    Quotient q = quotient(fg.group(), h);
    std::vector<FilterJump> raw;
    for (const auto& j : fg.jumps()) raw.push_back({phi_h.eval(j.index), project(q, j.subgroup)});
    return FilteredGroup(std::move(q.group), normalized(std::move(raw)), Numbering::Lower);
}

FilteredGroup quotient_upper(const FilteredGroup& fg, const Subgroup& h) {
    if (fg.numbering() != Numbering::Upper) throw DomainError("quotient_upper expects an upper filtration");
    if (!(fg.carrier() == fg.group().whole())) throw DomainError("quotients need a filtration of the whole group");
    Quotient q = quotient(fg.group(), h);
    std::vector<FilterJump> raw;
    for (const auto& j : fg.jumps()) raw.push_back({j.index, project(q, j.subgroup)});
    return FilteredGroup(std::move(q.group), normalized(std::move(raw)), Numbering::Upper);
}

bool herbrand_quotient_check(const FilteredGroup& fg, const Subgroup& h) {
    return lower_to_upper(quotient_lower(fg, h)) == quotient_upper(lower_to_upper(fg), h);
}

}  // namespace ramify
