#include "tapn/net.h"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace tapn {

namespace {

[[noreturn]] void fail(NetErrorKind kind, const std::string& what) {
    throw NetError(kind, what);
}

void check_constant(const TimeInterval& iv, const std::string& where) {
    if (iv.max_constant() > kMaxConstant) {
        fail(NetErrorKind::ConstantTooLarge, where + " uses constant " +
                                                 std::to_string(iv.max_constant()));
    }
}

} // namespace

std::optional<PlaceId> TimedArcPetriNet::find_place(std::string_view name) const {
    for (std::size_t i = 0; i < places_.size(); ++i) {
        if (places_[i].name == name) return static_cast<PlaceId>(i);
    }
    return std::nullopt;
}

std::optional<TransitionId> TimedArcPetriNet::find_transition(std::string_view name) const {
    for (std::size_t i = 0; i < transitions_.size(); ++i) {
        if (transitions_[i].name == name) return static_cast<TransitionId>(i);
    }
    return std::nullopt;
}

std::string TimedArcPetriNet::place_name(PlaceId p) const {
    return p == kBottom ? std::string("_|_") : place(p).name;
}

TimeInterval TimedArcPetriNet::invariant(PlaceId p) const {
    return p == kBottom ? TimeInterval::unbounded() : place(p).invariant;
}

const InputArc* TimedArcPetriNet::input_arc(PlaceId p, TransitionId t) const {
    if (p == kBottom) return nullptr;
    const auto idx = arc_index_[static_cast<std::size_t>(t) * places_.size() +
                                static_cast<std::size_t>(p)];
    return idx < 0 ? nullptr : &input_arcs_[static_cast<std::size_t>(idx)];
}

std::int64_t TimedArcPetriNet::max_constant(PlaceId p) const {
    return p == kBottom ? 0 : max_constants_[static_cast<std::size_t>(p)];
}

bool TimedArcPetriNet::untimed(PlaceId p) const {
    return p != kBottom && untimed_[static_cast<std::size_t>(p)] != 0;
}

bool TimedArcPetriNet::has_outgoing_inhibitor(PlaceId p) const {
    return p != kBottom && outgoing_inhibitor_[static_cast<std::size_t>(p)] != 0;
}

TimedArcPetriNet TimedArcPetriNet::with_bound(int k) const {
    const auto declared = static_cast<int>(
        std::count_if(initial_placement_.begin(), initial_placement_.end(),
                      [](PlaceId p) { return p != kBottom; }));
    if (k < declared) {
        fail(NetErrorKind::KTooSmall, "bound " + std::to_string(k) + " is below the " +
                                          std::to_string(declared) + " initial tokens");
    }
    TimedArcPetriNet copy = *this;
    copy.bound_ = k;
    copy.initial_placement_.resize(static_cast<std::size_t>(k), kBottom);
    return copy;
}

TimedArcPetriNet validate_net(const NetDescription& raw) {
    TimedArcPetriNet net;
    net.name_ = raw.name;

    std::unordered_map<std::string, PlaceId> place_ids;
    std::unordered_map<std::string, TransitionId> transition_ids;
    for (const auto& rp : raw.places) {
        if (place_ids.count(rp.name)) fail(NetErrorKind::DuplicateName, "place " + rp.name);
        if (!rp.invariant.contains_zero()) {
            fail(NetErrorKind::InvariantExcludesZero,
                 "place " + rp.name + " has invariant " + rp.invariant.to_string());
        }
        check_constant(rp.invariant, "invariant of " + rp.name);
        place_ids.emplace(rp.name, static_cast<PlaceId>(net.places_.size()));
        net.places_.push_back({rp.name, rp.invariant});
        net.initial_counts_.push_back(rp.initial_tokens);
    }
    for (const auto& name : raw.transitions) {
        if (place_ids.count(name) || transition_ids.count(name)) {
            fail(NetErrorKind::DuplicateName, "transition " + name);
        }
        transition_ids.emplace(name, static_cast<TransitionId>(net.transitions_.size()));
        net.transitions_.push_back({name, {}, {}, 0});
    }

    const auto lookup_place = [&](const std::string& name) {
        const auto it = place_ids.find(name);
        if (it == place_ids.end()) fail(NetErrorKind::DanglingArcEndpoint, "unknown place " + name);
        return it->second;
    };
    const auto lookup_transition = [&](const std::string& name) {
        const auto it = transition_ids.find(name);
        if (it == transition_ids.end()) {
            fail(NetErrorKind::DanglingArcEndpoint, "unknown transition " + name);
        }
        return it->second;
    };

    const std::size_t np = net.places_.size();
    net.arc_index_.assign(net.transitions_.size() * np, -1);

    // (transition, group) -> arc index
    std::map<std::pair<TransitionId, int>, std::size_t> transport_in;
    std::map<std::pair<TransitionId, int>, std::size_t> transport_out;

    for (const auto& ra : raw.input_arcs) {
        const PlaceId p = lookup_place(ra.place);
        const TransitionId t = lookup_transition(ra.transition);
        const std::string label = ra.place + " -> " + ra.transition;
        auto& slot = net.arc_index_[static_cast<std::size_t>(t) * np + static_cast<std::size_t>(p)];
        if (slot >= 0) fail(NetErrorKind::DuplicateArc, label);
        if (ra.kind == ArcKind::Inhibitor && !ra.interval.is_trivial()) {
            fail(NetErrorKind::InhibitorNotZeroInfinity,
                 label + " carries " + ra.interval.to_string());
        }
        check_constant(ra.interval, label);
        if (ra.kind == ArcKind::Transport) {
            if (ra.group <= 0) fail(NetErrorKind::UnpairedTransportArc, label + " has no group");
            if (!transport_in.emplace(std::make_pair(t, ra.group), net.input_arcs_.size()).second) {
                fail(NetErrorKind::DuplicateTransportGroup,
                     label + " reuses group " + std::to_string(ra.group));
            }
        }
        slot = static_cast<std::int32_t>(net.input_arcs_.size());
        net.input_arcs_.push_back({p, t, ra.interval, ra.kind,
                                   ra.kind == ArcKind::Transport ? ra.group : 0});
    }

    std::set<std::pair<TransitionId, PlaceId>> seen_outputs;
    for (const auto& ra : raw.output_arcs) {
        const TransitionId t = lookup_transition(ra.transition);
        const PlaceId p = lookup_place(ra.place);
        const std::string label = ra.transition + " -> " + ra.place;
        if (!seen_outputs.emplace(t, p).second) fail(NetErrorKind::DuplicateArc, label);
        if (ra.kind == ArcKind::Inhibitor) fail(NetErrorKind::InhibitorOnOutputArc, label);
        if (ra.kind == ArcKind::Transport) {
            if (ra.group <= 0) fail(NetErrorKind::UnpairedTransportArc, label + " has no group");
            if (!transport_out.emplace(std::make_pair(t, ra.group), net.output_arcs_.size()).second) {
                fail(NetErrorKind::DuplicateTransportGroup,
                     label + " reuses group " + std::to_string(ra.group));
            }
        }
        net.output_arcs_.push_back({t, p, ra.kind, ra.kind == ArcKind::Transport ? ra.group : 0});
    }

    for (const auto& [key, idx] : transport_in) {
        if (!transport_out.count(key)) {
            const auto& arc = net.input_arcs_[idx];
            fail(NetErrorKind::UnpairedTransportArc,
                 net.places_[static_cast<std::size_t>(arc.place)].name + " -> " +
                     net.transitions_[static_cast<std::size_t>(key.first)].name + " group " +
                     std::to_string(key.second) + " has no output arc");
        }
    }
    for (const auto& [key, idx] : transport_out) {
        if (!transport_in.count(key)) {
            const auto& arc = net.output_arcs_[idx];
            fail(NetErrorKind::UnpairedTransportArc,
                 net.transitions_[static_cast<std::size_t>(key.first)].name + " -> " +
                     net.places_[static_cast<std::size_t>(arc.place)].name + " group " +
                     std::to_string(key.second) + " has no input arc");
        }
    }

    // Pairing per transition.
    for (std::size_t ti = 0; ti < net.transitions_.size(); ++ti) {
        const auto t = static_cast<TransitionId>(ti);
        auto& tr = net.transitions_[ti];
        for (const auto& [key, in_idx] : transport_in) {
            if (key.first != t) continue;
            const auto out_idx = transport_out.at(key);
            tr.pairing.push_back({net.input_arcs_[in_idx].place, net.output_arcs_[out_idx].place,
                                  in_idx, true});
        }
        std::vector<std::size_t> normal_in;
        std::vector<PlaceId> normal_out;
        for (std::size_t p = 0; p < np; ++p) {
            const auto idx = net.arc_index_[ti * np + p];
            if (idx < 0) continue;
            const auto& arc = net.input_arcs_[static_cast<std::size_t>(idx)];
            if (arc.kind == ArcKind::Normal) normal_in.push_back(static_cast<std::size_t>(idx));
            if (arc.kind == ArcKind::Inhibitor) tr.inhibitors.push_back(arc.place);
        }
        for (const auto& arc : net.output_arcs_) {
            if (arc.transition == t && arc.kind == ArcKind::Normal) normal_out.push_back(arc.place);
        }
        std::sort(normal_out.begin(), normal_out.end());
        const std::size_t rows = std::max(normal_in.size(), normal_out.size());
        for (std::size_t r = 0; r < rows; ++r) {
            PairingEntry entry{kBottom, kBottom, std::nullopt, false};
            if (r < normal_in.size()) {
                entry.input_arc = normal_in[r];
                entry.source = net.input_arcs_[normal_in[r]].place;
            } else {
                ++tr.bottom_inputs;
            }
            if (r < normal_out.size()) entry.target = normal_out[r];
            tr.pairing.push_back(entry);
        }
    }

    // Maximum constants.
    std::int64_t gc = 0;
    for (const auto& pl : net.places_) gc = std::max(gc, pl.invariant.max_constant());
    for (const auto& arc : net.input_arcs_) gc = std::max(gc, arc.interval.max_constant());
    net.global_constant_ = gc;

    net.max_constants_.assign(np, 0);
    net.untimed_.assign(np, 0);
    net.outgoing_inhibitor_.assign(np, 0);
    for (std::size_t p = 0; p < np; ++p) {
        std::int64_t mc = net.places_[p].invariant.max_constant();
        bool transport = false;
        bool untimed = net.places_[p].invariant.is_trivial();
        for (const auto& arc : net.input_arcs_) {
            if (static_cast<std::size_t>(arc.place) != p) continue;
            mc = std::max(mc, arc.interval.max_constant());
            if (arc.kind == ArcKind::Transport) transport = true;
            if (arc.kind == ArcKind::Inhibitor) net.outgoing_inhibitor_[p] = 1;
            if (arc.kind == ArcKind::Transport || !arc.interval.is_trivial()) untimed = false;
        }
        net.max_constants_[p] = transport ? gc : mc;
        net.untimed_[p] = untimed ? 1 : 0;
    }

    // Initial placement; k defaults to the number of declared tokens.
    int declared = 0;
    for (std::size_t p = 0; p < np; ++p) {
        if (net.initial_counts_[p] < 0) {
            fail(NetErrorKind::KTooSmall, "negative token count in " + net.places_[p].name);
        }
        for (int i = 0; i < net.initial_counts_[p]; ++i) {
            net.initial_placement_.push_back(static_cast<PlaceId>(p));
        }
        declared += net.initial_counts_[p];
    }
    const int k = raw.bound > 0 ? raw.bound : declared;
    if (k < declared) {
        fail(NetErrorKind::KTooSmall, "bound " + std::to_string(k) + " is below the " +
                                          std::to_string(declared) + " initial tokens");
    }
    net.bound_ = k;
    net.initial_placement_.resize(static_cast<std::size_t>(k), kBottom);
    return net;
}

std::span<const PairingEntry> compute_pairing(const TimedArcPetriNet& net, TransitionId t) {
    return net.transition(t).pairing;
}

Placement move_tokens(const TimedArcPetriNet& net, const Placement& placement, TransitionId t,
                      const TokenBinding& binding) {
    const auto& pairing = net.transition(t).pairing;
    Placement out = placement;
    for (std::size_t j = 0; j < pairing.size(); ++j) {
        out[static_cast<std::size_t>(binding[j])] = pairing[j].target;
    }
    return out;
}

int count_tokens(const Placement& placement, PlaceId place) {
    return static_cast<int>(std::count(placement.begin(), placement.end(), place));
}

NetDescription describe(const TimedArcPetriNet& net) {
    NetDescription d;
    d.name = net.name();
    d.bound = net.bound();
    for (std::size_t p = 0; p < net.place_count(); ++p) {
        const Place& pl = net.places()[p];
        d.places.push_back({pl.name, pl.invariant, net.initial_tokens(static_cast<PlaceId>(p))});
    }
    for (const Transition& tr : net.transitions()) d.transitions.push_back(tr.name);
    for (const InputArc& a : net.input_arcs()) {
        d.input_arcs.push_back({net.place(a.place).name, net.transition(a.transition).name, a.interval,
                                a.kind, a.group});
    }
    for (const OutputArc& a : net.output_arcs()) {
        d.output_arcs.push_back({net.transition(a.transition).name, net.place(a.place).name, a.kind,
                                 a.group});
    }
    return d;
}

} // namespace tapn
