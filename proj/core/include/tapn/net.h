#ifndef TAPN_NET_H
#define TAPN_NET_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tapn/error.h"
#include "tapn/interval.h"

namespace tapn {

using PlaceId = std::int32_t;
using TransitionId = std::int32_t;

/// The pseudo-place holding unused tokens.
inline constexpr PlaceId kBottom = -1;

/// Token index (0-based) to place or kBottom. Token i is clock i+1 in a DBM.
using Placement = std::vector<PlaceId>;

/// Constants above this are rejected so bound arithmetic cannot overflow.
inline constexpr std::int64_t kMaxConstant = std::int64_t{1} << 30;

enum class ArcKind { Normal, Inhibitor, Transport };

/// Input-arc endpoint names and attributes as read from a file; validated
/// into a TimedArcPetriNet by validate_net().
struct RawInputArc {
    std::string place;
    std::string transition;
    TimeInterval interval;
    ArcKind kind = ArcKind::Normal;
    int group = 0;

    friend bool operator==(const RawInputArc&, const RawInputArc&) = default;
};

struct RawOutputArc {
    std::string transition;
    std::string place;
    ArcKind kind = ArcKind::Normal;
    int group = 0;

    friend bool operator==(const RawOutputArc&, const RawOutputArc&) = default;
};

struct RawPlace {
    std::string name;
    TimeInterval invariant;
    int initial_tokens = 0;

    friend bool operator==(const RawPlace&, const RawPlace&) = default;
};

struct NetDescription {
    std::string name;
    std::vector<RawPlace> places;
    std::vector<std::string> transitions;
    std::vector<RawInputArc> input_arcs;
    std::vector<RawOutputArc> output_arcs;
    int bound = 0;

    friend bool operator==(const NetDescription&, const NetDescription&) = default;
};

struct Place {
    std::string name;
    TimeInterval invariant;
};

struct InputArc {
    PlaceId place;
    TransitionId transition;
    TimeInterval interval;
    ArcKind kind;
    int group;
};

struct OutputArc {
    TransitionId transition;
    PlaceId place;
    ArcKind kind;
    int group;
};

/// One route of a transition: a token taken from `source` (or ⊥) ends up in
/// `target` (or ⊥).
struct PairingEntry {
    PlaceId source;
    PlaceId target;
    /// Index into input_arcs(); absent when source is ⊥.
    std::optional<std::size_t> input_arc;
    bool transport = false;
};

struct Transition {
    std::string name;
    /// Ordered: transport routes by group, then normal inputs against normal
    /// outputs in place order, then ⊥ padding.
    std::vector<PairingEntry> pairing;
    std::vector<PlaceId> inhibitors;
    /// Number of ⊥ entries on the source side of the pairing.
    int bottom_inputs = 0;
};

/// Immutable, validated timed-arc Petri net with its derived tables.
class TimedArcPetriNet {
public:
    const std::string& name() const noexcept { return name_; }
    std::size_t place_count() const noexcept { return places_.size(); }
    std::size_t transition_count() const noexcept { return transitions_.size(); }

    const Place& place(PlaceId p) const { return places_.at(static_cast<std::size_t>(p)); }
    const Transition& transition(TransitionId t) const {
        return transitions_.at(static_cast<std::size_t>(t));
    }
    const std::vector<Place>& places() const noexcept { return places_; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    const std::vector<InputArc>& input_arcs() const noexcept { return input_arcs_; }
    const std::vector<OutputArc>& output_arcs() const noexcept { return output_arcs_; }

    std::optional<PlaceId> find_place(std::string_view name) const;
    std::optional<TransitionId> find_transition(std::string_view name) const;
    std::string place_name(PlaceId p) const;

    /// Invariant of a place; ⊥ carries [0,inf).
    TimeInterval invariant(PlaceId p) const;
    /// Input arc from p to t, if any (including inhibitor arcs).
    const InputArc* input_arc(PlaceId p, TransitionId t) const;

    /// Maximum relevant constant of a place; 0 for ⊥.
    std::int64_t max_constant(PlaceId p) const;
    std::int64_t global_constant() const noexcept { return global_constant_; }
    /// Ages of tokens in p never matter.
    bool untimed(PlaceId p) const;
    bool has_outgoing_inhibitor(PlaceId p) const;

    /// Token bound k.
    int bound() const noexcept { return bound_; }
    int initial_tokens(PlaceId p) const { return initial_counts_.at(static_cast<std::size_t>(p)); }
    /// Initial placement: declared tokens in place order, rest in ⊥.
    const Placement& initial_placement() const noexcept { return initial_placement_; }

    /// Same structure, different k. Throws NetError(KTooSmall).
    TimedArcPetriNet with_bound(int k) const;

private:
    friend TimedArcPetriNet validate_net(const NetDescription& raw);

    std::string name_;
    std::vector<Place> places_;
    std::vector<Transition> transitions_;
    std::vector<InputArc> input_arcs_;
    std::vector<OutputArc> output_arcs_;
    std::vector<std::int64_t> max_constants_;
    std::vector<char> untimed_;
    std::vector<char> outgoing_inhibitor_;
    // arc_index_[t * |P| + p] is the input arc p -> t or -1
    std::vector<std::int32_t> arc_index_;
    std::vector<int> initial_counts_;
    std::int64_t global_constant_ = 0;
    int bound_ = 0;
    Placement initial_placement_;
};

/// The description a net was validated from, up to arc order within a kind.
NetDescription describe(const TimedArcPetriNet& net);

/// Checks the well-formedness rules and builds the derived tables.
/// Throws NetError.
TimedArcPetriNet validate_net(const NetDescription& raw);

/// The pairing of a transition (see Transition::pairing).
std::span<const PairingEntry> compute_pairing(const TimedArcPetriNet& net, TransitionId t);

/// Token chosen for each pairing entry of a transition, in pairing order.
/// The set of its values is the IN set of a firing.
using TokenBinding = std::vector<int>;

/// Placement after firing t with the given binding: each bound token moves
/// to the target of its pairing entry.
Placement move_tokens(const TimedArcPetriNet& net, const Placement& placement, TransitionId t,
                      const TokenBinding& binding);

/// Number of tokens of the whole placement that sit in `place`.
int count_tokens(const Placement& placement, PlaceId place);

} // namespace tapn

#endif
